#include "wqo/grammar.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wqo {

namespace {

bool is_nonterminal_token(const std::string& tok) {
    return !tok.empty() && std::isupper(static_cast<unsigned char>(tok[0]));
}

bool is_terminal_token(const std::string& tok) {
    return tok.size() == 1 && std::islower(static_cast<unsigned char>(tok[0]));
}

}  // namespace

Cfg parse_cfg(const std::string& text) {
    Cfg g;
    std::map<std::string, int> nt_ids;
    auto nt_id = [&](const std::string& name) {
        auto it = nt_ids.find(name);
        if (it != nt_ids.end()) return it->second;
        int id = static_cast<int>(g.nonterminals.size());
        nt_ids.emplace(name, id);
        g.nonterminals.push_back(name);
        return id;
    };

    std::istringstream in(text);
    std::string line;
    std::set<int> defined;
    std::string terminal_chars;
    bool first_rule = true;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::vector<std::string> toks;
        std::string tok;
        while (tokens >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.size() < 2 || toks[1] != "->")
            throw std::invalid_argument("expected 'Nonterminal -> ...' in: '" + line + "'");
        if (!is_nonterminal_token(toks[0]))
            throw std::invalid_argument("left-hand side must be a nonterminal: " + toks[0]);
        int lhs = nt_id(toks[0]);
        defined.insert(lhs);
        if (first_rule) {
            g.start = lhs;
            first_rule = false;
        }
        CfgProduction prod{lhs, {}};
        auto flush = [&]() {
            g.productions.push_back(prod);
            prod.rhs.clear();
        };
        for (std::size_t i = 2; i < toks.size(); ++i) {
            const std::string& t = toks[i];
            if (t == "|") {
                flush();
            } else if (t == "eps") {
                // empty right-hand side marker; contributes nothing
            } else if (is_nonterminal_token(t)) {
                prod.rhs.push_back({false, 0, nt_id(t)});
            } else if (is_terminal_token(t)) {
                if (terminal_chars.find(t[0]) == std::string::npos) terminal_chars += t[0];
                prod.rhs.push_back({true, t[0], -1});
            } else {
                throw std::invalid_argument("unparsable token '" + t + "'");
            }
        }
        flush();
    }
    if (first_rule) throw std::invalid_argument("grammar has no rules");
    for (int nt = 0; nt < static_cast<int>(g.nonterminals.size()); ++nt)
        if (!defined.count(nt))
            throw std::invalid_argument("undefined nonterminal: " + g.nonterminals[nt]);
    g.terminals = Alphabet(terminal_chars.empty() ? "a" : terminal_chars);
    return g;
}

std::string format_cfg(const Cfg& g) {
    std::ostringstream out;
    for (const auto& p : g.productions) {
        out << g.nonterminals[p.lhs] << " ->";
        if (p.rhs.empty()) {
            out << " eps";
        } else {
            for (const auto& s : p.rhs) {
                out << ' ';
                if (s.terminal)
                    out << s.t;
                else
                    out << g.nonterminals[s.nt];
            }
        }
        out << '\n';
    }
    return out.str();
}

Cfg with_terminals(const Cfg& g, const Alphabet& terminals) {
    for (char c : g.terminals.symbols())
        if (!terminals.contains(c))
            throw std::invalid_argument("new terminal alphabet drops an existing symbol");
    Cfg widened = g;
    widened.terminals = terminals;
    return widened;
}

Cfg reduce_cfg(const Cfg& g) {
    int n = static_cast<int>(g.nonterminals.size());
    // Productive nonterminals: least fixpoint.
    std::vector<bool> productive(n, false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.productions) {
            if (productive[p.lhs]) continue;
            bool all = true;
            for (const auto& s : p.rhs)
                if (!s.terminal && !productive[s.nt]) {
                    all = false;
                    break;
                }
            if (all) {
                productive[p.lhs] = true;
                changed = true;
            }
        }
    }
    Cfg r;
    r.terminals = g.terminals;
    r.reduced = true;
    if (!productive[g.start]) {
        // Empty-language marker: the start symbol with no productions.
        r.nonterminals = {g.nonterminals[g.start]};
        r.start = 0;
        return r;
    }
    // Reachable through productive productions only.
    std::vector<bool> reachable(n, false);
    reachable[g.start] = true;
    changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.productions) {
            if (!reachable[p.lhs]) continue;
            bool usable = true;
            for (const auto& s : p.rhs)
                if (!s.terminal && !productive[s.nt]) {
                    usable = false;
                    break;
                }
            if (!usable) continue;
            for (const auto& s : p.rhs)
                if (!s.terminal && !reachable[s.nt]) {
                    reachable[s.nt] = true;
                    changed = true;
                }
        }
    }
    std::vector<int> renum(n, -1);
    for (int nt = 0; nt < n; ++nt)
        if (productive[nt] && reachable[nt]) {
            renum[nt] = static_cast<int>(r.nonterminals.size());
            r.nonterminals.push_back(g.nonterminals[nt]);
        }
    r.start = renum[g.start];
    for (const auto& p : g.productions) {
        if (renum[p.lhs] < 0) continue;
        bool usable = true;
        CfgProduction np{renum[p.lhs], {}};
        for (const auto& s : p.rhs) {
            if (s.terminal) {
                np.rhs.push_back(s);
            } else if (renum[s.nt] >= 0) {
                np.rhs.push_back({false, 0, renum[s.nt]});
            } else {
                usable = false;
                break;
            }
        }
        if (usable) r.productions.push_back(std::move(np));
    }
    return r;
}

CfgEmptiness cfg_is_empty(const Cfg& g) {
    // Length-lex minimal derivable word per nonterminal, to fixpoint.
    std::vector<std::optional<Word>> best(g.nonterminals.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.productions) {
            Word candidate;
            bool ok = true;
            for (const auto& s : p.rhs) {
                if (s.terminal) {
                    candidate += s.t;
                } else if (best[s.nt]) {
                    candidate += *best[s.nt];
                } else {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            if (!best[p.lhs] || length_lex_less(candidate, *best[p.lhs])) {
                best[p.lhs] = candidate;
                changed = true;
            }
        }
    }
    CfgEmptiness result;
    if (g.start < static_cast<int>(best.size()) && best[g.start]) {
        result.empty = false;
        result.witness = best[g.start];
    }
    return result;
}

namespace {

/// Right-hand sides cut to length <= 2 with fresh nonterminals.
Cfg binarize(const Cfg& g) {
    Cfg b = g;
    b.productions.clear();
    for (const auto& p : g.productions) {
        if (p.rhs.size() <= 2) {
            b.productions.push_back(p);
            continue;
        }
        int lhs = p.lhs;
        for (std::size_t i = 0; i + 2 < p.rhs.size(); ++i) {
            int fresh = static_cast<int>(b.nonterminals.size());
            b.nonterminals.push_back(g.nonterminals[p.lhs] + "#" + std::to_string(i) + "_" +
                                     std::to_string(b.productions.size()));
            b.productions.push_back({lhs, {p.rhs[i], {false, 0, fresh}}});
            lhs = fresh;
        }
        b.productions.push_back(
            {lhs, {p.rhs[p.rhs.size() - 2], p.rhs[p.rhs.size() - 1]}});
    }
    return b;
}

}  // namespace

Cfg cfg_intersect_regular(const Cfg& g, const Dfa& d, const Budget& budget) {
    if (!(g.terminals == d.alphabet))
        throw std::invalid_argument("alphabet mismatch between grammar and automaton");
    Cfg b = binarize(reduce_cfg(g));
    Cfg r;
    r.terminals = g.terminals;
    if (d.initial < 0 || b.productions.empty()) {
        r.nonterminals = {"S"};
        r.start = 0;
        return reduce_cfg(r);
    }
    int q = d.num_states;

    // Top-down worklist over reachable triples (p, A, p'); the full
    // |N| x |Q|^2 space is never materialized.
    std::map<std::tuple<int, int, int>, int> ids;
    std::deque<std::tuple<int, int, int>> todo;
    auto triple_id = [&](int p0, int nt, int p1) {
        auto it = ids.find({p0, nt, p1});
        if (it != ids.end()) return it->second;
        if (r.nonterminals.size() >= budget.max_cfg_symbols)
            throw BudgetError("Bar-Hillel construction exceeded the symbol budget");
        int id = static_cast<int>(r.nonterminals.size());
        ids.emplace(std::tuple(p0, nt, p1), id);
        r.nonterminals.push_back("(" + std::to_string(p0) + "," + b.nonterminals[nt] + "," +
                                 std::to_string(p1) + ")");
        todo.push_back({p0, nt, p1});
        return id;
    };
    r.nonterminals.push_back("S!");
    r.start = 0;
    for (int f : d.accepting) {
        CfgSymbol root{false, 0, triple_id(d.initial, b.start, f)};
        r.productions.push_back({0, {root}});
    }

    std::vector<std::vector<const CfgProduction*>> prods_of(b.nonterminals.size());
    for (const auto& p : b.productions) prods_of[p.lhs].push_back(&p);

    while (!todo.empty()) {
        auto [s, nt, t] = todo.front();
        todo.pop_front();
        int lhs = ids.at(std::tuple(s, nt, t));
        for (const CfgProduction* p : prods_of[nt]) {
            if (p->rhs.empty()) {
                if (s == t) r.productions.push_back({lhs, {}});
            } else if (p->rhs.size() == 1) {
                const auto& s0 = p->rhs[0];
                if (s0.terminal) {
                    if (d.step(s, s0.t) == std::optional<int>(t))
                        r.productions.push_back({lhs, {s0}});
                } else {
                    CfgSymbol unit{false, 0, triple_id(s, s0.nt, t)};
                    r.productions.push_back({lhs, {unit}});
                }
            } else {
                const auto& s0 = p->rhs[0];
                const auto& s1 = p->rhs[1];
                std::vector<int> mids;
                if (s0.terminal) {
                    if (auto to = d.step(s, s0.t)) mids.push_back(*to);
                } else if (s1.terminal) {
                    // run the second symbol backwards: mid must step to t
                    for (int mid = 0; mid < q; ++mid)
                        if (d.step(mid, s1.t) == std::optional<int>(t)) mids.push_back(mid);
                } else {
                    for (int mid = 0; mid < q; ++mid) mids.push_back(mid);
                }
                for (int mid : mids) {
                    if (s1.terminal && d.step(mid, s1.t) != std::optional<int>(t)) continue;
                    CfgProduction np{lhs, {}};
                    np.rhs.push_back(s0.terminal
                                         ? s0
                                         : CfgSymbol{false, 0, triple_id(s, s0.nt, mid)});
                    np.rhs.push_back(s1.terminal
                                         ? s1
                                         : CfgSymbol{false, 0, triple_id(mid, s1.nt, t)});
                    r.productions.push_back(std::move(np));
                }
            }
        }
    }
    return reduce_cfg(r);
}

std::vector<Word> cfg_enumerate(const Cfg& g, std::size_t maxlen, const Budget& budget) {
    Cfg b = binarize(reduce_cfg(g));
    std::vector<std::set<Word>> words(b.nonterminals.size());
    bool changed = true;
    std::size_t total = 0;
    while (changed) {
        changed = false;
        for (const auto& p : b.productions) {
            auto insert = [&](Word w) {
                if (w.size() > maxlen) return;
                if (words[p.lhs].insert(std::move(w)).second) {
                    changed = true;
                    if (++total > budget.max_enum_words)
                        throw BudgetError("grammar enumeration exceeded the output budget");
                }
            };
            if (p.rhs.empty()) {
                insert(Word{});
            } else if (p.rhs.size() == 1) {
                const auto& s = p.rhs[0];
                if (s.terminal) {
                    insert(Word(1, s.t));
                } else {
                    for (const Word& w : words[s.nt]) insert(w);
                }
            } else {
                const auto& s0 = p.rhs[0];
                const auto& s1 = p.rhs[1];
                std::vector<Word> left = s0.terminal
                                             ? std::vector<Word>{Word(1, s0.t)}
                                             : std::vector<Word>(words[s0.nt].begin(),
                                                                 words[s0.nt].end());
                std::vector<Word> right = s1.terminal
                                              ? std::vector<Word>{Word(1, s1.t)}
                                              : std::vector<Word>(words[s1.nt].begin(),
                                                                  words[s1.nt].end());
                for (const Word& l : left) {
                    if (l.size() > maxlen) continue;
                    for (const Word& r : right) insert(l + r);
                }
            }
        }
    }
    std::vector<Word> result;
    if (b.start < static_cast<int>(words.size()))
        result.assign(words[b.start].begin(), words[b.start].end());
    std::sort(result.begin(), result.end(), length_lex_less);
    return result;
}

Cfg reverse_cfg(const Cfg& g) {
    Cfg r = g;
    for (auto& p : r.productions) std::reverse(p.rhs.begin(), p.rhs.end());
    return r;
}

Cfg marker_prefix_cfg(const Cfg& g, char marker) {
    Cfg r = g;
    r.terminals = g.terminals.with_symbol(marker);
    int fresh = static_cast<int>(r.nonterminals.size());
    r.nonterminals.push_back("S#");
    r.productions.push_back({fresh, {{true, marker, -1}, {false, 0, g.start}}});
    r.start = fresh;
    r.reduced = false;
    return r;
}

namespace {

/// A few terminal yields per nonterminal: the length-lex minimum plus the
/// minimum through each alternative production.
std::vector<std::vector<Word>> sample_yields(const Cfg& g) {
    std::vector<std::optional<Word>> best(g.nonterminals.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.productions) {
            Word candidate;
            bool ok = true;
            for (const auto& s : p.rhs) {
                if (s.terminal)
                    candidate += s.t;
                else if (best[s.nt])
                    candidate += *best[s.nt];
                else {
                    ok = false;
                    break;
                }
            }
            if (ok && (!best[p.lhs] || length_lex_less(candidate, *best[p.lhs]))) {
                best[p.lhs] = candidate;
                changed = true;
            }
        }
    }
    std::vector<std::vector<Word>> samples(g.nonterminals.size());
    for (const auto& p : g.productions) {
        Word candidate;
        bool ok = true;
        for (const auto& s : p.rhs) {
            if (s.terminal)
                candidate += s.t;
            else if (best[s.nt])
                candidate += *best[s.nt];
            else {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        auto& bucket = samples[p.lhs];
        if (std::find(bucket.begin(), bucket.end(), candidate) == bucket.end())
            bucket.push_back(candidate);
    }
    for (auto& bucket : samples) std::sort(bucket.begin(), bucket.end(), length_lex_less);
    return samples;
}

struct CycleEdge {
    int from   = -1;
    int to     = -1;
    std::vector<Word> left_samples;   // terminal yields of the segment left of `to`
    std::vector<Word> right_samples;  // and right of `to`
};

struct CycleAnalysis {
    std::vector<int> scc;  // per nonterminal
    int scc_count = 0;
    std::vector<CycleEdge> edges;
    // Per nonterminal: cycle pairs (x, y) from elementary cycles.
    std::vector<std::vector<std::pair<Word, Word>>> pairs;
};

std::vector<Word> segment_samples(const std::vector<CfgSymbol>& rhs, std::size_t begin,
                                  std::size_t end,
                                  const std::vector<std::vector<Word>>& yields,
                                  std::size_t cap) {
    std::vector<Word> acc{Word{}};
    for (std::size_t i = begin; i < end; ++i) {
        const auto& s = rhs[i];
        std::vector<Word> options;
        if (s.terminal) {
            options.push_back(Word(1, s.t));
        } else {
            options = yields[s.nt];
            if (options.empty()) return {};  // unproductive side: no yields
        }
        std::vector<Word> next;
        for (const Word& a : acc)
            for (const Word& o : options) {
                next.push_back(a + o);
                if (next.size() >= cap) break;
            }
        acc = std::move(next);
        if (acc.size() > cap) acc.resize(cap);
    }
    std::sort(acc.begin(), acc.end(), length_lex_less);
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    return acc;
}

CycleAnalysis analyze_cycles(const Cfg& g, const Budget& budget) {
    int n = static_cast<int>(g.nonterminals.size());
    CycleAnalysis a;
    a.pairs.resize(n);

    // Nonterminal graph and SCCs (plain Kosaraju-style via two DFS passes).
    std::vector<std::set<int>> out(n), in(n);
    for (const auto& p : g.productions)
        for (const auto& s : p.rhs)
            if (!s.terminal) {
                out[p.lhs].insert(s.nt);
                in[s.nt].insert(p.lhs);
            }
    std::vector<int> order;
    std::vector<bool> seen(n, false);
    std::function<void(int)> dfs1 = [&](int v) {
        seen[v] = true;
        for (int w : out[v])
            if (!seen[w]) dfs1(w);
        order.push_back(v);
    };
    for (int v = 0; v < n; ++v)
        if (!seen[v]) dfs1(v);
    a.scc.assign(n, -1);
    std::function<void(int, int)> dfs2 = [&](int v, int c) {
        a.scc[v] = c;
        for (int w : in[v])
            if (a.scc[w] < 0) dfs2(w, c);
    };
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (a.scc[*it] < 0) dfs2(*it, a.scc_count++);

    auto yields = sample_yields(g);
    constexpr std::size_t side_cap = 8;
    for (const auto& p : g.productions) {
        for (std::size_t i = 0; i < p.rhs.size(); ++i) {
            const auto& s = p.rhs[i];
            if (s.terminal || a.scc[s.nt] != a.scc[p.lhs]) continue;
            CycleEdge e;
            e.from = p.lhs;
            e.to = s.nt;
            e.left_samples = segment_samples(p.rhs, 0, i, yields, side_cap);
            e.right_samples = segment_samples(p.rhs, i + 1, p.rhs.size(), yields, side_cap);
            if (e.left_samples.empty() || e.right_samples.empty()) continue;
            a.edges.push_back(std::move(e));
        }
    }

    // Elementary cycles per nonterminal: DFS over edges without node
    // repetition, cartesian over side samples (capped).
    std::vector<std::vector<std::size_t>> edges_from(n);
    for (std::size_t i = 0; i < a.edges.size(); ++i)
        edges_from[a.edges[i].from].push_back(i);

    std::size_t emitted = 0;
    for (int root = 0; root < n; ++root) {
        std::vector<bool> on_path(n, false);
        std::function<void(int, const Word&, const Word&)> walk = [&](int v, const Word& x,
                                                                      const Word& y) {
            for (std::size_t ei : edges_from[v]) {
                const CycleEdge& e = a.edges[ei];
                for (const Word& l : e.left_samples)
                    for (const Word& r : e.right_samples) {
                        Word nx = x + l;
                        Word ny = r + y;
                        if (e.to == root) {
                            if (++emitted > budget.max_enum_words)
                                throw BudgetError("cycle enumeration exceeded its budget");
                            a.pairs[root].emplace_back(nx, ny);
                        } else if (!on_path[e.to]) {
                            on_path[e.to] = true;
                            walk(e.to, nx, ny);
                            on_path[e.to] = false;
                        }
                    }
            }
        };
        on_path[root] = true;
        walk(root, Word{}, Word{});
    }
    for (auto& bucket : a.pairs) {
        std::sort(bucket.begin(), bucket.end());
        bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
    }
    return a;
}

std::optional<std::pair<Word, Word>> non_commuting(const std::vector<Word>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (!words_commute(parts[i], parts[j])) return std::make_pair(parts[i], parts[j]);
    return std::nullopt;
}

Word common_root(const std::vector<Word>& parts) {
    for (const Word& w : parts)
        if (!w.empty()) return primitive_root(w);
    return Word{};
}

}  // namespace

BoundednessCertificate cfg_bounded(const Cfg& g, const Budget& budget) {
    if (!g.reduced) throw std::invalid_argument("grammar must be reduced");
    BoundednessCertificate cert;
    if (g.productions.empty()) {
        cert.bounded = true;
        return cert;
    }
    CycleAnalysis analysis = analyze_cycles(g, budget);
    int n = static_cast<int>(g.nonterminals.size());
    for (int nt = 0; nt < n; ++nt) {
        std::vector<Word> xs, ys;
        for (const auto& [x, y] : analysis.pairs[nt]) {
            xs.push_back(x);
            ys.push_back(y);
        }
        auto bad = non_commuting(xs);
        if (!bad) bad = non_commuting(ys);
        if (bad) {
            cert.bounded = false;
            cert.witness = BoundednessCertificate::CyclePair{nt, bad->first, bad->second};
            return cert;
        }
    }

    // Bounded: structural traversal. Per nonterminal N inside a recursive
    // SCC the cycle x-parts share a primitive root rx_N (pairwise commuting),
    // and every derivation from N is an elementary path decorated with
    // loops, an exit production, and the mirrored y-side.
    cert.bounded = true;
    std::vector<Word> rx(n), ry(n);
    for (int nt = 0; nt < n; ++nt) {
        std::vector<Word> xs, ys;
        for (const auto& [x, y] : analysis.pairs[nt]) {
            xs.push_back(x);
            ys.push_back(y);
        }
        rx[nt] = common_root(xs);
        ry[nt] = common_root(ys);
    }
    std::vector<std::set<int>> scc_members(analysis.scc_count);
    for (int nt = 0; nt < n; ++nt) scc_members[analysis.scc[nt]].insert(nt);
    auto recursive_scc = [&](int nt) {
        if (scc_members[analysis.scc[nt]].size() >= 2) return true;
        return !analysis.pairs[nt].empty();  // self-loop
    };

    std::vector<std::optional<std::vector<Word>>> memo(n);
    std::function<std::vector<Word>(int)> wordlist = [&](int nt) -> std::vector<Word> {
        if (memo[nt]) return *memo[nt];
        memo[nt] = std::vector<Word>{};  // cut accidental reentry
        std::vector<Word> words;
        auto emit_production = [&](const CfgProduction& p) {
            for (const auto& s : p.rhs) {
                if (s.terminal) {
                    words.push_back(Word(1, s.t));
                } else if (analysis.scc[s.nt] != analysis.scc[nt]) {
                    for (const Word& w : wordlist(s.nt)) words.push_back(w);
                } else {
                    throw std::logic_error("exit production re-enters its SCC");
                }
            }
        };
        if (!recursive_scc(nt)) {
            for (const auto& p : g.productions)
                if (p.lhs == nt) emit_production(p);
        } else {
            int scc = analysis.scc[nt];
            // Elementary paths from nt inside the SCC; each endpoint
            // contributes its exit productions between the x and y slots.
            std::vector<int> path_nodes{nt};
            std::vector<std::size_t> path_edges;
            std::function<void()> emit_path = [&]() {
                int end = path_nodes.back();
                bool end_has_exit = false;
                for (const auto& p : g.productions) {
                    if (p.lhs != end) continue;
                    bool exits = true;
                    for (const auto& s : p.rhs)
                        if (!s.terminal && analysis.scc[s.nt] == scc) {
                            exits = false;
                            break;
                        }
                    if (exits) {
                        end_has_exit = true;
                        break;
                    }
                }
                if (!end_has_exit) return;
                // x side: loops at each node, the edge segments in order.
                for (std::size_t i = 0; i < path_nodes.size(); ++i) {
                    if (!rx[path_nodes[i]].empty()) words.push_back(rx[path_nodes[i]]);
                    if (i < path_edges.size())
                        for (const Word& w : analysis.edges[path_edges[i]].left_samples)
                            if (!w.empty()) words.push_back(w);
                }
                for (const auto& p : g.productions) {
                    if (p.lhs != end) continue;
                    bool exits = true;
                    for (const auto& s : p.rhs)
                        if (!s.terminal && analysis.scc[s.nt] == scc) {
                            exits = false;
                            break;
                        }
                    if (exits) emit_production(p);
                }
                // y side, mirrored.
                for (std::size_t i = path_nodes.size(); i-- > 0;) {
                    if (i < path_edges.size())
                        for (const Word& w : analysis.edges[path_edges[i]].right_samples)
                            if (!w.empty()) words.push_back(w);
                    if (!ry[path_nodes[i]].empty()) words.push_back(ry[path_nodes[i]]);
                }
            };
            std::function<void()> extend = [&]() {
                emit_path();
                int v = path_nodes.back();
                for (std::size_t ei = 0; ei < analysis.edges.size(); ++ei) {
                    const CycleEdge& e = analysis.edges[ei];
                    if (e.from != v || analysis.scc[e.to] != scc) continue;
                    if (std::find(path_nodes.begin(), path_nodes.end(), e.to) !=
                        path_nodes.end())
                        continue;
                    path_nodes.push_back(e.to);
                    path_edges.push_back(ei);
                    extend();
                    path_nodes.pop_back();
                    path_edges.pop_back();
                }
            };
            extend();
        }
        memo[nt] = words;
        return words;
    };

    std::vector<Word> raw = wordlist(g.start);
    std::vector<Word> cleaned;
    for (auto& w : raw) {
        if (w.empty()) continue;
        if (!cleaned.empty() && cleaned.back() == w) continue;
        cleaned.push_back(std::move(w));
    }
    cert.words = std::move(cleaned);

    // Exact verification: L(g) inside words[0]* ... words[n-1]*.
    Nfa tuple = bounded_tuple_language(g.terminals, cert.words);
    Dfa tuple_complement = determinize_trim(
        nfa_from_dfa(complement(determinize_trim(tuple, budget))), budget);
    Cfg outside = cfg_intersect_regular(g, tuple_complement, budget);
    auto emptiness = cfg_is_empty(outside);
    if (!emptiness.empty)
        throw std::logic_error("grammar bounding tuple failed its inclusion check on '" +
                               *emptiness.witness + "'");
    return cert;
}

Nfa cfg_subword_closure(const Cfg& g, const Budget& budget) {
    if (!g.reduced) throw std::invalid_argument("grammar must be reduced");
    const Alphabet& sigma = g.terminals;
    if (g.productions.empty()) return empty_language(sigma);

    CycleAnalysis analysis = analyze_cycles(g, budget);
    int n = static_cast<int>(g.nonterminals.size());
    std::vector<std::set<int>> scc_members(analysis.scc_count);
    for (int nt = 0; nt < n; ++nt) scc_members[analysis.scc[nt]].insert(nt);

    auto letter_closure = [&](char c) {
        return boolean_combine(BoolOp::union_op, epsilon_language(sigma),
                               word_language(sigma, Word(1, c)), budget);
    };

    std::vector<std::optional<Nfa>> memo(n);
    std::function<Nfa(int)> close = [&](int nt) -> Nfa {
        if (memo[nt]) return *memo[nt];
        int scc = analysis.scc[nt];
        bool recursive = scc_members[scc].size() >= 2;
        if (!recursive)
            for (const auto& p : g.productions)
                if (p.lhs == nt)
                    for (const auto& s : p.rhs)
                        if (!s.terminal && s.nt == nt) recursive = true;

        auto segment = [&](const std::vector<CfgSymbol>& rhs, std::size_t begin,
                           std::size_t end, const std::optional<Nfa>& self) -> Nfa {
            Nfa acc = epsilon_language(sigma);
            for (std::size_t i = begin; i < end; ++i) {
                const auto& s = rhs[i];
                Nfa piece = s.terminal ? letter_closure(s.t)
                            : analysis.scc[s.nt] != scc
                                ? close(s.nt)
                                : (self ? *self : epsilon_language(sigma));
                acc = concat_nfa(acc, piece);
            }
            return acc;
        };

        if (!recursive) {
            Nfa acc = empty_language(sigma);
            for (const auto& p : g.productions)
                if (p.lhs == nt)
                    acc = boolean_combine(BoolOp::union_op, acc,
                                          segment(p.rhs, 0, p.rhs.size(), std::nullopt),
                                          budget);
            memo[nt] = acc;
            return acc;
        }

        // Recursive SCC: iterate X = Lall(X)* Mall Rall(X)* to its least
        // fixpoint; sides only reference X through double occurrences.
        std::optional<Nfa> approx;  // absent = first round treats X as {eps}
        Nfa current = epsilon_language(sigma);
        for (int round = 0; round < 20; ++round) {
            Nfa lefts = empty_language(sigma);
            Nfa rights = empty_language(sigma);
            Nfa exits = empty_language(sigma);
            for (int member : scc_members[scc]) {
                for (const auto& p : g.productions) {
                    if (p.lhs != member) continue;
                    bool has_scc_nt = false;
                    for (std::size_t i = 0; i < p.rhs.size(); ++i) {
                        const auto& s = p.rhs[i];
                        if (s.terminal || analysis.scc[s.nt] != scc) continue;
                        has_scc_nt = true;
                        lefts = boolean_combine(BoolOp::union_op, lefts,
                                                segment(p.rhs, 0, i, approx), budget);
                        rights = boolean_combine(
                            BoolOp::union_op, rights,
                            segment(p.rhs, i + 1, p.rhs.size(), approx), budget);
                    }
                    if (!has_scc_nt)
                        exits = boolean_combine(BoolOp::union_op, exits,
                                                segment(p.rhs, 0, p.rhs.size(), approx),
                                                budget);
                }
            }
            Nfa next = concat_nfa(star_nfa(lefts), concat_nfa(exits, star_nfa(rights)));
            if (approx && language_equal(next, current, budget)) {
                memo[nt] = next;
                return next;
            }
            current = next;
            approx = next;
        }
        throw BudgetError("subword closure fixpoint did not converge");
    };

    return close(g.start);
}

namespace {

/// Length-stratified lazy enumeration of a grammar's words, with an
/// operation budget so that dense languages cannot blow up the mining
/// path. Words come out in length-lexicographic order.
class CfgWordStream {
  public:
    CfgWordStream(const Cfg& g, std::size_t max_ops)
        : grammar_(binarize(reduce_cfg(g))), max_ops_(max_ops) {
        by_length_.assign(grammar_.nonterminals.size(), {});
    }

    std::optional<Word> next() {
        while (index_ >= current_.size()) {
            if (!advance()) return std::nullopt;
        }
        return current_[index_++];
    }

  private:
    bool advance() {
        constexpr std::size_t max_length = 64;
        if (length_ > max_length || grammar_.productions.empty()) return false;
        std::size_t l = length_++;
        std::size_t n = grammar_.nonterminals.size();
        for (auto& per : by_length_) per.emplace_back();
        // Fixpoint at this length: unit productions and empty-side pairs
        // feed back into the same stratum.
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& p : grammar_.productions) {
                auto& bucket = by_length_[p.lhs][l];
                auto insert = [&](const Word& w) {
                    if (w.size() == l && bucket.insert(w).second) changed = true;
                };
                if (p.rhs.empty()) {
                    if (l == 0) insert(Word{});
                } else if (p.rhs.size() == 1) {
                    const auto& s = p.rhs[0];
                    if (s.terminal) {
                        if (l == 1) insert(Word(1, s.t));
                    } else {
                        for (const Word& w : by_length_[s.nt][l]) {
                            if (!spend(1)) return false;
                            insert(w);
                        }
                    }
                } else {
                    const auto& s0 = p.rhs[0];
                    const auto& s1 = p.rhs[1];
                    for (std::size_t l0 = 0; l0 <= l; ++l0) {
                        std::size_t l1 = l - l0;
                        auto left = pieces(s0, l0);
                        if (left.empty()) continue;
                        auto right = pieces(s1, l1);
                        if (right.empty()) continue;
                        if (!spend(left.size() * right.size())) return false;
                        for (const Word& a : left)
                            for (const Word& b : right) insert(a + b);
                    }
                }
            }
        }
        current_.assign(by_length_[grammar_.start][l].begin(),
                        by_length_[grammar_.start][l].end());
        index_ = 0;
        return true;
    }

    std::vector<Word> pieces(const CfgSymbol& s, std::size_t len) const {
        if (s.terminal) {
            if (len == 1) return {Word(1, s.t)};
            return {};
        }
        const auto& bucket = by_length_[s.nt];
        if (len >= bucket.size()) return {};
        return std::vector<Word>(bucket[len].begin(), bucket[len].end());
    }

    bool spend(std::size_t ops) {
        ops_ += ops;
        return ops_ <= max_ops_;
    }

    Cfg grammar_;
    std::vector<std::vector<std::set<Word>>> by_length_;  // per NT, per length
    std::vector<Word> current_;
    std::size_t index_ = 0;
    std::size_t length_ = 0;
    std::size_t ops_ = 0;
    std::size_t max_ops_;
};

MineResult mine_cfg_antichain(const Cfg& g, Rel rel, std::size_t target, std::size_t budget,
                              const Budget& resources) {
    CfgWordStream stream(g, resources.max_enum_words);
    return mine_antichain([&]() { return stream.next(); }, rel, target, budget);
}

}  // namespace

MineResult mine_grammar_antichain(const Cfg& g, Rel rel, std::size_t target,
                                  std::size_t budget, const Budget& resources) {
    return mine_cfg_antichain(g, rel, target, budget, resources);
}

DecisionReport decide_cfg(const Cfg& g, Rel rel, const DecideOptions& options) {
    if (rel == Rel::subword)
        throw std::invalid_argument("the subword relation is always wqo; nothing to decide");
    if (rel == Rel::prefix) {
        DecisionReport report = decide_cfg(marker_prefix_cfg(g), Rel::infix, options);
        report.relation = Rel::prefix;
        // Antichain witnesses are re-mined on the unmarked grammar.
        if (!report.wqo) {
            auto mined = mine_cfg_antichain(reduce_cfg(g), Rel::prefix,
                                            options.antichain_size, options.mine_budget,
                                            options.budget);
            if (auto* u = std::get_if<Unboundedness>(&report.certificate))
                u->antichain = mined.antichain;
            else if (auto* e = std::get_if<EscapeWord>(&report.certificate))
                e->antichain = mined.antichain;
        }
        return report;
    }
    if (rel == Rel::suffix) {
        DecisionReport report = decide_cfg(reverse_cfg(g), Rel::prefix, options);
        report.relation = Rel::suffix;
        if (auto* u = std::get_if<Unboundedness>(&report.certificate)) {
            u->u = reversed(u->u);
            u->v = reversed(u->v);
            for (auto& w : u->antichain) w = reversed(w);
        } else if (auto* e = std::get_if<EscapeWord>(&report.certificate)) {
            e->word = reversed(e->word);
            for (auto& w : e->antichain) w = reversed(w);
        }
        return report;
    }

    Cfg reduced = reduce_cfg(g);
    DecisionReport report;
    report.relation = Rel::infix;
    if (reduced.productions.empty()) {
        report.wqo = true;
        report.certificate = RInclusion{};
        OrdinalBounds b;
        b.height = OrdinalExpr::omega();
        b.width = OrdinalExpr::omega_power(2);
        b.width_strict = true;
        b.mot = OrdinalExpr::omega_power(3);
        b.mot_strict = true;
        report.ordinal_bounds = b;
        return report;
    }

    BoundednessCertificate bcert = cfg_bounded(reduced, options.budget);
    if (!bcert.bounded) {
        report.wqo = false;
        Unboundedness cert;
        cert.state = bcert.witness->state;
        cert.u = bcert.witness->u;
        cert.v = bcert.witness->v;
        auto mined = mine_cfg_antichain(reduced, Rel::infix, options.antichain_size,
                                        options.mine_budget, options.budget);
        cert.antichain = mined.antichain;
        report.certificate = std::move(cert);
        return report;
    }

    RBounds bounds;
    bounds.n = bcert.words.size();
    for (const Word& w : bcert.words) bounds.m = std::max(bounds.m, w.size());
    Dfa closure_dfa = determinize_trim(cfg_subword_closure(reduced, options.budget),
                                       options.budget);
    bounds.n0 = static_cast<std::size_t>(closure_dfa.num_states);
    bounds.b1 = std::max(bounds.n, bounds.m);
    bounds.b2 = bounds.n * bounds.m * (bounds.n0 + 1);

    // As in the automaton pipeline: inclusion at the pumping cap m is
    // already complete, the pinned cap only enlarges R.
    std::vector<std::size_t> caps;
    if (bounds.m < bounds.b1) caps.push_back(bounds.m);
    caps.push_back(bounds.b1);

    std::optional<Word> escape;
    for (std::size_t cap : caps) {
        RBounds effective = bounds;
        effective.b1 = cap;
        RLanguage r;
        CfgEmptiness emptiness;
        // Once the pumping cap has produced an escape word, the verdict is
        // settled; the pinned-cap rerun only refreshes the escape word and
        // gets a tight throwaway budget.
        Budget attempt = options.budget;
        if (escape.has_value())
            attempt.max_dfa_states = std::min<std::size_t>(attempt.max_dfa_states, 20'000);
        try {
            r = build_r_language(effective, reduced.terminals, attempt);
            Dfa r_complement = determinize_trim(
                nfa_from_dfa(complement(determinize_trim(r.nfa, attempt))), attempt);
            Cfg outside = cfg_intersect_regular(reduced, r_complement, attempt);
            emptiness = cfg_is_empty(outside);
        } catch (const BudgetError&) {
            if (cap != bounds.b1 || !escape.has_value()) throw;
            break;
        }
        if (emptiness.empty) {
            report.wqo = true;
            RInclusion cert;
            cert.bounds = bounds;
            cert.periods = std::move(r.periods);
            cert.component_count = r.component_count;
            cert.effective_b1 = cap;
            report.certificate = std::move(cert);
            OrdinalBounds b;
            b.height = OrdinalExpr::omega();
            b.width = OrdinalExpr::omega_power(2);
            b.width_strict = true;
            b.mot = OrdinalExpr::omega_power(3);
            b.mot_strict = true;
            report.ordinal_bounds = b;
            return report;
        }
        escape = emptiness.witness;
    }
    report.wqo = false;
    EscapeWord cert;
    cert.word = *escape;
    auto mined = mine_cfg_antichain(reduced, Rel::infix, options.antichain_size,
                                    options.mine_budget, options.budget);
    cert.antichain = mined.antichain;
    report.certificate = std::move(cert);
    return report;
}

}  // namespace wqo

#include "wqo/decision.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace wqo {

namespace {

void require_trim(const Dfa& d) {
    if (!d.trim) throw std::invalid_argument("automaton must be trim");
}

std::vector<std::vector<std::pair<char, int>>> dfa_out(const Dfa& d) {
    std::vector<std::vector<std::pair<char, int>>> out(std::max(d.num_states, 0));
    for (const auto& [key, to] : d.delta) out[key.first].emplace_back(key.second, to);
    return out;
}

/// Tarjan SCC decomposition, iterative, deterministic. Returns component
/// ids; ids are renumbered so that they increase along a topological order
/// of the condensation.
std::pair<std::vector<int>, int> scc_decompose(const Dfa& d) {
    int n = std::max(d.num_states, 0);
    auto out = dfa_out(d);
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int next_index = 0, comp_count = 0;

    struct Frame {
        int state;
        std::size_t edge;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [q, e] = frames.back();
            if (e < out[q].size()) {
                int to = out[q][e++].second;
                if (index[to] == -1) {
                    index[to] = low[to] = next_index++;
                    stack.push_back(to);
                    on_stack[to] = true;
                    frames.push_back({to, 0});
                } else if (on_stack[to]) {
                    low[q] = std::min(low[q], index[to]);
                }
            } else {
                if (low[q] == index[q]) {
                    while (true) {
                        int v = stack.back();
                        stack.pop_back();
                        on_stack[v] = false;
                        comp[v] = comp_count;
                        if (v == q) break;
                    }
                    ++comp_count;
                }
                frames.pop_back();
                if (!frames.empty()) {
                    int parent = frames.back().state;
                    low[parent] = std::min(low[parent], low[q]);
                }
            }
        }
    }
    // Tarjan emits components in reverse topological order; flip the ids.
    for (int q = 0; q < n; ++q) comp[q] = comp_count - 1 - comp[q];
    return {comp, comp_count};
}

/// Length-lex shortest word from `from` to any state in `targets`, moving
/// only through `allowed` states. Nullopt when unreachable.
std::optional<Word> shortest_word_to(const Dfa& d, int from, const std::set<int>& targets,
                                     const std::set<int>& allowed) {
    if (targets.count(from)) return Word{};
    std::map<int, bool> seen{{from, true}};
    std::deque<std::pair<int, Word>> queue{{from, Word{}}};
    while (!queue.empty()) {
        auto [q, w] = queue.front();
        queue.pop_front();
        for (char c : d.alphabet.symbols()) {
            auto to = d.step(q, c);
            if (!to || !allowed.count(*to)) continue;
            if (targets.count(*to)) return w + c;
            if (seen.emplace(*to, true).second) queue.emplace_back(*to, w + c);
        }
    }
    return std::nullopt;
}

/// Length-lex shortest non-empty word looping from `state` back to itself
/// through `allowed` states.
std::optional<Word> shortest_cycle_word(const Dfa& d, int state, const std::set<int>& allowed) {
    std::optional<Word> best;
    for (char c : d.alphabet.symbols()) {
        auto to = d.step(state, c);
        if (!to || !allowed.count(*to)) continue;
        auto rest = shortest_word_to(d, *to, {state}, allowed);
        if (!rest) continue;
        Word candidate = Word(1, c) + *rest;
        if (!best || length_lex_less(candidate, *best)) best = candidate;
    }
    return best;
}

void verify_antichain(const std::vector<Word>& words, Rel rel) {
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            if (compare(rel, words[i], words[j]) != Cmp::incomparable)
                throw std::logic_error("certificate words are not pairwise incomparable");
}

OrdinalBounds infix_wqo_bounds() {
    OrdinalBounds b;
    b.height = OrdinalExpr::omega();
    b.height_strict = false;
    b.width = OrdinalExpr::omega_power(2);
    b.width_strict = true;
    b.mot = OrdinalExpr::omega_power(3);
    b.mot_strict = true;
    return b;
}

}  // namespace

PrefixAnalysis fork_analysis(const Dfa& d) {
    require_trim(d);
    PrefixAnalysis a;
    a.dfa = d;
    if (d.num_states == 0) {
        a.s_language = empty_language(d.alphabet);
        return a;
    }
    std::vector<int> out_degree(d.num_states, 0);
    for (const auto& [key, to] : d.delta) ++out_degree[key.first];
    for (int q = 0; q < d.num_states; ++q)
        if (out_degree[q] >= 2) a.fork_states.insert(q);

    // Backward closure: states that reach a fork.
    std::vector<std::vector<int>> rev(d.num_states);
    for (const auto& [key, to] : d.delta) rev[to].push_back(key.first);
    a.nc_states = a.fork_states;
    std::deque<int> queue(a.fork_states.begin(), a.fork_states.end());
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (int p : rev[q])
            if (a.nc_states.insert(p).second) queue.push_back(p);
    }

    a.s_language = nfa_from_dfa(d);
    a.s_language.accepting = a.nc_states;

    // S is finite iff no NC state lies on a cycle; cycles meeting NC stay
    // inside NC, so it suffices to look at the NC-induced subgraph.
    std::map<int, std::vector<int>> nc_out;
    for (const auto& [key, to] : d.delta)
        if (a.nc_states.count(key.first) && a.nc_states.count(to))
            nc_out[key.first].push_back(to);
    std::map<int, int> color;
    for (int q : a.nc_states) color[q] = 0;
    std::vector<std::pair<int, std::size_t>> stack;
    for (int s : a.nc_states) {
        if (color[s] != 0) continue;
        stack.push_back({s, 0});
        color[s] = 1;
        while (!stack.empty() && a.s_finite) {
            auto& [q, i] = stack.back();
            auto& edges = nc_out[q];
            if (i == edges.size()) {
                color[q] = 2;
                stack.pop_back();
                continue;
            }
            int to = edges[i++];
            if (color[to] == 1) {
                a.s_finite = false;
                break;
            }
            if (color[to] == 0) {
                color[to] = 1;
                stack.push_back({to, 0});
            }
        }
        stack.clear();
        if (!a.s_finite) break;
    }
    return a;
}

std::vector<Word> antichain_branch_witness(const PrefixAnalysis& analysis, std::size_t k) {
    const Dfa& d = analysis.dfa;
    if (analysis.s_finite)
        throw std::invalid_argument("antichain branch requested on a wqo language");
    if (k == 0) return {};
    if (k == 1) {
        auto w = shortest_word(nfa_from_dfa(d));
        if (!w) throw std::logic_error("not-wqo language cannot be empty");
        return {*w};
    }

    // States of NC lying on a cycle of the NC subgraph.
    auto [comp, comp_count] = scc_decompose(d);
    std::vector<int> comp_size(comp_count, 0);
    for (int q = 0; q < d.num_states; ++q) ++comp_size[comp[q]];
    std::set<int> cyclic_nc;
    for (int q : analysis.nc_states) {
        if (comp_size[comp[q]] >= 2) {
            cyclic_nc.insert(q);
        } else {
            for (char c : d.alphabet.symbols())
                if (d.step(q, c) == q) cyclic_nc.insert(q);
        }
    }
    if (cyclic_nc.empty()) throw std::logic_error("infinite S without a cyclic NC state");

    std::set<int> all_states;
    for (int q = 0; q < d.num_states; ++q) all_states.insert(q);
    auto stem = shortest_word_to(d, d.initial, cyclic_nc, all_states);
    if (!stem) throw std::logic_error("cyclic NC state unreachable in a trim automaton");
    int anchor = *d.run(*stem);
    auto cycle = shortest_cycle_word(d, anchor, analysis.nc_states);
    if (!cycle) throw std::logic_error("cyclic NC state has no NC cycle");

    // The antichain branch B = stem . cycle^omega.
    auto branch_letter = [&](std::size_t depth) -> char {
        if (depth < stem->size()) return (*stem)[depth];
        return (*cycle)[(depth - stem->size()) % cycle->size()];
    };

    std::vector<Word> antichain;
    std::size_t branch_pos = 0;  // current node of B, as a depth
    Word branch_prefix;          // letters of B up to branch_pos
    while (antichain.size() < k) {
        // Shortest accepted extension of the current branch node that
        // leaves the branch. Search nodes: (state, depth on B) while on the
        // branch, or (state, diverged) afterwards.
        int start = *d.run(branch_prefix);
        struct Node {
            int state;
            bool diverged;
            std::size_t branch_depth;  // meaningful while on the branch
        };
        auto key_of = [&](const Node& node) {
            std::size_t depth = node.diverged ? 0 : node.branch_depth;
            // Collapse branch depths beyond the lasso period.
            if (!node.diverged && depth >= stem->size())
                depth = stem->size() + (depth - stem->size()) % cycle->size();
            return std::tuple(node.state, node.diverged, depth);
        };
        std::map<std::tuple<int, bool, std::size_t>, bool> seen;
        std::deque<std::pair<Node, std::pair<Word, std::size_t>>> queue;
        Node root{start, false, branch_pos};
        seen.emplace(key_of(root), true);
        queue.push_back({root, {Word{}, 0}});
        std::optional<Word> found;
        std::size_t found_lcp = 0;
        while (!queue.empty() && !found) {
            auto [node, path] = queue.front();
            auto [suffix, lcp_depth] = path;
            queue.pop_front();
            for (char c : d.alphabet.symbols()) {
                auto to = d.step(node.state, c);
                if (!to) continue;
                Node next{*to, node.diverged, node.branch_depth + 1};
                std::size_t lcp = lcp_depth;
                if (!node.diverged) {
                    if (c == branch_letter(node.branch_depth)) {
                        next.diverged = false;
                    } else {
                        next.diverged = true;
                        lcp = node.branch_depth;  // absolute first-mismatch depth
                    }
                }
                if (next.diverged && d.accepting.count(*to)) {
                    found = branch_prefix + suffix + c;
                    found_lcp = lcp;
                    break;
                }
                if (seen.emplace(key_of(next), true).second)
                    queue.push_back({next, {suffix + c, lcp}});
            }
        }
        if (!found) throw std::logic_error("NC node with no off-branch extension");
        antichain.push_back(*found);
        // Advance to the successor on B of the longest on-branch prefix.
        branch_pos = found_lcp + 1;
        branch_prefix.clear();
        for (std::size_t i = 0; i < branch_pos; ++i) branch_prefix += branch_letter(i);
    }
    verify_antichain(antichain, Rel::prefix);
    return antichain;
}

namespace {

std::vector<Word> reversed_all(std::vector<Word> words) {
    for (auto& w : words) w = reversed(w);
    return words;
}

DecisionReport reverse_report(DecisionReport report) {
    report.relation = Rel::suffix;
    if (auto* chain = std::get_if<ChainDecomposition>(&report.certificate)) {
        chain->anchors = reversed_all(std::move(chain->anchors));
        chain->s_words = reversed_all(std::move(chain->s_words));
        chain->s_max = reversed_all(std::move(chain->s_max));
    } else if (auto* sample = std::get_if<AntichainSample>(&report.certificate)) {
        sample->words = reversed_all(std::move(sample->words));
    }
    return report;
}

}  // namespace

DecisionReport decide_prefix(const Dfa& lang, const DecideOptions& options) {
    require_trim(lang);
    DecisionReport report;
    report.relation = Rel::prefix;

    PrefixAnalysis analysis = fork_analysis(lang);
    if (!analysis.s_finite) {
        report.wqo = false;
        AntichainSample sample;
        sample.words = antichain_branch_witness(analysis, options.antichain_size);
        report.certificate = std::move(sample);
        return report;
    }

    report.wqo = true;
    ChainDecomposition chain;
    if (lang.initial >= 0) {
        // S is finite and prefix-closed; its words never leave NC states,
        // so the longest one is shorter than the state count.
        chain.s_words =
            enumerate_words(analysis.s_language, static_cast<std::size_t>(lang.num_states),
                            options.budget);
        for (const Word& w : chain.s_words) {
            bool maximal = true;
            for (const Word& v : chain.s_words)
                if (v != w && word_le(Rel::prefix, w, v)) {
                    maximal = false;
                    break;
                }
            if (maximal) chain.s_max.push_back(w);
        }
        std::size_t s_in_l = 0;
        for (const Word& w : chain.s_words)
            if (lang.accepts(w)) ++s_in_l;
        if (chain.s_words.empty()) {
            // No fork is reachable: the whole language is one chain.
            chain.anchors.push_back(Word{});
        } else {
            // Fringe words wa just outside S: every up-set of an anchor is
            // a chain, and together with the words of S they cover L.
            std::set<Word> s_set(chain.s_words.begin(), chain.s_words.end());
            for (const Word& w : chain.s_words)
                for (char c : lang.alphabet.symbols()) {
                    Word wa = w + c;
                    if (s_set.count(wa)) continue;
                    if (lang.run(wa)) chain.anchors.push_back(wa);
                }
            std::sort(chain.anchors.begin(), chain.anchors.end(), length_lex_less);
        }
        chain.chain_count = chain.anchors.size() + s_in_l;
    }
    OrdinalBounds bounds;
    bounds.height = OrdinalExpr::omega();
    bounds.height_strict = false;
    bounds.width = OrdinalExpr::finite(chain.chain_count);
    bounds.width_strict = false;
    bounds.mot = ordinal_add(OrdinalExpr{{0, chain.chain_count, 0, 0}},
                             OrdinalExpr::finite(chain.s_words.size()));
    bounds.mot_strict = false;
    report.certificate = std::move(chain);
    report.ordinal_bounds = bounds;
    return report;
}

DecisionReport decide_suffix(const Dfa& lang, const DecideOptions& options) {
    require_trim(lang);
    Dfa rev = determinize_trim(reverse_nfa(nfa_from_dfa(lang)), options.budget);
    return reverse_report(decide_prefix(rev, options));
}

BoundednessCertificate decide_bounded(const Dfa& lang, const Budget& budget) {
    require_trim(lang);
    BoundednessCertificate cert;
    if (lang.num_states == 0) {
        cert.bounded = true;
        return cert;
    }
    auto [comp, comp_count] = scc_decompose(lang);
    std::vector<std::vector<int>> members(comp_count);
    for (int q = 0; q < lang.num_states; ++q) members[comp[q]].push_back(q);

    // Intra-SCC out-transitions per state.
    std::vector<std::vector<std::pair<char, int>>> intra(lang.num_states);
    for (const auto& [key, to] : lang.delta)
        if (comp[key.first] == comp[to]) intra[key.first].emplace_back(key.second, to);

    for (int q = 0; q < lang.num_states; ++q) {
        bool cyclic = members[comp[q]].size() >= 2 || (!intra[q].empty());
        if (!cyclic) continue;
        if (intra[q].size() >= 2) {
            // Two distinct cycle words through q; they start with distinct
            // letters, hence cannot commute.
            std::set<int> allowed(members[comp[q]].begin(), members[comp[q]].end());
            auto make_cycle = [&](const std::pair<char, int>& edge) {
                auto back = shortest_word_to(lang, edge.second, {q}, allowed);
                if (!back) throw std::logic_error("SCC edge without a return path");
                return Word(1, edge.first) + *back;
            };
            BoundednessCertificate::CyclePair pair;
            pair.state = q;
            pair.u = make_cycle(intra[q][0]);
            pair.v = make_cycle(intra[q][1]);
            if (words_commute(pair.u, pair.v))
                throw std::logic_error("distinct-letter cycle words cannot commute");
            cert.bounded = false;
            cert.witness = pair;
            return cert;
        }
    }

    // Every SCC is a single simple cycle (or trivial): extract the tuple.
    cert.bounded = true;
    std::map<int, std::set<int>> entries;  // per component
    entries[comp[lang.initial]].insert(lang.initial);
    std::vector<std::vector<std::tuple<int, char, int>>> bridges(comp_count);
    for (const auto& [key, to] : lang.delta)
        if (comp[key.first] != comp[to]) {
            bridges[comp[key.first]].emplace_back(key.first, key.second, to);
            entries[comp[to]].insert(to);
        }

    auto cycle_word_from = [&](int s) {
        Word w;
        int q = s;
        do {
            w += intra[q][0].first;
            q = intra[q][0].second;
        } while (q != s);
        return w;
    };
    auto arc_word = [&](int s, int t) {
        Word w;
        int q = s;
        while (q != t) {
            w += intra[q][0].first;
            q = intra[q][0].second;
        }
        return w;
    };

    std::vector<Word> words;
    for (int c = 0; c < comp_count; ++c) {
        bool nontrivial = members[c].size() >= 2 ||
                          (members[c].size() == 1 && !intra[members[c][0]].empty());
        std::set<int> exits;
        for (const auto& [p, letter, to] : bridges[c]) exits.insert(p);
        for (int q : members[c])
            if (lang.accepting.count(q)) exits.insert(q);
        if (nontrivial) {
            for (int s : entries[c]) words.push_back(cycle_word_from(s));
            for (int s : entries[c])
                for (int t : exits)
                    if (s != t) words.push_back(arc_word(s, t));
        }
        std::sort(bridges[c].begin(), bridges[c].end());
        for (const auto& [p, letter, to] : bridges[c]) {
            // A bridge letter equal to the cycle word at its target entry is
            // absorbed by that cycle's star.
            bool absorbed = !intra[to].empty() && cycle_word_from(to) == Word(1, letter);
            if (!absorbed) words.push_back(Word(1, letter));
        }
    }
    // Adjacent simplifications: w* w* = w*, and commuting neighbours are
    // powers of a common root r with u* v* inside r*.
    std::vector<Word> cleaned;
    for (auto& w : words) {
        if (w.empty()) continue;
        if (!cleaned.empty() && words_commute(cleaned.back(), w)) {
            cleaned.back() = primitive_root(cleaned.back());
            continue;
        }
        cleaned.push_back(std::move(w));
    }
    cert.words = std::move(cleaned);

    auto check = is_subset(nfa_from_dfa(lang), bounded_tuple_language(lang.alphabet, cert.words),
                           budget);
    if (!check.holds)
        throw std::logic_error("bounding tuple failed its inclusion check");
    return cert;
}

Nfa bounded_tuple_language(const Alphabet& alphabet, const std::vector<Word>& words) {
    Nfa n;
    n.alphabet = alphabet;
    int entry = n.add_state();
    n.initial = {entry};
    for (const Word& w : words) {
        int prev = entry;
        for (std::size_t i = 0; i < w.size(); ++i) {
            int to = i + 1 == w.size() ? entry : n.add_state();
            n.add_transition(prev, w[i], to);
            prev = to;
        }
        int next = n.add_state();
        n.add_transition(entry, eps_label, next);
        entry = next;
    }
    n.accepting = {entry};
    n.normalize();
    return n;
}

RBounds compute_r_bounds(const BoundednessCertificate& cert, const Dfa& lang,
                         const Budget& budget) {
    if (!cert.bounded) throw std::invalid_argument("bounds require a bounded language");
    RBounds b;
    b.n = cert.words.size();
    for (const Word& w : cert.words) b.m = std::max(b.m, w.size());
    Dfa closed = determinize_trim(closure(ClosureKind::subword, nfa_from_dfa(lang)), budget);
    b.n0 = static_cast<std::size_t>(closed.num_states);
    b.b1 = std::max(b.n, b.m);
    b.b2 = b.n * b.m * (b.n0 + 1);
    return b;
}

RLanguage build_r_language(const RBounds& bounds, const Alphabet& alphabet,
                           const Budget& budget) {
    RLanguage r;
    r.periods = lyndon_words_upto(alphabet, bounds.b1);
    if (r.periods.size() > budget.max_r_periods)
        throw BudgetError("R construction exceeded the component budget");
    r.component_count = (r.periods.size() + 1) * (r.periods.size() + 1);

    Nfa side = epsilon_language(alphabet);
    for (const Word& x : r.periods)
        side = boolean_combine(BoolOp::union_op, side, inf_language(x, alphabet), budget);
    Nfa middle = max_length_language(alphabet, bounds.b2);
    r.nfa = concat_nfa(side, concat_nfa(middle, side));
    return r;
}

DecisionReport decide_infix(const Dfa& lang, const DecideOptions& options) {
    require_trim(lang);
    DecisionReport report;
    report.relation = Rel::infix;

    BoundednessCertificate bcert = decide_bounded(lang, options.budget);
    if (!bcert.bounded) {
        report.wqo = false;
        Unboundedness cert;
        cert.state = bcert.witness->state;
        cert.u = bcert.witness->u;
        cert.v = bcert.witness->v;
        auto mined = mine_language_antichain(nfa_from_dfa(lang), Rel::infix,
                                             options.antichain_size, options.mine_budget,
                                             options.budget);
        verify_antichain(mined.antichain, Rel::infix);
        cert.antichain = std::move(mined.antichain);
        report.certificate = std::move(cert);
        return report;
    }

    RBounds bounds = compute_r_bounds(bcert, lang, options.budget);
    Nfa language = nfa_from_dfa(lang);

    // Inclusion is monotone in the period cap, so try the small pumping cap
    // m first; only a failure at the pinned cap b1 justifies not-wqo.
    std::vector<std::size_t> caps;
    std::size_t small = std::max<std::size_t>(bounds.m, bounds.b2 > 0 || bounds.n > 0 ? 1 : 0);
    if (small < bounds.b1) caps.push_back(small);
    caps.push_back(bounds.b1);

    std::optional<Word> escape;
    for (std::size_t cap : caps) {
        RLanguage r;
        RBounds effective = bounds;
        effective.b1 = cap;
        // The pumping bound m already makes the inclusion test complete; the
        // pinned cap max(n, m) only enlarges R and cannot flip the verdict.
        // After an escape word exists, the enlarged rerun gets a throwaway
        // budget and falls back on overrun.
        Budget attempt = options.budget;
        if (escape.has_value())
            attempt.max_product_states =
                std::min<std::size_t>(attempt.max_product_states, 100'000);
        InclusionResult inclusion;
        try {
            r = build_r_language(effective, lang.alphabet, attempt);
            inclusion = is_subset(language, r.nfa, attempt);
        } catch (const BudgetError&) {
            if (cap != bounds.b1 || escape.has_value() == false) throw;
            break;
        }
        if (inclusion.holds) {
            report.wqo = true;
            RInclusion cert;
            cert.bounds = bounds;
            cert.periods = std::move(r.periods);
            cert.component_count = r.component_count;
            cert.effective_b1 = cap;
            report.certificate = std::move(cert);
            report.ordinal_bounds = infix_wqo_bounds();
            return report;
        }
        escape = inclusion.counterexample;
        if (!lang.accepts(*escape) || nfa_accepts(r.nfa, *escape))
            throw std::logic_error("escape word failed re-verification");
    }

    report.wqo = false;
    EscapeWord cert;
    cert.word = *escape;
    auto mined = mine_language_antichain(language, Rel::infix, options.antichain_size,
                                         options.mine_budget, options.budget);
    verify_antichain(mined.antichain, Rel::infix);
    cert.antichain = std::move(mined.antichain);
    report.certificate = std::move(cert);
    return report;
}

bool decide_infix_closure_invariance(const Dfa& lang, const DecideOptions& options) {
    require_trim(lang);
    if (!decide_bounded(lang, options.budget).bounded)
        throw std::invalid_argument("closure invariance requires a bounded language");
    bool direct = decide_infix(lang, options).wqo;
    Dfa closed =
        determinize_trim(closure(ClosureKind::infix, nfa_from_dfa(lang)), options.budget);
    bool closed_verdict = decide_infix(closed, options).wqo;
    return direct == closed_verdict;
}

std::optional<std::vector<IdealTriple>> ideal_representation(const Dfa& lang,
                                                             std::size_t budget,
                                                             const DecideOptions& options) {
    require_trim(lang);
    Nfa language = nfa_from_dfa(lang);
    Nfa closed = closure(ClosureKind::infix, language);
    if (!language_equal(language, closed, options.budget))
        throw std::invalid_argument("language is not downward closed for the infix relation");
    if (!decide_infix(lang, options).wqo)
        throw std::invalid_argument("language is not wqo for the infix relation");

    BoundednessCertificate bcert = decide_bounded(lang, options.budget);
    RBounds bounds = compute_r_bounds(bcert, lang, options.budget);

    std::vector<Word> periods{Word{}};
    for (Word& x : lyndon_words_upto(lang.alphabet, bounds.b1)) periods.push_back(std::move(x));

    struct Candidate {
        IdealTriple triple;
        Nfa nfa;
    };
    std::vector<Candidate> valid;
    std::size_t examined = 0;

    std::vector<Word> middles{Word{}};
    for (std::size_t cap = 0; cap <= bounds.b2; ++cap) {
        for (const Word& u : middles) {
            for (const Word& x : periods) {
                for (const Word& y : periods) {
                    if (++examined > budget) return std::nullopt;
                    Nfa component = concat_nfa(
                        inf_language(x, lang.alphabet),
                        concat_nfa(word_language(lang.alphabet, u),
                                   inf_language(y, lang.alphabet)));
                    if (is_subset(component, language, options.budget).holds)
                        valid.push_back({{x, u, y}, std::move(component)});
                }
            }
        }
        // Coverage check at this middle-length level.
        if (!valid.empty()) {
            Nfa covered = valid.front().nfa;
            for (std::size_t i = 1; i < valid.size(); ++i)
                covered = boolean_combine(BoolOp::union_op, covered, valid[i].nfa,
                                          options.budget);
            if (is_subset(language, covered, options.budget).holds) {
                // Canonical order: shorter triples first, x-slot preferred;
                // then drop (last to first) components the rest already cover.
                std::vector<Candidate> kept = valid;
                auto key = [](const Candidate& c) {
                    const auto& [x, u, y] = c.triple;
                    return std::tuple(x.size() + u.size() + y.size(), u, y, x);
                };
                std::sort(kept.begin(), kept.end(),
                          [&](const Candidate& a, const Candidate& b) {
                              return key(a) < key(b);
                          });
                for (std::size_t i = kept.size(); i-- > 0;) {
                    if (kept.size() == 1) break;
                    Nfa rest = empty_language(lang.alphabet);
                    for (std::size_t j = 0; j < kept.size(); ++j)
                        if (j != i)
                            rest = boolean_combine(BoolOp::union_op, rest, kept[j].nfa,
                                                   options.budget);
                    if (is_subset(kept[i].nfa, rest, options.budget).holds)
                        kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
                }
                std::vector<IdealTriple> triples;
                for (auto& c : kept) triples.push_back(c.triple);
                return triples;
            }
        }
        // Next middle length.
        std::vector<Word> next;
        for (const Word& u : middles)
            if (u.size() == cap)
                for (char c : lang.alphabet.symbols()) next.push_back(u + c);
        middles = std::move(next);
        if (middles.empty()) break;
    }
    return std::nullopt;
}

Nfa reduction_prefix_to_infix(const Nfa& lang, char marker) {
    if (lang.alphabet.contains(marker))
        throw std::invalid_argument("marker symbol already present in the alphabet");
    return apply_transducer(marker_transducer(lang.alphabet, marker), lang);
}

Nfa reduction_emptiness_to_prefix(const Nfa& lang) {
    return apply_transducer(full_image_transducer(lang.alphabet, Alphabet("ab")), lang);
}

LanguageStream::LanguageStream(const Nfa& lang, const Budget& budget)
    : dfa_(determinize_trim(lang, budget)) {
    if (dfa_.initial >= 0) level_.emplace_back(dfa_.initial, Word{});
}

std::optional<Word> LanguageStream::next() {
    while (true) {
        while (index_ < level_.size()) {
            const auto& [q, w] = level_[index_];
            ++index_;
            if (dfa_.accepting.count(q)) return w;
        }
        std::vector<std::pair<int, Word>> next_level;
        for (const auto& [q, w] : level_)
            for (char c : dfa_.alphabet.symbols())
                if (auto to = dfa_.step(q, c)) next_level.emplace_back(*to, w + c);
        level_ = std::move(next_level);
        index_ = 0;
        if (level_.empty()) return std::nullopt;
    }
}

MineResult mine_language_antichain(const Nfa& lang, Rel rel, std::size_t target,
                                   std::size_t budget, const Budget& resource_budget) {
    LanguageStream stream(lang, resource_budget);
    return mine_antichain([&]() { return stream.next(); }, rel, target, budget);
}

}  // namespace wqo

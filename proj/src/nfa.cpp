#include "wqo/nfa.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace wqo {

namespace {

void require_same_alphabet(const Nfa& a, const Nfa& b) {
    if (!(a.alphabet == b.alphabet))
        throw std::invalid_argument("alphabet mismatch");
}

std::vector<std::vector<std::pair<char, int>>> out_edges(const Nfa& n) {
    std::vector<std::vector<std::pair<char, int>>> out(n.num_states);
    for (const auto& t : n.transitions) out[t.from].emplace_back(t.label, t.to);
    return out;
}

std::vector<std::vector<std::pair<char, int>>> in_edges(const Nfa& n) {
    std::vector<std::vector<std::pair<char, int>>> in(n.num_states);
    for (const auto& t : n.transitions) in[t.to].emplace_back(t.label, t.from);
    return in;
}

std::set<int> reachable_states(const Nfa& n) {
    auto out = out_edges(n);
    std::set<int> seen(n.initial.begin(), n.initial.end());
    std::deque<int> queue(n.initial.begin(), n.initial.end());
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (auto [c, to] : out[q])
            if (seen.insert(to).second) queue.push_back(to);
    }
    return seen;
}

std::set<int> coreachable_states(const Nfa& n) {
    auto in = in_edges(n);
    std::set<int> seen(n.accepting.begin(), n.accepting.end());
    std::deque<int> queue(n.accepting.begin(), n.accepting.end());
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (auto [c, from] : in[q])
            if (seen.insert(from).second) queue.push_back(from);
    }
    return seen;
}

/// Epsilon closure of a sorted state set.
std::vector<int> eps_close(std::vector<int> states,
                           const std::vector<std::vector<int>>& eps_out) {
    std::set<int> seen(states.begin(), states.end());
    std::deque<int> queue(states.begin(), states.end());
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (int to : eps_out[q])
            if (seen.insert(to).second) queue.push_back(to);
    }
    return std::vector<int>(seen.begin(), seen.end());
}

std::vector<std::vector<int>> eps_edges(const Nfa& n) {
    std::vector<std::vector<int>> eps(n.num_states);
    for (const auto& t : n.transitions)
        if (t.label == eps_label) eps[t.from].push_back(t.to);
    return eps;
}

/// Letter successors of a sorted state set (no epsilon handling).
std::vector<int> letter_move(const std::vector<int>& states, char c,
                             const std::vector<std::vector<std::pair<char, int>>>& out) {
    std::set<int> next;
    for (int q : states)
        for (auto [label, to] : out[q])
            if (label == c) next.insert(to);
    return std::vector<int>(next.begin(), next.end());
}

bool intersects(const std::vector<int>& sorted, const std::set<int>& set) {
    for (int q : sorted)
        if (set.count(q)) return true;
    return false;
}

/// Renumber an NFA keeping only `keep`, preserving state order.
Nfa restrict_states(const Nfa& n, const std::set<int>& keep) {
    std::map<int, int> renum;
    for (int q : keep) renum.emplace(q, static_cast<int>(renum.size()));
    Nfa r;
    r.alphabet = n.alphabet;
    r.num_states = static_cast<int>(renum.size());
    for (int q : n.initial)
        if (keep.count(q)) r.initial.insert(renum.at(q));
    for (int q : n.accepting)
        if (keep.count(q)) r.accepting.insert(renum.at(q));
    for (const auto& t : n.transitions)
        if (keep.count(t.from) && keep.count(t.to))
            r.transitions.push_back({renum.at(t.from), t.label, renum.at(t.to)});
    r.normalize();
    return r;
}

}  // namespace

void Nfa::add_transition(int from, char label, int to) {
    if (from < 0 || from >= num_states || to < 0 || to >= num_states)
        throw std::invalid_argument("transition endpoint not a declared state");
    if (label != eps_label && !alphabet.contains(label))
        throw std::invalid_argument(std::string("transition label '") + label +
                                    "' not in alphabet");
    transitions.push_back({from, label, to});
}

void Nfa::normalize() {
    std::sort(transitions.begin(), transitions.end());
    transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());
}

std::optional<int> Dfa::step(int q, char c) const {
    auto it = delta.find({q, c});
    if (it == delta.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Dfa::run(const Word& w) const {
    if (initial < 0) return std::nullopt;
    int q = initial;
    for (char c : w) {
        auto next = step(q, c);
        if (!next) return std::nullopt;
        q = *next;
    }
    return q;
}

bool Dfa::accepts(const Word& w) const {
    auto q = run(w);
    return q && accepting.count(*q) > 0;
}

Nfa nfa_from_dfa(const Dfa& d) {
    Nfa n;
    n.alphabet = d.alphabet;
    n.num_states = std::max(d.num_states, 0);
    if (d.initial >= 0) n.initial.insert(d.initial);
    n.accepting = d.accepting;
    for (const auto& [key, to] : d.delta) n.transitions.push_back({key.first, key.second, to});
    n.normalize();
    return n;
}

namespace {

/// Equivalent epsilon-free automaton over the useful states. Keeps subset
/// constructions narrow when the input is full of concatenation and star
/// hubs.
Nfa eliminate_eps(const Nfa& n) {
    auto out = out_edges(n);
    auto eps = eps_edges(n);
    Nfa r;
    r.alphabet = n.alphabet;
    r.num_states = n.num_states;
    std::set<int> acc(n.accepting.begin(), n.accepting.end());
    for (int q = 0; q < n.num_states; ++q) {
        auto closure = eps_close({q}, eps);
        for (int p : closure) {
            if (acc.count(p)) r.accepting.insert(q);
            for (auto [c, to] : out[p])
                if (c != eps_label) r.transitions.push_back({q, c, to});
        }
    }
    r.initial = n.initial;
    r.normalize();
    return trim_nfa(r);
}

}  // namespace

Dfa determinize_trim(const Nfa& input, const Budget& budget) {
    bool has_eps = std::any_of(input.transitions.begin(), input.transitions.end(),
                               [](const Transition& t) { return t.label == eps_label; });
    const Nfa n = has_eps ? eliminate_eps(input) : input;
    auto out = out_edges(n);
    auto eps = eps_edges(n);

    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> subsets;
    std::vector<std::map<char, int>> delta;

    auto intern = [&](std::vector<int> subset) -> int {
        auto it = ids.find(subset);
        if (it != ids.end()) return it->second;
        if (subsets.size() >= budget.max_dfa_states)
            throw BudgetError("determinization exceeded the state budget");
        int id = static_cast<int>(subsets.size());
        ids.emplace(subset, id);
        subsets.push_back(std::move(subset));
        delta.emplace_back();
        return id;
    };

    std::vector<int> init(n.initial.begin(), n.initial.end());
    init = eps_close(std::move(init), eps);
    if (init.empty() || n.num_states == 0) {
        Dfa d;
        d.alphabet = n.alphabet;
        d.trim = true;
        return d;
    }
    int start = intern(init);
    for (int q = 0; q < static_cast<int>(subsets.size()); ++q) {
        for (char c : n.alphabet.symbols()) {
            auto next = letter_move(subsets[q], c, out);
            if (next.empty()) continue;
            next = eps_close(std::move(next), eps);
            delta[q][c] = intern(std::move(next));
        }
    }

    std::set<int> acc_nfa(n.accepting.begin(), n.accepting.end());
    int total = static_cast<int>(subsets.size());
    std::vector<bool> accepting(total, false);
    for (int q = 0; q < total; ++q) accepting[q] = intersects(subsets[q], acc_nfa);

    // Co-reachability over the subset automaton.
    std::vector<std::vector<int>> rev(total);
    for (int q = 0; q < total; ++q)
        for (auto [c, to] : delta[q]) rev[to].push_back(q);
    std::vector<bool> useful(total, false);
    std::deque<int> queue;
    for (int q = 0; q < total; ++q)
        if (accepting[q]) {
            useful[q] = true;
            queue.push_back(q);
        }
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (int p : rev[q])
            if (!useful[p]) {
                useful[p] = true;
                queue.push_back(p);
            }
    }

    Dfa d;
    d.alphabet = n.alphabet;
    d.trim = true;
    if (!useful[start]) return d;  // empty language: zero useful states

    std::vector<int> renum(total, -1);
    for (int q = 0; q < total; ++q)
        if (useful[q]) renum[q] = d.num_states++;
    d.initial = renum[start];
    for (int q = 0; q < total; ++q) {
        if (!useful[q]) continue;
        if (accepting[q]) d.accepting.insert(renum[q]);
        for (auto [c, to] : delta[q])
            if (useful[to]) d.delta[{renum[q], c}] = renum[to];
    }
    return d;
}

Nfa boolean_combine(BoolOp kind, const Nfa& a, const Nfa& b, const Budget& budget) {
    require_same_alphabet(a, b);
    switch (kind) {
        case BoolOp::union_op: {
            Nfa r;
            r.alphabet = a.alphabet;
            r.num_states = a.num_states + b.num_states;
            r.initial = a.initial;
            r.accepting = a.accepting;
            int off = a.num_states;
            for (int q : b.initial) r.initial.insert(q + off);
            for (int q : b.accepting) r.accepting.insert(q + off);
            r.transitions = a.transitions;
            for (const auto& t : b.transitions)
                r.transitions.push_back({t.from + off, t.label, t.to + off});
            r.normalize();
            return r;
        }
        case BoolOp::intersection: {
            // Product over determinized factors; keeps epsilon handling out.
            Dfa da = determinize_trim(a, budget);
            Dfa db = determinize_trim(b, budget);
            Nfa r;
            r.alphabet = a.alphabet;
            if (da.initial < 0 || db.initial < 0) return r;
            std::map<std::pair<int, int>, int> ids;
            std::deque<std::pair<int, int>> queue;
            auto intern = [&](std::pair<int, int> p) {
                auto it = ids.find(p);
                if (it != ids.end()) return it->second;
                if (ids.size() >= budget.max_product_states)
                    throw BudgetError("product exceeded the state budget");
                int id = r.add_state();
                ids.emplace(p, id);
                queue.push_back(p);
                return id;
            };
            int start = intern({da.initial, db.initial});
            r.initial.insert(start);
            while (!queue.empty()) {
                auto [qa, qb] = queue.front();
                queue.pop_front();
                int id = ids.at({qa, qb});
                if (da.accepting.count(qa) && db.accepting.count(qb)) r.accepting.insert(id);
                for (char c : a.alphabet.symbols()) {
                    auto na = da.step(qa, c);
                    auto nb = db.step(qb, c);
                    if (!na || !nb) continue;
                    r.transitions.push_back({id, c, intern({*na, *nb})});
                }
            }
            r.normalize();
            return r;
        }
        case BoolOp::difference: {
            Dfa db = determinize_trim(b, budget);
            return boolean_combine(BoolOp::intersection, a, nfa_from_dfa(complement(db)),
                                   budget);
        }
    }
    throw std::logic_error("unreachable");
}

Dfa complement(const Dfa& d) {
    Dfa c;
    c.alphabet = d.alphabet;
    c.trim = false;
    c.num_states = std::max(d.num_states, 0) + 1;  // extra sink
    int sink = c.num_states - 1;
    c.initial = d.initial >= 0 ? d.initial : sink;
    for (int q = 0; q < c.num_states; ++q)
        for (char x : d.alphabet.symbols()) {
            auto next = q == sink ? std::nullopt : d.step(q, x);
            c.delta[{q, x}] = next ? *next : sink;
        }
    for (int q = 0; q < c.num_states; ++q)
        if (!d.accepting.count(q)) c.accepting.insert(q);
    return c;
}

Nfa concat_nfa(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b);
    Nfa r;
    r.alphabet = a.alphabet;
    r.num_states = a.num_states + b.num_states;
    r.initial = a.initial;
    int off = a.num_states;
    for (int q : b.accepting) r.accepting.insert(q + off);
    r.transitions = a.transitions;
    for (const auto& t : b.transitions)
        r.transitions.push_back({t.from + off, t.label, t.to + off});
    for (int q : a.accepting)
        for (int p : b.initial) r.transitions.push_back({q, eps_label, p + off});
    r.normalize();
    return r;
}

Nfa star_nfa(const Nfa& a) {
    Nfa r = a;
    int hub = r.add_state();
    for (int q : r.initial) r.transitions.push_back({hub, eps_label, q});
    for (int q : r.accepting) r.transitions.push_back({q, eps_label, hub});
    r.initial = {hub};
    r.accepting.insert(hub);
    r.normalize();
    return r;
}

Nfa reverse_nfa(const Nfa& a) {
    Nfa r;
    r.alphabet = a.alphabet;
    r.num_states = a.num_states;
    r.initial = a.accepting;
    r.accepting = a.initial;
    for (const auto& t : a.transitions) r.transitions.push_back({t.to, t.label, t.from});
    r.normalize();
    return r;
}

std::optional<Word> shortest_word(const Nfa& n) {
    // BFS over epsilon-closed subsets, letters in alphabet order: the first
    // accepting subset reached carries the length-lex smallest word.
    auto out = out_edges(n);
    auto eps = eps_edges(n);
    std::vector<int> init(n.initial.begin(), n.initial.end());
    init = eps_close(std::move(init), eps);
    if (init.empty()) return std::nullopt;

    std::set<int> acc(n.accepting.begin(), n.accepting.end());
    if (intersects(init, acc)) return Word{};

    std::map<std::vector<int>, bool> seen;
    seen.emplace(init, true);
    std::deque<std::pair<std::vector<int>, Word>> queue;
    queue.emplace_back(init, Word{});
    while (!queue.empty()) {
        auto [subset, word] = queue.front();
        queue.pop_front();
        for (char c : n.alphabet.symbols()) {
            auto next = letter_move(subset, c, out);
            if (next.empty()) continue;
            next = eps_close(std::move(next), eps);
            if (intersects(next, acc)) return word + c;
            if (seen.emplace(next, true).second) queue.emplace_back(next, word + c);
        }
    }
    return std::nullopt;
}

bool is_empty(const Nfa& n) { return !shortest_word(n).has_value(); }

bool is_finite(const Nfa& n, const Budget& budget) {
    Dfa d = determinize_trim(n, budget);
    if (d.num_states == 0) return true;
    // The trim DFA accepts a finite language iff it is acyclic.
    std::vector<int> color(d.num_states, 0);
    std::vector<std::vector<int>> out(d.num_states);
    for (const auto& [key, to] : d.delta) out[key.first].push_back(to);
    std::vector<std::pair<int, std::size_t>> stack;
    for (int s = 0; s < d.num_states; ++s) {
        if (color[s] != 0) continue;
        stack.push_back({s, 0});
        color[s] = 1;
        while (!stack.empty()) {
            auto& [q, i] = stack.back();
            if (i == out[q].size()) {
                color[q] = 2;
                stack.pop_back();
                continue;
            }
            int to = out[q][i++];
            if (color[to] == 1) return false;
            if (color[to] == 0) {
                color[to] = 1;
                stack.push_back({to, 0});
            }
        }
    }
    return true;
}

InclusionResult is_subset(const Nfa& a, const Nfa& b, const Budget& budget) {
    require_same_alphabet(a, b);
    auto out_a = out_edges(a), out_b = out_edges(b);
    auto eps_a = eps_edges(a), eps_b = eps_edges(b);
    std::set<int> acc_a(a.accepting.begin(), a.accepting.end());
    std::set<int> acc_b(b.accepting.begin(), b.accepting.end());

    std::vector<int> ia(a.initial.begin(), a.initial.end());
    ia = eps_close(std::move(ia), eps_a);
    if (ia.empty()) return {true, std::nullopt};
    std::vector<int> ib(b.initial.begin(), b.initial.end());
    ib = eps_close(std::move(ib), eps_b);

    using Pair = std::pair<std::vector<int>, std::vector<int>>;
    auto escapes = [&](const Pair& p) {
        return intersects(p.first, acc_a) && !intersects(p.second, acc_b);
    };

    Pair start{ia, ib};
    if (escapes(start)) return {false, Word{}};
    std::map<Pair, bool> seen;
    seen.emplace(start, true);
    std::deque<std::pair<Pair, Word>> queue;
    queue.emplace_back(start, Word{});
    while (!queue.empty()) {
        auto [pair, word] = queue.front();
        queue.pop_front();
        for (char c : a.alphabet.symbols()) {
            auto na = letter_move(pair.first, c, out_a);
            if (na.empty()) continue;  // counterexamples must stay inside L(a)
            na = eps_close(std::move(na), eps_a);
            auto nb = letter_move(pair.second, c, out_b);
            nb = eps_close(std::move(nb), eps_b);
            Pair next{std::move(na), std::move(nb)};
            if (escapes(next)) return {false, word + c};
            if (seen.size() >= budget.max_product_states)
                throw BudgetError("inclusion check exceeded the state budget");
            if (seen.emplace(next, true).second) queue.emplace_back(next, word + c);
        }
    }
    return {true, std::nullopt};
}

bool language_equal(const Nfa& a, const Nfa& b, const Budget& budget) {
    return is_subset(a, b, budget).holds && is_subset(b, a, budget).holds;
}

Nfa trim_nfa(const Nfa& n) {
    auto reach = reachable_states(n);
    auto coreach = coreachable_states(n);
    std::set<int> useful;
    for (int q : reach)
        if (coreach.count(q)) useful.insert(q);
    return restrict_states(n, useful);
}

Nfa closure(ClosureKind kind, const Nfa& n) {
    switch (kind) {
        case ClosureKind::prefix: {
            Nfa r = n;
            auto coreach = coreachable_states(n);
            r.accepting.insert(coreach.begin(), coreach.end());
            return r;
        }
        case ClosureKind::suffix: {
            Nfa r = n;
            auto reach = reachable_states(n);
            r.initial.insert(reach.begin(), reach.end());
            return r;
        }
        case ClosureKind::infix: {
            Nfa r = trim_nfa(n);
            for (int q = 0; q < r.num_states; ++q) {
                r.initial.insert(q);
                r.accepting.insert(q);
            }
            return r;
        }
        case ClosureKind::subword: {
            Nfa r = n;
            for (const auto& t : n.transitions)
                if (t.label != eps_label) r.transitions.push_back({t.from, eps_label, t.to});
            r.normalize();
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<Word> enumerate_words(const Nfa& n, std::size_t maxlen, const Budget& budget) {
    Dfa d = determinize_trim(n);
    std::vector<Word> result;
    if (d.initial < 0) return result;
    std::vector<std::pair<int, Word>> level{{d.initial, Word{}}};
    for (std::size_t len = 0; len <= maxlen; ++len) {
        for (const auto& [q, w] : level) {
            if (d.accepting.count(q)) {
                if (result.size() >= budget.max_enum_words)
                    throw BudgetError("enumeration exceeded the output budget");
                result.push_back(w);
            }
        }
        if (len == maxlen) break;
        std::vector<std::pair<int, Word>> next;
        for (const auto& [q, w] : level)
            for (char c : d.alphabet.symbols())
                if (auto to = d.step(q, c)) next.emplace_back(*to, w + c);
        level = std::move(next);
        if (level.empty()) break;
    }
    return result;
}

bool nfa_accepts(const Nfa& n, const Word& w) {
    auto out = out_edges(n);
    auto eps = eps_edges(n);
    std::vector<int> cur(n.initial.begin(), n.initial.end());
    cur = eps_close(std::move(cur), eps);
    for (char c : w) {
        cur = letter_move(cur, c, out);
        if (cur.empty()) return false;
        cur = eps_close(std::move(cur), eps);
    }
    std::set<int> acc(n.accepting.begin(), n.accepting.end());
    return intersects(cur, acc);
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

}  // namespace

Nfa parse_automaton(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::string alphabet_chars;
    std::vector<std::string> state_names;
    std::map<std::string, int> state_ids;
    std::vector<std::vector<std::string>> transition_lines;
    std::vector<std::string> initial_names, accepting_names;
    bool saw_alphabet = false, saw_states = false;

    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "alphabet:") {
            saw_alphabet = true;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                if (tokens[i].size() != 1)
                    throw std::invalid_argument("alphabet symbols must be single characters: '" +
                                                tokens[i] + "'");
                alphabet_chars += tokens[i][0];
            }
        } else if (tokens[0] == "states:") {
            saw_states = true;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                if (state_ids.count(tokens[i]))
                    throw std::invalid_argument("duplicate state: " + tokens[i]);
                state_ids.emplace(tokens[i], static_cast<int>(state_names.size()));
                state_names.push_back(tokens[i]);
            }
        } else if (tokens[0] == "initial:") {
            initial_names.assign(tokens.begin() + 1, tokens.end());
        } else if (tokens[0] == "accepting:") {
            accepting_names.assign(tokens.begin() + 1, tokens.end());
        } else if (tokens.size() == 3) {
            transition_lines.push_back(tokens);
        } else {
            throw std::invalid_argument("unparsable automaton line: '" + line + "'");
        }
    }
    if (!saw_alphabet) throw std::invalid_argument("missing 'alphabet:' line");
    if (!saw_states) throw std::invalid_argument("missing 'states:' line");

    Nfa n;
    n.alphabet = Alphabet(alphabet_chars);
    n.num_states = static_cast<int>(state_names.size());
    auto lookup = [&](const std::string& name) {
        auto it = state_ids.find(name);
        if (it == state_ids.end()) throw std::invalid_argument("undeclared state: " + name);
        return it->second;
    };
    for (const auto& name : initial_names) n.initial.insert(lookup(name));
    for (const auto& name : accepting_names) n.accepting.insert(lookup(name));
    for (const auto& t : transition_lines) {
        char label;
        if (t[1] == "eps") {
            label = eps_label;
        } else if (t[1].size() == 1 && n.alphabet.contains(t[1][0])) {
            label = t[1][0];
        } else {
            throw std::invalid_argument("transition label not in alphabet: '" + t[1] + "'");
        }
        n.add_transition(lookup(t[0]), label, lookup(t[2]));
    }
    n.normalize();
    return n;
}

std::string format_automaton(const Nfa& n) {
    std::ostringstream out;
    out << "alphabet:";
    for (char c : n.alphabet.symbols()) out << ' ' << c;
    out << "\nstates:";
    for (int q = 0; q < n.num_states; ++q) out << " q" << q;
    out << "\ninitial:";
    for (int q : n.initial) out << " q" << q;
    out << "\naccepting:";
    for (int q : n.accepting) out << " q" << q;
    out << '\n';
    for (const auto& t : n.transitions) {
        out << 'q' << t.from << ' ';
        if (t.label == eps_label)
            out << "eps";
        else
            out << t.label;
        out << " q" << t.to << '\n';
    }
    return out.str();
}

Nfa empty_language(const Alphabet& a) {
    Nfa n;
    n.alphabet = a;
    return n;
}

Nfa epsilon_language(const Alphabet& a) {
    Nfa n;
    n.alphabet = a;
    int q = n.add_state();
    n.initial = {q};
    n.accepting = {q};
    return n;
}

Nfa word_language(const Alphabet& a, const Word& w) {
    Nfa n;
    n.alphabet = a;
    int prev = n.add_state();
    n.initial = {prev};
    for (char c : w) {
        int next = n.add_state();
        n.add_transition(prev, c, next);
        prev = next;
    }
    n.accepting = {prev};
    n.normalize();
    return n;
}

Nfa universal_language(const Alphabet& a) {
    Nfa n;
    n.alphabet = a;
    int q = n.add_state();
    n.initial = {q};
    n.accepting = {q};
    for (char c : a.symbols()) n.add_transition(q, c, q);
    n.normalize();
    return n;
}

Nfa max_length_language(const Alphabet& a, std::size_t maxlen) {
    Nfa n;
    n.alphabet = a;
    int prev = n.add_state();
    n.initial = {prev};
    n.accepting = {prev};
    for (std::size_t i = 0; i < maxlen; ++i) {
        int next = n.add_state();
        for (char c : a.symbols()) n.add_transition(prev, c, next);
        n.accepting.insert(next);
        prev = next;
    }
    n.normalize();
    return n;
}

}  // namespace wqo

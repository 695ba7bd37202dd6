#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wqo/alphabet.hpp"
#include "wqo/budget.hpp"

namespace wqo {

/// Transition label standing for epsilon.
inline constexpr char eps_label = '\0';

struct Transition {
    int from;
    char label;
    int to;
    auto operator<=>(const Transition&) const = default;
};

/// Nondeterministic finite automaton. Values are immutable once built;
/// every operation below returns a fresh automaton.
struct Nfa {
    Alphabet alphabet;
    int num_states = 0;
    std::set<int> initial;
    std::set<int> accepting;
    std::vector<Transition> transitions;  // sorted, duplicate-free

    int add_state() { return num_states++; }
    void add_transition(int from, char label, int to);
    void normalize();
};

/// Deterministic automaton, possibly partial. `initial == -1` encodes the
/// automaton with no useful states (the empty language).
struct Dfa {
    Alphabet alphabet;
    int num_states = 0;
    int initial = -1;
    std::map<std::pair<int, char>, int> delta;
    std::set<int> accepting;
    bool trim = false;

    std::optional<int> step(int q, char c) const;
    std::optional<int> run(const Word& w) const;
    bool accepts(const Word& w) const;
};

Nfa nfa_from_dfa(const Dfa& d);

/// Subset construction followed by removal of unreachable and dead states.
Dfa determinize_trim(const Nfa& n, const Budget& budget = {});

enum class BoolOp { union_op, intersection, difference };

Nfa boolean_combine(BoolOp kind, const Nfa& a, const Nfa& b, const Budget& budget = {});

/// Completes over the automaton's alphabet, then swaps the accepting set.
Dfa complement(const Dfa& d);

Nfa concat_nfa(const Nfa& a, const Nfa& b);
Nfa star_nfa(const Nfa& a);
Nfa reverse_nfa(const Nfa& a);

/// Length-lexicographically smallest accepted word, when any.
std::optional<Word> shortest_word(const Nfa& n);
bool is_empty(const Nfa& n);
bool is_finite(const Nfa& n, const Budget& budget = {});

struct InclusionResult {
    bool holds = false;
    std::optional<Word> counterexample;  // shortest word of L(a) \ L(b)
};

/// Inclusion L(a) ⊆ L(b) by a lazy determinized product; never builds the
/// full complement of b.
InclusionResult is_subset(const Nfa& a, const Nfa& b, const Budget& budget = {});
bool language_equal(const Nfa& a, const Nfa& b, const Budget& budget = {});

enum class ClosureKind { prefix, suffix, infix, subword };

/// Downward closure with respect to the given relation.
///   prefix: co-reachable states become accepting
///   suffix: reachable states become initial
///   infix:  both, on the trim automaton
///   subword: an epsilon copy of every letter transition
Nfa closure(ClosureKind kind, const Nfa& n);

Nfa trim_nfa(const Nfa& n);

/// Accepted words of length <= maxlen in length-lexicographic order.
std::vector<Word> enumerate_words(const Nfa& n, std::size_t maxlen, const Budget& budget = {});

bool nfa_accepts(const Nfa& n, const Word& w);

/// Line-based automaton text format; '#' starts a comment.
Nfa parse_automaton(const std::string& text);
std::string format_automaton(const Nfa& n);

Nfa empty_language(const Alphabet& a);
Nfa epsilon_language(const Alphabet& a);
Nfa word_language(const Alphabet& a, const Word& w);
Nfa universal_language(const Alphabet& a);
Nfa max_length_language(const Alphabet& a, std::size_t maxlen);

}  // namespace wqo

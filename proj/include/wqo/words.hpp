#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wqo/nfa.hpp"

namespace wqo {

/// Least p >= 1 with w[i] == w[i+p] wherever defined (border-based).
std::size_t minimal_period(const Word& w);

/// Shortest r with w == r^k; w itself when primitive.
Word primitive_root(const Word& w);

Word least_rotation(const Word& w);

/// Primitive root in its least rotation: Inf(x) is invariant under both.
Word canonical_period(const Word& x);

bool words_commute(const Word& a, const Word& b);

/// All canonical periods (Lyndon words) over `a` of length 1..maxlen,
/// in lexicographic order per Duval's algorithm.
std::vector<Word> lyndon_words_upto(const Alphabet& a, std::size_t maxlen);

/// The language Inf(x) of infixes of powers of x, with its cyclic
/// automaton and the covering by components u x* v.
struct PeriodChain {
    Word period;  // canonical
    Nfa cyclic;   // one state per position of the period, all initial/accepting
    Dfa automaton;
    std::vector<std::pair<Word, Word>> components;  // (suffix u, prefix v)
};

PeriodChain inf_period_chain(const Word& x);
PeriodChain inf_period_chain(const Word& x, const Alphabet& alphabet);

/// Inf(x) as an NFA over the given alphabet; Inf(eps) = {eps}.
Nfa inf_language(const Word& x, const Alphabet& alphabet);

enum class InheritanceResult { confirmed, threshold_not_met, violation };

/// Oracle for the period-inheritance lemma: when u is an infix of v and u
/// is long enough (Fine-Wilf bound p + q - gcd(p,q)), both share the same
/// periodic length.
InheritanceResult period_inheritance_check(const Word& u, const Word& v);

/// A common period root: w with |w| <= min(|u|,|v|) and u^k, v^l both
/// infixes of powers of w. Requires u^k infix of v^l; returns nullopt when
/// the Fine-Wilf-style thresholds on k, l are not met.
std::optional<Word> common_power_root(const Word& u, std::size_t k, const Word& v,
                                      std::size_t l);

Word word_power(const Word& w, std::size_t n);

}  // namespace wqo

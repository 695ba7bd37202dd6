#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wqo/nfa.hpp"
#include "wqo/orders.hpp"

namespace wqo {

/// Deterministic letter-at oracle for an infinite word.
struct SequenceOracle {
    std::function<char(std::uint64_t)> at;
    std::string tag;
};

/// Bi-infinite oracle; the positive and negative splits share index 0.
struct BiSequenceOracle {
    std::function<char(std::int64_t)> at;
    std::string tag;
};

/// Parity of the binary popcount of i, as '0'/'1'.
char thue_morse(std::uint64_t i);
Word thue_morse_prefix(std::size_t n);
SequenceOracle thue_morse_oracle();

/// The block word a b aa b aaa b ... (not uniformly recurrent).
char block_word(std::uint64_t i);
Word block_word_prefix(std::size_t n);
SequenceOracle block_word_oracle();

SequenceOracle constant_oracle(char c);

Word prefix_of(const SequenceOracle& s, std::size_t n);

struct CubeOccurrence {
    std::size_t position;
    Word base;  // the word u of the factor uuu
};

/// Leftmost cube, shortest base first at equal positions.
std::optional<CubeOccurrence> has_cube(const Word& w);

struct RecurrenceBand {
    std::size_t k = 0;
    std::size_t factor_count = 0;
    std::size_t max_gap = 0;  // letters strictly between consecutive starts
    std::optional<std::size_t> window_bound;  // max_gap + k, when not flagged
    bool unbounded_at_horizon = false;
    std::vector<Word> flagged_factors;
};

struct RecurrenceProfile {
    std::size_t k_max = 0;
    std::size_t horizon = 0;
    std::vector<RecurrenceBand> bands;  // k = 1 .. k_max
};

/// Scans the length-horizon prefix. A factor is flagged when the tail of
/// the scan after its last occurrence exceeds every inter-occurrence
/// distance seen before, a hedged signal of unbounded gaps.
RecurrenceProfile recurrence_profile(const SequenceOracle& s, std::size_t k_max,
                                     std::size_t horizon);

struct UrOptions {
    std::size_t n0_cap = 64;
    std::size_t k_max = 8;
    std::size_t horizon = std::size_t{1} << 16;
};

struct UrResult {
    enum class Verdict { ur_consistent, refuted, inconclusive };
    Verdict verdict = Verdict::inconclusive;
    std::size_t n0 = 0;                        // for ur_consistent
    std::optional<RecurrenceProfile> profile;  // for ur_consistent
    std::vector<Word> antichain;               // for refuted, re-verified
    Word gap_factor;                           // the factor whose gaps diverge
};

/// Empirical semi-decision of ultimate uniform recurrence. A refutation
/// mines, for some factor u, eight gap words u x u with strictly growing
/// record gaps still being set in the second half of the scan; these are
/// pairwise infix-incomparable. Consistency means some shift N0 <= cap
/// yields a profile with every window finite.
UrResult empirical_ultimately_ur(const SequenceOracle& s, const UrOptions& options = {});

struct BiSplitResult {
    UrResult positive;
    UrResult negative;
    bool combined_consistent = false;  // both sides ur-consistent
};

BiSplitResult bi_split_check(const BiSequenceOracle& s, const UrOptions& options = {});

/// Base-b automatic sequence: a DFA over digit symbols '0'..'b-1' with one
/// output symbol per state, evaluated on most-significant-digit-first
/// expansions. Leading-zero invariance is checked at construction.
struct AutomaticSequence {
    int base = 2;
    Dfa automaton;                // digit alphabet
    std::map<int, char> output;   // per state
};

AutomaticSequence make_automatic_sequence(int base, Dfa automaton, std::map<int, char> output);

/// Automaton text format plus `base: b` and `output: qN symbol` lines.
AutomaticSequence parse_automatic_sequence(const std::string& text);

char automatic_eval(const AutomaticSequence& a, std::uint64_t i);

SequenceOracle oracle_of(const AutomaticSequence& a);

/// The classic two-state base-2 automaton of the Thue-Morse sequence.
AutomaticSequence thue_morse_automaton();

}  // namespace wqo

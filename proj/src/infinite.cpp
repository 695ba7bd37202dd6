#include "wqo/infinite.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wqo {

char thue_morse(std::uint64_t i) {
    return std::popcount(i) % 2 == 0 ? '0' : '1';
}

Word thue_morse_prefix(std::size_t n) {
    Word w;
    w.reserve(n);
    for (std::size_t i = 0; i < n; ++i) w += thue_morse(i);
    return w;
}

SequenceOracle thue_morse_oracle() { return {[](std::uint64_t i) { return thue_morse(i); }, "thue-morse"}; }

char block_word(std::uint64_t i) {
    // Block j = a^j b occupies [S_{j-1}, S_j) with S_j = j(j+3)/2.
    auto ends_before = [](std::uint64_t j) { return j * (j + 3) / 2; };
    std::uint64_t j = static_cast<std::uint64_t>(
        std::max(0.0, (std::sqrt(9.0 + 8.0 * static_cast<double>(i + 1)) - 3.0) / 2.0));
    while (j > 0 && ends_before(j) > i) --j;
    while (ends_before(j + 1) <= i) ++j;
    // Now the position lies inside block j+1, which ends at ends_before(j+1)-1.
    return i + 1 == ends_before(j + 1) ? 'b' : 'a';
}

Word block_word_prefix(std::size_t n) {
    Word w;
    w.reserve(n);
    for (std::size_t i = 0; i < n; ++i) w += block_word(i);
    return w;
}

SequenceOracle block_word_oracle() { return {[](std::uint64_t i) { return block_word(i); }, "block"}; }

SequenceOracle constant_oracle(char c) {
    return {[c](std::uint64_t) { return c; }, std::string("constant-") + c};
}

Word prefix_of(const SequenceOracle& s, std::size_t n) {
    Word w;
    w.reserve(n);
    for (std::size_t i = 0; i < n; ++i) w += s.at(i);
    return w;
}

std::optional<CubeOccurrence> has_cube(const Word& w) {
    std::size_t n = w.size();
    std::optional<CubeOccurrence> best;
    for (std::size_t len = 1; 3 * len <= n; ++len) {
        // match[j] says w[j] == w[j+len]; a cube of base length len at i is
        // a run of 2*len matches starting at i.
        std::size_t run = 0;
        for (std::size_t j = n - len; j-- > 0;) {
            run = w[j] == w[j + len] ? run + 1 : 0;
            if (run >= 2 * len) {
                if (!best || j < best->position)
                    best = CubeOccurrence{j, w.substr(j, len)};
            }
        }
        if (best && best->position == 0) break;  // nothing can beat position 0
    }
    return best;
}

namespace {

struct FactorStats {
    std::size_t first = 0;
    std::size_t last = 0;
    std::size_t count = 0;
    std::size_t max_distance = 0;  // between consecutive starts
};

using FactorMap = std::map<Word, FactorStats>;

FactorMap scan_factors(const Word& w, std::size_t k) {
    FactorMap stats;
    if (w.size() < k || k == 0) return stats;
    for (std::size_t i = 0; i + k <= w.size(); ++i) {
        Word f = w.substr(i, k);
        auto [it, fresh] = stats.try_emplace(f, FactorStats{i, i, 1, 0});
        if (!fresh) {
            auto& s = it->second;
            s.max_distance = std::max(s.max_distance, i - s.last);
            s.last = i;
            ++s.count;
        }
    }
    return stats;
}

RecurrenceBand band_of(const Word& w, std::size_t k) {
    RecurrenceBand band;
    band.k = k;
    if (w.size() < k) return band;
    auto stats = scan_factors(w, k);
    band.factor_count = stats.size();
    std::size_t last_start = w.size() - k;
    for (const auto& [factor, s] : stats) {
        std::size_t gap = s.max_distance > 0 ? s.max_distance - 1 : 0;
        band.max_gap = std::max(band.max_gap, gap);
        std::size_t tail = last_start - s.last;
        bool flagged = s.count == 1 ? tail > 0 : tail > s.max_distance;
        if (flagged) {
            band.unbounded_at_horizon = true;
            band.flagged_factors.push_back(factor);
        }
    }
    if (!band.unbounded_at_horizon) band.window_bound = band.max_gap + k;
    return band;
}

RecurrenceProfile profile_of_word(const Word& w, std::size_t k_max) {
    RecurrenceProfile p;
    p.k_max = k_max;
    p.horizon = w.size();
    for (std::size_t k = 1; k <= k_max; ++k) p.bands.push_back(band_of(w, k));
    return p;
}

}  // namespace

RecurrenceProfile recurrence_profile(const SequenceOracle& s, std::size_t k_max,
                                     std::size_t horizon) {
    if (k_max > horizon) throw std::invalid_argument("k_max exceeds the horizon");
    return profile_of_word(prefix_of(s, horizon), k_max);
}

namespace {

/// Gap-divergence refutation: for a short factor u, consecutive-occurrence
/// distances that keep setting strict records, with a record still being
/// set in the second half of the scan. The first eight record gap words
/// u x u form an infix antichain.
std::optional<std::pair<Word, std::vector<Word>>> mine_gap_antichain(const Word& w,
                                                                     std::size_t u_max) {
    constexpr std::size_t want = 8;
    for (std::size_t k = 1; k <= u_max; ++k) {
        std::map<Word, std::vector<std::size_t>> occurrences;
        for (std::size_t i = 0; i + k <= w.size(); ++i)
            occurrences[w.substr(i, k)].push_back(i);
        // Deterministic order: length-lex via the map's lexicographic order
        // within one length.
        for (const auto& [u, occ] : occurrences) {
            std::vector<std::pair<std::size_t, std::size_t>> records;  // (start, next)
            std::size_t best = 0;
            for (std::size_t t = 0; t + 1 < occ.size(); ++t) {
                std::size_t d = occ[t + 1] - occ[t];
                if (d < k) continue;  // overlapping; the gap word needs both ends
                if (d > best) {
                    best = d;
                    records.emplace_back(occ[t], occ[t + 1]);
                }
            }
            if (records.size() < want) continue;
            if (records.back().first < w.size() / 2) continue;  // records stopped early
            std::vector<Word> family;
            for (std::size_t t = 0; t < want; ++t) {
                auto [from, to] = records[t];
                family.push_back(w.substr(from, to - from + k));
            }
            bool antichain = true;
            for (std::size_t i = 0; i < family.size() && antichain; ++i)
                for (std::size_t j = i + 1; j < family.size() && antichain; ++j)
                    if (compare(Rel::infix, family[i], family[j]) != Cmp::incomparable)
                        antichain = false;
            if (antichain) return std::make_pair(u, family);
        }
    }
    return std::nullopt;
}

}  // namespace

UrResult empirical_ultimately_ur(const SequenceOracle& s, const UrOptions& options) {
    UrResult result;
    Word w = prefix_of(s, options.horizon + options.n0_cap);
    Word scanned = w.substr(0, options.horizon);

    // Refutation first: a verified antichain of gap words beats the hedged
    // window flags.
    if (auto mined = mine_gap_antichain(scanned, std::min<std::size_t>(4, options.k_max))) {
        result.verdict = UrResult::Verdict::refuted;
        result.gap_factor = mined->first;
        result.antichain = std::move(mined->second);
        return result;
    }

    for (std::size_t n0 = 0; n0 <= options.n0_cap; ++n0) {
        Word shifted = w.substr(n0, options.horizon);
        RecurrenceProfile profile = profile_of_word(shifted, options.k_max);
        bool all_finite = true;
        for (const auto& band : profile.bands)
            if (band.unbounded_at_horizon) {
                all_finite = false;
                break;
            }
        if (all_finite) {
            result.verdict = UrResult::Verdict::ur_consistent;
            result.n0 = n0;
            result.profile = std::move(profile);
            return result;
        }
    }
    result.verdict = UrResult::Verdict::inconclusive;
    return result;
}

BiSplitResult bi_split_check(const BiSequenceOracle& s, const UrOptions& options) {
    BiSplitResult r;
    auto at = s.at;
    SequenceOracle plus{[at](std::uint64_t i) { return at(static_cast<std::int64_t>(i)); },
                        s.tag + "+"};
    SequenceOracle minus{[at](std::uint64_t i) { return at(-static_cast<std::int64_t>(i)); },
                         s.tag + "-"};
    r.positive = empirical_ultimately_ur(plus, options);
    r.negative = empirical_ultimately_ur(minus, options);
    r.combined_consistent = r.positive.verdict == UrResult::Verdict::ur_consistent &&
                            r.negative.verdict == UrResult::Verdict::ur_consistent;
    return r;
}

namespace {

void check_leading_zero_invariance(const AutomaticSequence& a) {
    if (a.automaton.initial < 0) throw std::invalid_argument("automatic sequence has no states");
    auto zero = a.automaton.step(a.automaton.initial, '0');
    if (!zero) throw std::invalid_argument("missing '0' transition at the initial state");
    // Output-equivalence of q0 and delta(q0, '0') by a product walk.
    std::set<std::pair<int, int>> seen;
    std::deque<std::pair<int, int>> queue{{a.automaton.initial, *zero}};
    seen.insert(queue.front());
    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        auto op = a.output.find(p), oq = a.output.find(q);
        if (op == a.output.end() || oq == a.output.end())
            throw std::invalid_argument("state without an output symbol");
        if (op->second != oq->second)
            throw std::invalid_argument("leading zeros change the computed letter");
        for (char c : a.automaton.alphabet.symbols()) {
            auto np = a.automaton.step(p, c);
            auto nq = a.automaton.step(q, c);
            if (np.has_value() != nq.has_value())
                throw std::invalid_argument("leading zeros change the computed letter");
            if (np && seen.insert({*np, *nq}).second) queue.push_back({*np, *nq});
        }
    }
}

}  // namespace

AutomaticSequence make_automatic_sequence(int base, Dfa automaton, std::map<int, char> output) {
    if (base < 2 || base > 10) throw std::invalid_argument("base must be between 2 and 10");
    AutomaticSequence a{base, std::move(automaton), std::move(output)};
    std::string digits;
    for (int d = 0; d < base; ++d) digits += static_cast<char>('0' + d);
    if (!(a.automaton.alphabet == Alphabet(digits)))
        throw std::invalid_argument("digit alphabet must be 0..base-1");
    for (int q = 0; q < a.automaton.num_states; ++q)
        if (!a.output.count(q)) throw std::invalid_argument("state without an output symbol");
    check_leading_zero_invariance(a);
    return a;
}

AutomaticSequence parse_automatic_sequence(const std::string& text) {
    std::istringstream in(text);
    std::string line, automaton_text;
    int base = -1;
    std::vector<std::pair<std::string, char>> outputs;
    while (std::getline(in, line)) {
        std::string stripped = line;
        auto hash = stripped.find('#');
        if (hash != std::string::npos) stripped.erase(hash);
        std::istringstream tok(stripped);
        std::string head;
        tok >> head;
        if (head == "base:") {
            tok >> base;
        } else if (head == "output:") {
            std::string state, symbol;
            tok >> state >> symbol;
            if (symbol.size() != 1)
                throw std::invalid_argument("output symbols must be single characters");
            outputs.emplace_back(state, symbol[0]);
        } else {
            automaton_text += line + "\n";
        }
    }
    if (base < 0) throw std::invalid_argument("missing 'base:' line");
    Nfa n = parse_automaton(automaton_text);
    if (n.initial.size() != 1)
        throw std::invalid_argument("automatic sequence needs exactly one initial state");
    Dfa d;
    d.alphabet = n.alphabet;
    d.num_states = n.num_states;
    d.initial = *n.initial.begin();
    d.accepting = n.accepting;
    for (const auto& t : n.transitions) {
        if (t.label == eps_label)
            throw std::invalid_argument("automatic sequences do not use epsilon transitions");
        if (d.delta.count({t.from, t.label}))
            throw std::invalid_argument("digit automaton must be deterministic");
        d.delta[{t.from, t.label}] = t.to;
    }
    std::map<int, char> output;
    std::map<std::string, int> names;
    for (int q = 0; q < d.num_states; ++q) names["q" + std::to_string(q)] = q;
    for (const auto& [state, symbol] : outputs) {
        auto it = names.find(state);
        if (it == names.end()) throw std::invalid_argument("output for unknown state " + state);
        output[it->second] = symbol;
    }
    return make_automatic_sequence(base, std::move(d), std::move(output));
}

char automatic_eval(const AutomaticSequence& a, std::uint64_t i) {
    std::string digits;
    if (i == 0) {
        digits = "0";
    } else {
        while (i > 0) {
            digits += static_cast<char>('0' + i % static_cast<std::uint64_t>(a.base));
            i /= static_cast<std::uint64_t>(a.base);
        }
        std::reverse(digits.begin(), digits.end());
    }
    auto q = a.automaton.run(digits);
    if (!q) throw std::invalid_argument("digit automaton is not complete");
    auto out = a.output.find(*q);
    if (out == a.output.end()) throw std::invalid_argument("state without an output symbol");
    return out->second;
}

SequenceOracle oracle_of(const AutomaticSequence& a) {
    auto copy = std::make_shared<AutomaticSequence>(a);
    return {[copy](std::uint64_t i) { return automatic_eval(*copy, i); }, "automatic"};
}

AutomaticSequence thue_morse_automaton() {
    Dfa d;
    d.alphabet = Alphabet("01");
    d.num_states = 2;
    d.initial = 0;
    d.accepting = {};
    d.delta[{0, '0'}] = 0;
    d.delta[{0, '1'}] = 1;
    d.delta[{1, '0'}] = 1;
    d.delta[{1, '1'}] = 0;
    return make_automatic_sequence(2, std::move(d), {{0, '0'}, {1, '1'}});
}

}  // namespace wqo

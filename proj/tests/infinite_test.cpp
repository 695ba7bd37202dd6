#include <doctest.h>

#include "wqo/infinite.hpp"

using namespace wqo;

TEST_CASE("thue-morse letters and prefix") {
    CHECK(thue_morse_prefix(8) == "01101001");
    CHECK(thue_morse(0) == '0');
    CHECK(thue_morse(3) == '0');  // binary 11, even popcount
    CHECK(thue_morse(4) == '1');
}

TEST_CASE("thue-morse recurrences") {
    for (std::uint64_t i = 0; i < (1u << 15); ++i) {
        CHECK(thue_morse(2 * i) == thue_morse(i));
        CHECK(thue_morse(2 * i + 1) == (thue_morse(i) == '0' ? '1' : '0'));
    }
}

TEST_CASE("block word prefix") {
    CHECK(block_word_prefix(6) == "abaaba");
    CHECK(block_word_prefix(0) == "");
    Word p = block_word_prefix(10);
    CHECK(p == "abaabaaaba");
    // contains b a^i b for the first block sizes
    CHECK(p.find("baab") != Word::npos);
    CHECK(block_word_prefix(16).find("baaab") != Word::npos);
}

TEST_CASE("cube detection") {
    auto cube = has_cube("aaab");
    REQUIRE(cube.has_value());
    CHECK(cube->position == 0);
    CHECK(cube->base == "a");

    CHECK_FALSE(has_cube("abab").has_value());
    CHECK_FALSE(has_cube("").has_value());

    auto shifted = has_cube("babababa");
    REQUIRE(shifted.has_value());
    CHECK(shifted->position == 0);
    CHECK(shifted->base == "ba");

    CHECK_FALSE(has_cube(thue_morse_prefix(4096)).has_value());
}

TEST_CASE("recurrence profile of thue-morse is all-finite") {
    RecurrenceProfile p = recurrence_profile(thue_morse_oracle(), 8, 1u << 16);
    REQUIRE(p.bands.size() == 8);
    std::size_t previous = 0;
    for (const auto& band : p.bands) {
        CHECK_FALSE(band.unbounded_at_horizon);
        REQUIRE(band.window_bound.has_value());
        CHECK(*band.window_bound >= band.k);
        CHECK(*band.window_bound >= previous);
        previous = *band.window_bound;
    }
    // re-scan assertion: consecutive occurrences stay within the recorded gap
    Word w = prefix_of(thue_morse_oracle(), 1u << 14);
    const auto& band = p.bands[3];  // k = 4
    for (std::size_t start = 0; start + band.k + band.max_gap + 1 <= w.size(); start += 997) {
        auto next = w.find(w.substr(start, band.k), start + 1);
        REQUIRE(next != Word::npos);
        CHECK(next - start <= band.max_gap + 1);
    }
}

TEST_CASE("recurrence profile of the constant word") {
    RecurrenceProfile p = recurrence_profile(constant_oracle('a'), 4, 4096);
    for (const auto& band : p.bands) {
        CHECK(band.factor_count == 1);
        CHECK(band.max_gap == 0);
        REQUIRE(band.window_bound.has_value());
        CHECK(*band.window_bound == band.k);
    }
}

TEST_CASE("recurrence profile flags the once-only block factor") {
    // 'baab' appears exactly once in the block word (only block 2 has two a's),
    // so the k = 4 band is flagged at any reasonable horizon.
    RecurrenceProfile p = recurrence_profile(block_word_oracle(), 4, 10000);
    CHECK(p.bands[3].unbounded_at_horizon);
    bool baab_flagged = false;
    for (const Word& f : p.bands[3].flagged_factors) baab_flagged |= f == "baab";
    CHECK(baab_flagged);
}

TEST_CASE("empirical ultimate uniform recurrence") {
    UrResult tm = empirical_ultimately_ur(thue_morse_oracle());
    CHECK(tm.verdict == UrResult::Verdict::ur_consistent);
    CHECK(tm.n0 == 0);

    UrResult block = empirical_ultimately_ur(block_word_oracle());
    CHECK(block.verdict == UrResult::Verdict::refuted);
    CHECK(block.antichain.size() >= 8);
    for (std::size_t i = 0; i < block.antichain.size(); ++i)
        for (std::size_t j = i + 1; j < block.antichain.size(); ++j)
            CHECK(compare(Rel::infix, block.antichain[i], block.antichain[j]) ==
                  Cmp::incomparable);

    // A finite antichain prefix over a fresh letter pushes n0 above zero.
    SequenceOracle prefixed{[](std::uint64_t i) { return i == 0 ? 'c' : thue_morse(i - 1); },
                            "c-prefixed"};
    UrResult shifted = empirical_ultimately_ur(prefixed);
    CHECK(shifted.verdict == UrResult::Verdict::ur_consistent);
    CHECK(shifted.n0 > 0);
}

TEST_CASE("bi-infinite splitting") {
    BiSequenceOracle tm_mirror{[](std::int64_t i) {
                                   return thue_morse(static_cast<std::uint64_t>(i < 0 ? -i : i));
                               },
                               "tm-mirror"};
    BiSplitResult r = bi_split_check(tm_mirror);
    CHECK(r.positive.verdict == UrResult::Verdict::ur_consistent);
    CHECK(r.negative.verdict == UrResult::Verdict::ur_consistent);
    CHECK(r.combined_consistent);

    BiSequenceOracle block_mirror{[](std::int64_t i) {
                                      return block_word(static_cast<std::uint64_t>(i < 0 ? -i : i));
                                  },
                                  "block-mirror"};
    r = bi_split_check(block_mirror);
    CHECK(r.positive.verdict == UrResult::Verdict::refuted);
    CHECK(r.negative.verdict == UrResult::Verdict::refuted);
    CHECK_FALSE(r.combined_consistent);

    BiSequenceOracle half{[](std::int64_t i) {
                              return i <= 0 ? 'a' : thue_morse(static_cast<std::uint64_t>(i));
                          },
                          "const-tm"};
    r = bi_split_check(half);
    CHECK(r.positive.verdict == UrResult::Verdict::ur_consistent);
    CHECK(r.negative.verdict == UrResult::Verdict::ur_consistent);
    CHECK(r.combined_consistent);
}

TEST_CASE("automatic sequence evaluation") {
    AutomaticSequence tm = thue_morse_automaton();
    for (std::uint64_t i = 0; i < (1u << 14); ++i) CHECK(automatic_eval(tm, i) == thue_morse(i));
    CHECK(automatic_eval(tm, 0) == '0');
}

TEST_CASE("automatic sequence file format") {
    const char* text =
        "base: 2\n"
        "alphabet: 0 1\n"
        "states: q0 q1\n"
        "initial: q0\n"
        "accepting:\n"
        "q0 0 q0\n"
        "q0 1 q1\n"
        "q1 0 q1\n"
        "q1 1 q0\n"
        "output: q0 0\n"
        "output: q1 1\n";
    AutomaticSequence parsed = parse_automatic_sequence(text);
    for (std::uint64_t i = 0; i < 512; ++i) CHECK(automatic_eval(parsed, i) == thue_morse(i));

    // leading-zero invariance: a '0' self-loop at the initial state is
    // required, flipping on '0' is rejected
    const char* bad =
        "base: 2\n"
        "alphabet: 0 1\n"
        "states: q0 q1\n"
        "initial: q0\n"
        "accepting:\n"
        "q0 0 q1\n"
        "q0 1 q1\n"
        "q1 0 q0\n"
        "q1 1 q0\n"
        "output: q0 0\n"
        "output: q1 1\n";
    CHECK_THROWS_AS(parse_automatic_sequence(bad), std::invalid_argument);

    const char* missing_output =
        "base: 2\n"
        "alphabet: 0 1\n"
        "states: q0\n"
        "initial: q0\n"
        "accepting:\n"
        "q0 0 q0\n"
        "q0 1 q0\n";
    CHECK_THROWS_AS(parse_automatic_sequence(missing_output), std::invalid_argument);
}

TEST_CASE("oracle of an automatic sequence matches the popcount definition") {
    SequenceOracle oracle = oracle_of(thue_morse_automaton());
    for (std::uint64_t i = 0; i < 2048; ++i) CHECK(oracle.at(i) == thue_morse(i));
}

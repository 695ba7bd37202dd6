#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "wqo/orders.hpp"

using namespace wqo;

namespace {

const Alphabet ab{"ab"};

std::vector<Word> all_words(std::size_t maxlen) {
    std::vector<Word> result{""};
    std::vector<Word> level{""};
    for (std::size_t len = 1; len <= maxlen; ++len) {
        std::vector<Word> next;
        for (const Word& w : level)
            for (char c : ab.symbols()) {
                next.push_back(w + c);
                result.push_back(w + c);
            }
        level = std::move(next);
    }
    return result;
}

std::vector<Word> random_words(std::size_t count, std::size_t maxlen, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> len(0, maxlen);
    std::uniform_int_distribution<int> letter(0, 1);
    std::set<Word> words;
    while (words.size() < count) {
        Word w;
        std::size_t l = len(rng);
        for (std::size_t i = 0; i < l; ++i) w += letter(rng) ? 'b' : 'a';
        words.insert(w);
    }
    return std::vector<Word>(words.begin(), words.end());
}

}  // namespace

TEST_CASE("comparisons follow the definitions") {
    CHECK(compare(Rel::infix, "ba", "abab") == Cmp::lt);
    CHECK(compare(Rel::prefix, "ab", "ba") == Cmp::incomparable);
    CHECK(compare(Rel::infix, "aabbaa", "aaabbbaaa") == Cmp::incomparable);
    CHECK(compare(Rel::subword, "aba", "aabba") == Cmp::lt);
    CHECK(compare(Rel::suffix, "ab", "aab") == Cmp::lt);
    CHECK(compare(Rel::prefix, "", "ab") == Cmp::lt);
    CHECK(compare(Rel::infix, "ab", "ab") == Cmp::eq);
}

TEST_CASE("all four relations are partial orders on random samples") {
    auto words = random_words(40, 7, 20240817);
    for (Rel rel : {Rel::prefix, Rel::suffix, Rel::infix, Rel::subword}) {
        for (const Word& u : words) {
            CHECK(word_le(rel, u, u));  // reflexive
            for (const Word& v : words) {
                if (word_le(rel, u, v) && word_le(rel, v, u)) CHECK(u == v);  // antisymmetric
                for (const Word& w : words)
                    if (word_le(rel, u, v) && word_le(rel, v, w))
                        CHECK(word_le(rel, u, w));  // transitive
            }
        }
    }
}

TEST_CASE("prefix comparison mirrors suffix comparison under reversal") {
    auto words = random_words(60, 8, 7);
    for (const Word& u : words)
        for (const Word& v : words)
            CHECK(compare(Rel::prefix, u, v) ==
                  compare(Rel::suffix, reversed(u), reversed(v)));
}

TEST_CASE("relation dominance: prefix implies infix implies subword") {
    for (const Word& u : all_words(6))
        for (const Word& v : all_words(6)) {
            if (word_le(Rel::prefix, u, v)) CHECK(word_le(Rel::infix, u, v));
            if (word_le(Rel::infix, u, v)) CHECK(word_le(Rel::subword, u, v));
        }
}

TEST_CASE("poset invariants on the spec instances") {
    auto inv = poset_invariants({{"", "a", "aa"}, Rel::prefix});
    CHECK(inv.height == 3);
    CHECK(inv.width == 1);
    CHECK(inv.mot == 3);

    inv = poset_invariants({{"ab", "ba"}, Rel::infix});
    CHECK(inv.height == 1);
    CHECK(inv.width == 2);
    CHECK(inv.mot == 2);

    inv = poset_invariants({{"a", "b", "ab"}, Rel::subword});
    CHECK(inv.height == 2);
    CHECK(inv.width == 2);
    CHECK(inv.mot == 3);
}

TEST_CASE("poset invariants brute-force cross-check") {
    // width by exhaustive antichain search on small random posets
    for (unsigned seed : {1u, 2u, 3u, 4u, 5u}) {
        auto words = random_words(10, 5, seed);
        FinitePoset p{words, Rel::infix};
        auto inv = poset_invariants(p);
        std::size_t best = 0;
        for (std::size_t mask = 0; mask < (1u << words.size()); ++mask) {
            bool antichain = true;
            for (std::size_t i = 0; i < words.size() && antichain; ++i)
                for (std::size_t j = i + 1; j < words.size() && antichain; ++j)
                    if ((mask >> i & 1) && (mask >> j & 1) &&
                        compare(Rel::infix, words[i], words[j]) != Cmp::incomparable)
                        antichain = false;
            if (antichain)
                best = std::max(best, static_cast<std::size_t>(std::popcount(mask)));
        }
        CHECK(inv.width == best);
        CHECK(inv.mot == words.size());
    }
}

TEST_CASE("poset cap and duplicate rejection") {
    CHECK_THROWS_AS(poset_invariants({{"a", "a"}, Rel::prefix}), std::invalid_argument);
    Budget tiny;
    tiny.max_poset_elements = 2;
    CHECK_THROWS_AS(poset_invariants({{"a", "b", "ab"}, Rel::prefix}, tiny), BudgetError);
}

TEST_CASE("antichain mining follows the enumeration greedily") {
    std::vector<Word> astarb;
    for (std::size_t i = 0; i < 32; ++i) astarb.push_back(Word(i, 'a') + "b");
    auto mined = mine_antichain(astarb, Rel::prefix, 5, 1000);
    CHECK(mined.status == MineResult::Status::found);
    CHECK(mined.antichain == std::vector<Word>{"b", "ab", "aab", "aaab", "aaaab"});

    // a* is a chain: no 2-antichain exists; a finite stream is exhausted.
    std::vector<Word> astar;
    for (std::size_t i = 0; i < 16; ++i) astar.push_back(Word(i, 'a'));
    mined = mine_antichain(astar, Rel::prefix, 2, 1000);
    CHECK(mined.status == MineResult::Status::language_exhausted);
    mined = mine_antichain(astar, Rel::prefix, 2, 10);
    CHECK(mined.status == MineResult::Status::budget_exhausted);

    CHECK_THROWS_AS(mine_antichain(astar, Rel::prefix, 1, 10), std::invalid_argument);
}

TEST_CASE("mined antichains re-verify as pairwise incomparable") {
    auto words = all_words(8);  // length-lex is not the vector order here, sort first
    std::sort(words.begin(), words.end(), length_lex_less);
    for (Rel rel : {Rel::prefix, Rel::infix, Rel::subword}) {
        auto mined = mine_antichain(words, rel, 4, 2000);
        if (mined.status != MineResult::Status::found) continue;
        for (std::size_t i = 0; i < mined.antichain.size(); ++i)
            for (std::size_t j = i + 1; j < mined.antichain.size(); ++j)
                CHECK(compare(rel, mined.antichain[i], mined.antichain[j]) ==
                      Cmp::incomparable);
    }
}

TEST_CASE("ordinal arithmetic") {
    OrdinalExpr w = OrdinalExpr::omega();
    CHECK(hessenberg(w, w) == OrdinalExpr::omega_power(2));
    CHECK(hessenberg(OrdinalExpr::omega_power(2), w) == OrdinalExpr::omega_power(3));

    OrdinalExpr w2plus1{{1, 2, 0, 0}};  // w*2 + 1
    CHECK(ordinal_compare(w2plus1, OrdinalExpr::omega_power(2)) == Cmp::lt);
    CHECK(ordinal_compare(OrdinalExpr::omega_power(2), w2plus1) == Cmp::gt);
    CHECK(ordinal_compare(w, w) == Cmp::eq);

    CHECK(ordinal_add(w2plus1, w) == OrdinalExpr{{1, 3, 0, 0}});
    CHECK_THROWS_AS(hessenberg(OrdinalExpr::omega_power(2), OrdinalExpr::omega_power(2)),
                    std::overflow_error);
}

TEST_CASE("ordinal textual form is bit-exact") {
    CHECK(to_string(OrdinalExpr{{5, 2, 0, 0}}) == "w*2 + 5");
    CHECK(to_string(OrdinalExpr::omega_power(2)) == "w^2");
    CHECK(to_string(OrdinalExpr::finite(0)) == "0");
    CHECK(to_string(OrdinalExpr::finite(7)) == "7");
    CHECK(to_string(OrdinalExpr{{0, 1, 0, 2}}) == "w^3*2 + w");
    CHECK(to_string(OrdinalExpr{{3, 0, 1, 0}}) == "w^2 + 3");
}

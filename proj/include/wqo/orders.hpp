#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wqo/alphabet.hpp"
#include "wqo/budget.hpp"

namespace wqo {

enum class Rel { prefix, suffix, infix, subword };

enum class Cmp { lt, gt, eq, incomparable };

/// u related-below v for the given relation.
bool word_le(Rel rel, const Word& u, const Word& v);

Cmp compare(Rel rel, const Word& u, const Word& v);

const char* rel_name(Rel rel);

/// Finite truncation of a word order, used as an exact oracle.
struct FinitePoset {
    std::vector<Word> elements;  // pairwise distinct
    Rel rel;
};

struct PosetInvariants {
    std::size_t height;  // longest chain
    std::size_t width;   // maximum antichain (exact, Dilworth matching)
    std::size_t mot;     // |elements|, cross-checked by a reversed linearization
};

PosetInvariants poset_invariants(const FinitePoset& p, const Budget& budget = {});

/// Pulls words until it returns nullopt.
using WordStream = std::function<std::optional<Word>()>;

struct MineResult {
    enum class Status { found, budget_exhausted, language_exhausted };
    Status status;
    std::vector<Word> antichain;
    std::size_t examined = 0;
};

/// Greedy maximal-element extraction over the stream: kept words are the
/// maximal elements of everything examined, hence always an antichain.
MineResult mine_antichain(const WordStream& stream, Rel rel, std::size_t target,
                          std::size_t budget);

MineResult mine_antichain(const std::vector<Word>& words, Rel rel, std::size_t target,
                          std::size_t budget);

/// Ordinal polynomial w^3*c3 + w^2*c2 + w*c1 + c0; the fragment below w^4
/// is closed under natural sum and Hessenberg product up to degree 3.
struct OrdinalExpr {
    std::array<unsigned long long, 4> coeff{};  // coeff[k] multiplies w^k

    static OrdinalExpr finite(unsigned long long n) { return {{n, 0, 0, 0}}; }
    static OrdinalExpr omega() { return {{0, 1, 0, 0}}; }
    static OrdinalExpr omega_power(unsigned k, unsigned long long c = 1);

    bool operator==(const OrdinalExpr&) const = default;
};

/// Lexicographic on (c3, c2, c1, c0).
Cmp ordinal_compare(const OrdinalExpr& a, const OrdinalExpr& b);

/// Natural (Hessenberg) sum: coefficient-wise.
OrdinalExpr ordinal_add(const OrdinalExpr& a, const OrdinalExpr& b);

/// Hessenberg product: polynomial product in w; throws on degree overflow.
OrdinalExpr hessenberg(const OrdinalExpr& a, const OrdinalExpr& b);

/// Textual form, bit-exact: "w^3*C3 + w^2*C2 + w*C1 + C0" with zero terms
/// omitted and "0" for zero.
std::string to_string(const OrdinalExpr& e);

}  // namespace wqo

#include "wqo/orders.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wqo {

namespace {

bool is_prefix(const Word& u, const Word& v) {
    return u.size() <= v.size() && std::equal(u.begin(), u.end(), v.begin());
}

bool is_suffix(const Word& u, const Word& v) {
    return u.size() <= v.size() && std::equal(u.rbegin(), u.rend(), v.rbegin());
}

bool is_infix(const Word& u, const Word& v) {
    return u.size() <= v.size() && v.find(u) != Word::npos;
}

bool is_subword(const Word& u, const Word& v) {
    std::size_t i = 0;
    for (char c : v) {
        if (i < u.size() && u[i] == c) ++i;
        if (i == u.size()) break;
    }
    return i == u.size();
}

}  // namespace

bool word_le(Rel rel, const Word& u, const Word& v) {
    switch (rel) {
        case Rel::prefix: return is_prefix(u, v);
        case Rel::suffix: return is_suffix(u, v);
        case Rel::infix: return is_infix(u, v);
        case Rel::subword: return is_subword(u, v);
    }
    throw std::logic_error("unreachable");
}

Cmp compare(Rel rel, const Word& u, const Word& v) {
    if (u == v) return Cmp::eq;
    if (word_le(rel, u, v)) return Cmp::lt;
    if (word_le(rel, v, u)) return Cmp::gt;
    return Cmp::incomparable;
}

const char* rel_name(Rel rel) {
    switch (rel) {
        case Rel::prefix: return "prefix";
        case Rel::suffix: return "suffix";
        case Rel::infix: return "infix";
        case Rel::subword: return "subword";
    }
    throw std::logic_error("unreachable");
}

PosetInvariants poset_invariants(const FinitePoset& p, const Budget& budget) {
    const auto& e = p.elements;
    std::size_t n = e.size();
    if (n > budget.max_poset_elements)
        throw BudgetError("poset exceeds the brute-force cap");
    {
        std::set<Word> distinct(e.begin(), e.end());
        if (distinct.size() != n)
            throw std::invalid_argument("poset elements must be pairwise distinct");
    }

    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) lt[i][j] = word_le(p.rel, e[i], e[j]);

    // Longest chain by memoized DP over the strict order.
    std::vector<std::size_t> chain(n, 0);
    std::function<std::size_t(std::size_t)> longest = [&](std::size_t i) -> std::size_t {
        if (chain[i]) return chain[i];
        std::size_t best = 1;
        for (std::size_t j = 0; j < n; ++j)
            if (lt[j][i]) best = std::max(best, longest(j) + 1);
        return chain[i] = best;
    };
    std::size_t height = 0;
    for (std::size_t i = 0; i < n; ++i) height = std::max(height, longest(i));

    // Maximum antichain via Dilworth: n minus a maximum matching of the
    // comparability DAG (already transitively closed).
    std::vector<int> match_right(n, -1);
    std::vector<bool> used;
    std::function<bool(std::size_t)> augment = [&](std::size_t i) -> bool {
        for (std::size_t j = 0; j < n; ++j) {
            if (!lt[i][j] || used[j]) continue;
            used[j] = true;
            if (match_right[j] < 0 || augment(static_cast<std::size_t>(match_right[j]))) {
                match_right[j] = static_cast<int>(i);
                return true;
            }
        }
        return false;
    };
    std::size_t matching = 0;
    for (std::size_t i = 0; i < n; ++i) {
        used.assign(n, false);
        if (augment(i)) ++matching;
    }
    std::size_t width = n - matching;

    // mot of a finite poset is its cardinality; cross-check with an explicit
    // reversed-linearization bad sequence.
    std::vector<std::size_t> order;
    std::vector<bool> placed(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        for (std::size_t i = 0; i < n; ++i) {
            if (placed[i]) continue;
            bool minimal = true;
            for (std::size_t j = 0; j < n; ++j)
                if (!placed[j] && lt[j][i]) {
                    minimal = false;
                    break;
                }
            if (minimal) {
                order.push_back(i);
                placed[i] = true;
                break;
            }
        }
    }
    std::reverse(order.begin(), order.end());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (word_le(p.rel, e[order[i]], e[order[j]]))
                throw std::logic_error("reversed linearization is not a bad sequence");

    return {height, width, n};
}

MineResult mine_antichain(const WordStream& stream, Rel rel, std::size_t target,
                          std::size_t budget) {
    if (target < 2) throw std::invalid_argument("antichain target must be at least 2");
    MineResult result{MineResult::Status::language_exhausted, {}, 0};
    auto& kept = result.antichain;
    while (result.examined < budget) {
        auto next = stream();
        if (!next) return result;  // language exhausted below target
        ++result.examined;
        const Word& w = *next;
        bool dominated = false;
        for (const Word& x : kept)
            if (word_le(rel, w, x)) {
                dominated = true;
                break;
            }
        if (dominated) continue;
        std::erase_if(kept, [&](const Word& x) { return word_le(rel, x, w); });
        kept.push_back(w);
        if (kept.size() >= target) {
            result.status = MineResult::Status::found;
            return result;
        }
    }
    result.status = MineResult::Status::budget_exhausted;
    return result;
}

MineResult mine_antichain(const std::vector<Word>& words, Rel rel, std::size_t target,
                          std::size_t budget) {
    std::size_t i = 0;
    return mine_antichain(
        [&]() -> std::optional<Word> {
            if (i >= words.size()) return std::nullopt;
            return words[i++];
        },
        rel, target, budget);
}

OrdinalExpr OrdinalExpr::omega_power(unsigned k, unsigned long long c) {
    if (k > 3) throw std::overflow_error("ordinal degree overflow");
    OrdinalExpr e;
    e.coeff[k] = c;
    return e;
}

Cmp ordinal_compare(const OrdinalExpr& a, const OrdinalExpr& b) {
    for (int k = 3; k >= 0; --k) {
        if (a.coeff[k] < b.coeff[k]) return Cmp::lt;
        if (a.coeff[k] > b.coeff[k]) return Cmp::gt;
    }
    return Cmp::eq;
}

OrdinalExpr ordinal_add(const OrdinalExpr& a, const OrdinalExpr& b) {
    OrdinalExpr r;
    for (int k = 0; k < 4; ++k) r.coeff[k] = a.coeff[k] + b.coeff[k];
    return r;
}

OrdinalExpr hessenberg(const OrdinalExpr& a, const OrdinalExpr& b) {
    OrdinalExpr r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (a.coeff[i] == 0 || b.coeff[j] == 0) continue;
            if (i + j > 3) throw std::overflow_error("ordinal degree overflow");
            r.coeff[i + j] += a.coeff[i] * b.coeff[j];
        }
    return r;
}

std::string to_string(const OrdinalExpr& e) {
    std::string out;
    for (int k = 3; k >= 0; --k) {
        if (e.coeff[k] == 0) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += std::to_string(e.coeff[0]);
        } else {
            out += k == 1 ? "w" : "w^" + std::to_string(k);
            if (e.coeff[k] != 1) out += "*" + std::to_string(e.coeff[k]);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace wqo

#include "wqo/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wqo {

std::size_t minimal_period(const Word& w) {
    if (w.empty()) throw std::invalid_argument("minimal_period of the empty word");
    // Failure function of KMP; the longest proper border determines the period.
    std::vector<std::size_t> border(w.size() + 1, 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        while (k > 0 && w[i] != w[k]) k = border[k];
        if (w[i] == w[k]) ++k;
        border[i + 1] = k;
    }
    return w.size() - border[w.size()];
}

Word primitive_root(const Word& w) {
    if (w.empty()) return w;
    std::size_t p = minimal_period(w);
    if (w.size() % p == 0) return w.substr(0, p);
    return w;
}

Word least_rotation(const Word& w) {
    if (w.empty()) return w;
    Word best = w;
    Word rotated = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
        if (rotated < best) best = rotated;
    }
    return best;
}

Word canonical_period(const Word& x) { return least_rotation(primitive_root(x)); }

bool words_commute(const Word& a, const Word& b) { return a + b == b + a; }

std::vector<Word> lyndon_words_upto(const Alphabet& a, std::size_t maxlen) {
    std::vector<Word> result;
    if (maxlen == 0) return result;
    const std::string& sym = a.symbols();
    std::string w(1, sym.front());
    while (true) {
        result.push_back(w);
        // Duval: extend periodically to maxlen, then strip maximal symbols
        // and increment.
        std::string x;
        for (std::size_t i = 0; i < maxlen; ++i) x += w[i % w.size()];
        while (!x.empty() && x.back() == sym.back()) x.pop_back();
        if (x.empty()) break;
        auto pos = sym.find(x.back());
        x.back() = sym[pos + 1];
        w = std::move(x);
    }
    std::sort(result.begin(), result.end(), length_lex_less);
    return result;
}

Word word_power(const Word& w, std::size_t n) {
    Word r;
    r.reserve(w.size() * n);
    for (std::size_t i = 0; i < n; ++i) r += w;
    return r;
}

Nfa inf_language(const Word& x, const Alphabet& alphabet) {
    if (!alphabet.contains_word(x))
        throw std::invalid_argument("period uses symbols outside the alphabet");
    if (x.empty()) return epsilon_language(alphabet);
    Word p = canonical_period(x);
    Nfa n;
    n.alphabet = alphabet;
    n.num_states = static_cast<int>(p.size());
    for (int i = 0; i < n.num_states; ++i) {
        n.initial.insert(i);
        n.accepting.insert(i);
        n.add_transition(i, p[static_cast<std::size_t>(i)], (i + 1) % n.num_states);
    }
    n.normalize();
    return n;
}

PeriodChain inf_period_chain(const Word& x, const Alphabet& alphabet) {
    if (x.empty()) throw std::invalid_argument("empty period");
    PeriodChain chain;
    chain.period = canonical_period(x);
    chain.cyclic = inf_language(chain.period, alphabet);
    chain.automaton = determinize_trim(chain.cyclic);
    const Word& p = chain.period;
    for (std::size_t i = 0; i <= p.size(); ++i)
        for (std::size_t j = 0; j <= p.size(); ++j)
            chain.components.emplace_back(p.substr(i), p.substr(0, j));
    return chain;
}

PeriodChain inf_period_chain(const Word& x) {
    if (x.empty()) throw std::invalid_argument("empty period");
    std::string symbols(x);
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
    return inf_period_chain(x, Alphabet(symbols));
}

InheritanceResult period_inheritance_check(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw std::invalid_argument("empty word");
    if (v.find(u) == Word::npos) throw std::invalid_argument("u is not an infix of v");
    std::size_t p = minimal_period(u);
    std::size_t q = minimal_period(v);
    std::size_t g = std::gcd(p, q);
    if (u.size() < p + q - g) return InheritanceResult::threshold_not_met;
    return p == q ? InheritanceResult::confirmed : InheritanceResult::violation;
}

std::optional<Word> common_power_root(const Word& u, std::size_t k, const Word& v,
                                      std::size_t l) {
    if (u.empty() || v.empty()) throw std::invalid_argument("empty word");
    Word uk = word_power(u, k);
    Word vl = word_power(v, l);
    if (vl.find(uk) == Word::npos)
        throw std::invalid_argument("u^k is not an infix of v^l");
    std::size_t fine_wilf = u.size() + v.size() - std::gcd(u.size(), v.size());
    if (uk.size() < fine_wilf || vl.size() < fine_wilf) return std::nullopt;
    std::size_t cap = std::min(u.size(), v.size());
    // Brute-force root search: factors of v^l of each candidate length.
    for (std::size_t d = 1; d <= cap; ++d) {
        std::size_t reps = vl.size() / d + 2;
        for (std::size_t i = 0; i < v.size() && i + d <= vl.size(); ++i) {
            Word w = vl.substr(i, d);
            if (word_power(w, reps).find(vl) != Word::npos) return w;
        }
    }
    return std::nullopt;
}

}  // namespace wqo

#include "wqo/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

namespace wqo {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty())
        throw std::invalid_argument("alphabet must be non-empty");
    std::sort(symbols_.begin(), symbols_.end());
    if (std::adjacent_find(symbols_.begin(), symbols_.end()) != symbols_.end())
        throw std::invalid_argument("alphabet has duplicate symbols");
}

bool Alphabet::contains(char c) const {
    return std::binary_search(symbols_.begin(), symbols_.end(), c);
}

bool Alphabet::contains_word(const Word& w) const {
    return std::all_of(w.begin(), w.end(), [&](char c) { return contains(c); });
}

Alphabet Alphabet::with_symbol(char c) const {
    if (contains(c))
        throw std::invalid_argument(std::string("symbol '") + c + "' already in alphabet");
    return Alphabet(symbols_ + c);
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

bool length_lex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace wqo

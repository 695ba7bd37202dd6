#pragma once

#include <string>
#include <vector>

namespace wqo {

/// A word over single-character symbols; the empty string is epsilon.
using Word = std::string;

/// Ordered finite set of single-character symbols.
class Alphabet {
  public:
    Alphabet() = default;
    explicit Alphabet(std::string symbols);

    bool contains(char c) const;
    std::size_t size() const { return symbols_.size(); }
    const std::string& symbols() const { return symbols_; }

    /// True when every character of w is a symbol of this alphabet.
    bool contains_word(const Word& w) const;

    /// Alphabet extended with one fresh symbol (error if already present).
    Alphabet with_symbol(char c) const;

    bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }

  private:
    std::string symbols_;  // sorted, duplicate-free
};

/// Reversal of a word.
Word reversed(const Word& w);

/// Length-lexicographic comparison; the order used for all shortest
/// witnesses and deterministic enumeration.
bool length_lex_less(const Word& a, const Word& b);

}  // namespace wqo

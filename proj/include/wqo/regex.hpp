#pragma once

#include <string>
#include <vector>

#include "wqo/alphabet.hpp"
#include "wqo/nfa.hpp"

namespace wqo {

/// Regular expression syntax tree. Binary nodes are left-associative.
struct Regex {
    enum class Kind { empty_set, epsilon, symbol, concat, union_alt, star, plus, optional };

    Kind kind = Kind::empty_set;
    char sym = 0;
    std::vector<Regex> children;

    bool operator==(const Regex& o) const;

    static Regex empty();
    static Regex eps();
    static Regex symbol_of(char c);
    static Regex concat_of(Regex a, Regex b);
    static Regex union_of(Regex a, Regex b);
    static Regex star_of(Regex a);
    static Regex plus_of(Regex a);
    static Regex optional_of(Regex a);
};

struct RegexParseError : std::invalid_argument {
    std::size_t offset;
    RegexParseError(std::size_t offset, const std::string& message);
};

/// Grammar: juxtaposition = concat, operators `|`, `*`, `+`, `?`,
/// parentheses, literal `eps`, backslash escapes for metacharacters.
Regex parse_regex(const std::string& text, const Alphabet& alphabet);

/// Prints with minimal grouping; reparsing yields the same tree.
std::string print_regex(const Regex& r);

/// Thompson-style construction.
Nfa compile(const Regex& r, const Alphabet& alphabet);

/// Convenience: parse, compile.
Nfa regex_language(const std::string& text, const Alphabet& alphabet);

}  // namespace wqo

#include "wqo/regex.hpp"

#include <stdexcept>

namespace wqo {

bool Regex::operator==(const Regex& o) const {
    return kind == o.kind && sym == o.sym && children == o.children;
}

Regex Regex::empty() { return Regex{}; }
Regex Regex::eps() { return Regex{Kind::epsilon, 0, {}}; }
Regex Regex::symbol_of(char c) { return Regex{Kind::symbol, c, {}}; }
Regex Regex::concat_of(Regex a, Regex b) {
    return Regex{Kind::concat, 0, {std::move(a), std::move(b)}};
}
Regex Regex::union_of(Regex a, Regex b) {
    return Regex{Kind::union_alt, 0, {std::move(a), std::move(b)}};
}
Regex Regex::star_of(Regex a) { return Regex{Kind::star, 0, {std::move(a)}}; }
Regex Regex::plus_of(Regex a) { return Regex{Kind::plus, 0, {std::move(a)}}; }
Regex Regex::optional_of(Regex a) { return Regex{Kind::optional, 0, {std::move(a)}}; }

RegexParseError::RegexParseError(std::size_t offset, const std::string& message)
    : std::invalid_argument("syntax error at offset " + std::to_string(offset) + ": " + message),
      offset(offset) {}

namespace {

class Parser {
  public:
    Parser(const std::string& text, const Alphabet& alphabet)
        : text_(text), alphabet_(alphabet) {}

    Regex parse() {
        if (text_.empty()) throw RegexParseError(0, "empty expression");
        Regex r = parse_union();
        if (pos_ != text_.size())
            throw RegexParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
        return r;
    }

  private:
    Regex parse_union() {
        Regex left = parse_concat();
        while (pos_ < text_.size() && text_[pos_] == '|') {
            ++pos_;
            Regex right = parse_concat();
            left = Regex::union_of(std::move(left), std::move(right));
        }
        return left;
    }

    Regex parse_concat() {
        Regex left = parse_postfix();
        while (pos_ < text_.size() && starts_atom()) {
            Regex right = parse_postfix();
            left = Regex::concat_of(std::move(left), std::move(right));
        }
        return left;
    }

    Regex parse_postfix() {
        Regex r = parse_atom();
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '*')
                r = Regex::star_of(std::move(r));
            else if (c == '+')
                r = Regex::plus_of(std::move(r));
            else if (c == '?')
                r = Regex::optional_of(std::move(r));
            else
                break;
            ++pos_;
        }
        return r;
    }

    bool starts_atom() const {
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return c != '|' && c != ')' && c != '*' && c != '+' && c != '?';
    }

    Regex parse_atom() {
        if (pos_ >= text_.size()) throw RegexParseError(pos_, "expected an operand");
        char c = text_[pos_];
        if (c == '(') {
            std::size_t open = pos_++;
            Regex r = parse_union();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw RegexParseError(open, "unbalanced '('");
            ++pos_;
            return r;
        }
        if (c == ')') throw RegexParseError(pos_, "unbalanced ')'");
        if (c == '|' || c == '*' || c == '+' || c == '?')
            throw RegexParseError(pos_, std::string("operator '") + c + "' lacks an operand");
        if (c == '\\') {
            if (pos_ + 1 >= text_.size())
                throw RegexParseError(pos_, "dangling escape");
            char escaped = text_[pos_ + 1];
            if (!alphabet_.contains(escaped))
                throw RegexParseError(pos_ + 1,
                                      std::string("symbol '") + escaped + "' not in alphabet");
            pos_ += 2;
            return Regex::symbol_of(escaped);
        }
        if (text_.compare(pos_, 3, "eps") == 0) {
            pos_ += 3;
            return Regex::eps();
        }
        if (!alphabet_.contains(c))
            throw RegexParseError(pos_, std::string("symbol '") + c + "' not in alphabet");
        ++pos_;
        return Regex::symbol_of(c);
    }

    const std::string& text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

bool needs_parens_in_concat(const Regex& r) { return r.kind == Regex::Kind::union_alt; }

bool needs_parens_in_postfix(const Regex& r) {
    switch (r.kind) {
        case Regex::Kind::union_alt:
        case Regex::Kind::concat:
        case Regex::Kind::star:
        case Regex::Kind::plus:
        case Regex::Kind::optional:
            return true;
        default:
            return false;
    }
}

void print_to(const Regex& r, std::string& out) {
    switch (r.kind) {
        case Regex::Kind::empty_set:
            out += "<empty>";  // no surface syntax; cannot appear in parsed trees
            break;
        case Regex::Kind::epsilon:
            out += "eps";
            break;
        case Regex::Kind::symbol:
            if (r.sym == '|' || r.sym == '*' || r.sym == '+' || r.sym == '?' || r.sym == '(' ||
                r.sym == ')' || r.sym == '\\')
                out += '\\';
            out += r.sym;
            break;
        case Regex::Kind::concat:
            for (const Regex& child : r.children) {
                bool parens = needs_parens_in_concat(child);
                if (parens) out += '(';
                print_to(child, out);
                if (parens) out += ')';
            }
            break;
        case Regex::Kind::union_alt:
            print_to(r.children[0], out);
            out += '|';
            print_to(r.children[1], out);
            break;
        case Regex::Kind::star:
        case Regex::Kind::plus:
        case Regex::Kind::optional: {
            bool parens = needs_parens_in_postfix(r.children[0]);
            if (parens) out += '(';
            print_to(r.children[0], out);
            if (parens) out += ')';
            out += r.kind == Regex::Kind::star ? '*' : r.kind == Regex::Kind::plus ? '+' : '?';
            break;
        }
    }
}

}  // namespace

Regex parse_regex(const std::string& text, const Alphabet& alphabet) {
    return Parser(text, alphabet).parse();
}

std::string print_regex(const Regex& r) {
    std::string out;
    print_to(r, out);
    return out;
}

Nfa compile(const Regex& r, const Alphabet& alphabet) {
    switch (r.kind) {
        case Regex::Kind::empty_set:
            return empty_language(alphabet);
        case Regex::Kind::epsilon:
            return epsilon_language(alphabet);
        case Regex::Kind::symbol:
            return word_language(alphabet, Word(1, r.sym));
        case Regex::Kind::concat:
            return concat_nfa(compile(r.children[0], alphabet), compile(r.children[1], alphabet));
        case Regex::Kind::union_alt:
            return boolean_combine(BoolOp::union_op, compile(r.children[0], alphabet),
                                   compile(r.children[1], alphabet));
        case Regex::Kind::star:
            return star_nfa(compile(r.children[0], alphabet));
        case Regex::Kind::plus:
            return concat_nfa(compile(r.children[0], alphabet),
                              star_nfa(compile(r.children[0], alphabet)));
        case Regex::Kind::optional:
            return boolean_combine(BoolOp::union_op, epsilon_language(alphabet),
                                   compile(r.children[0], alphabet));
    }
    throw std::logic_error("unreachable");
}

Nfa regex_language(const std::string& text, const Alphabet& alphabet) {
    return compile(parse_regex(text, alphabet), alphabet);
}

}  // namespace wqo

#include "preact/regex.hpp"

namespace preact {

RegularExpr RegularExpr::concat(RegularExpr a, RegularExpr b) {
    RegularExpr e{RegexKind::Concat, 0, {}};
    e.children.push_back(std::move(a));
    e.children.push_back(std::move(b));
    return e;
}

RegularExpr RegularExpr::unite(RegularExpr a, RegularExpr b) {
    RegularExpr e{RegexKind::Union, 0, {}};
    e.children.push_back(std::move(a));
    e.children.push_back(std::move(b));
    return e;
}

RegularExpr RegularExpr::star(RegularExpr a) {
    RegularExpr e{RegexKind::Star, 0, {}};
    e.children.push_back(std::move(a));
    return e;
}

regex_parse_error::regex_parse_error(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Parser {
public:
    Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    RegularExpr parse() {
        if (text_.empty()) throw regex_parse_error("empty expression (use %e or %0)", 0);
        RegularExpr e = parse_union();
        if (pos_ != text_.size())
            throw regex_parse_error(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return e;
    }

private:
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    bool atom_ahead() const {
        if (done()) return false;
        char c = peek();
        return c == '(' || c == '%' || (c != '|' && c != '*' && c != ')');
    }

    RegularExpr parse_union() {
        RegularExpr e = parse_concat();
        while (!done() && peek() == '|') {
            ++pos_;
            e = RegularExpr::unite(std::move(e), parse_concat());
        }
        return e;
    }

    RegularExpr parse_concat() {
        if (!atom_ahead())
            throw regex_parse_error("expected an expression", pos_);
        RegularExpr e = parse_factor();
        while (atom_ahead()) e = RegularExpr::concat(std::move(e), parse_factor());
        return e;
    }

    RegularExpr parse_factor() {
        RegularExpr e = parse_atom();
        while (!done() && peek() == '*') {
            ++pos_;
            e = RegularExpr::star(std::move(e));
        }
        return e;
    }

    RegularExpr parse_atom() {
        if (done()) throw regex_parse_error("expected an expression", pos_);
        char c = peek();
        if (c == '(') {
            std::size_t open = pos_++;
            RegularExpr e = parse_union();
            if (done() || peek() != ')')
                throw regex_parse_error("unclosed '('", open);
            ++pos_;
            return e;
        }
        if (c == '%') {
            ++pos_;
            if (done()) throw regex_parse_error("dangling '%'", pos_ - 1);
            char esc = text_[pos_++];
            if (esc == 'e') return RegularExpr::epsilon();
            if (esc == '0') return RegularExpr::empty();
            throw regex_parse_error(std::string("unknown escape '%") + esc + "'", pos_ - 2);
        }
        if (c == ')' || c == '|' || c == '*')
            throw regex_parse_error(std::string("unexpected '") + c + "'", pos_);
        if (!alphabet_.contains(c))
            throw regex_parse_error(std::string("unknown symbol '") + c + "'", pos_);
        ++pos_;
        return RegularExpr::sym(c);
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

int precedence(RegexKind k) {
    switch (k) {
        case RegexKind::Union: return 1;
        case RegexKind::Concat: return 2;
        default: return 3;
    }
}

void print(const RegularExpr& e, int context, std::string& out) {
    const int prec = precedence(e.kind);
    const bool parens = prec < context;
    if (parens) out += '(';
    switch (e.kind) {
        case RegexKind::Empty: out += "%0"; break;
        case RegexKind::Epsilon: out += "%e"; break;
        case RegexKind::Symbol: out += e.symbol; break;
        case RegexKind::Concat:
            print(e.children[0], 2, out);
            print(e.children[1], 2, out);
            break;
        case RegexKind::Union:
            print(e.children[0], 1, out);
            out += '|';
            print(e.children[1], 1, out);
            break;
        case RegexKind::Star:
            print(e.children[0], 3, out);
            out += '*';
            break;
    }
    if (parens) out += ')';
}

}  // namespace

RegularExpr parse_regex(std::string_view text, const Alphabet& alphabet) {
    return Parser(text, alphabet).parse();
}

std::string to_string(const RegularExpr& e) {
    std::string out;
    print(e, 0, out);
    return out;
}

}  // namespace preact

#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "preact/words.hpp"

namespace preact {

enum class RegexKind { Empty, Epsilon, Symbol, Concat, Union, Star };

/// Regular expression syntax tree. Concat and Union are binary, Star is
/// unary. Empty denotes the empty language (%0), Epsilon the empty word (%e).
struct RegularExpr {
    RegexKind kind = RegexKind::Empty;
    char symbol = 0;
    std::vector<RegularExpr> children;

    static RegularExpr empty() { return {RegexKind::Empty, 0, {}}; }
    static RegularExpr epsilon() { return {RegexKind::Epsilon, 0, {}}; }
    static RegularExpr sym(char c) { return {RegexKind::Symbol, c, {}}; }
    static RegularExpr concat(RegularExpr a, RegularExpr b);
    static RegularExpr unite(RegularExpr a, RegularExpr b);
    static RegularExpr star(RegularExpr a);

    bool operator==(const RegularExpr&) const = default;
};

class regex_parse_error : public std::runtime_error {
public:
    regex_parse_error(const std::string& message, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Dialect: single symbols, juxtaposition for product, | for union, * for
/// star, parentheses, %e for the empty word, %0 for the empty language.
RegularExpr parse_regex(std::string_view text, const Alphabet& alphabet);

/// Minimal-parenthesis printer; parse(to_string(e)) reproduces e.
std::string to_string(const RegularExpr& e);

}  // namespace preact

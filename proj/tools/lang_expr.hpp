#pragma once

#include <string>

#include "preact/oracle.hpp"

namespace preact {

/// Compiles a language expression to a membership oracle. Leaves:
///   re:REGEX        regular language
///   finite:w1|w2    finite word list (%e for the empty word)
///   ideal:w1|w2     two-sided ideal generated by the factors
///   eqblocks        a^n b^n (n >= 1) over the first two symbols
///   balance:K       words whose a/b balance equals K
/// Combinators: union(e,e), inter(e,e), concat(e,e), star(e).
LanguageOracle parse_lang_expr(const Alphabet& alphabet, const std::string& text);

}  // namespace preact

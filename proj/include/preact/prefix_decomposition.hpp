#pragma once

#include <optional>
#include <vector>

#include "preact/dfa.hpp"
#include "preact/recognition.hpp"

namespace preact {

/// A language of the form H C* with H and C prefix codes.
struct PLanguage {
    Dfa head;
    Dfa code;
};

PLanguage make_p_language(Dfa head, Dfa code);
PLanguage p_language_from_words(const Alphabet& alphabet, const std::vector<Word>& head,
                                const std::vector<Word>& code);

Dfa p_language_dfa(const PLanguage& p);

/// The two-state acceptor of H C*: x0 flows to the terminal y along H C*
/// and y returns to itself along C*. When %e is in H both states coincide.
Preacceptor build_preacceptor(const PLanguage& p);

struct ExtractedCodes {
    Dfa head;    // prefix-free kernel of the words from the initial state to the terminal
    Dfa code;    // first returns of the terminal to itself
    bool exact;  // built from exact reach languages rather than bounded enumeration
};

/// Recovers a head/code pair with head code* equal to the words driving the
/// initial state onto the given terminal. Exact whenever the machine
/// supports exact reach languages; otherwise reach sets are enumerated up to
/// the bound, which is then required.
ExtractedCodes extract_codes(const Preacceptor& acceptor, int terminal,
                             std::optional<std::size_t> bound);

struct Decomposition {
    std::vector<int> terminals;              // acceptor declaration order
    std::vector<ExtractedCodes> components;  // aligned with terminals
};

/// One head/code component per terminal state; the accepted language is the
/// union of the component languages, and distinct components are disjoint.
Decomposition decompose(const Preacceptor& acceptor, std::optional<std::size_t> bound);

/// Factors w as one head word followed by code words. Both factors are
/// forced at every step because prefix codes admit at most one prefix of any
/// word, so the factorization is unique when it exists.
std::optional<std::vector<Word>> unique_factorization(const PLanguage& p, const Word& w);

/// Independent membership check for H C* by dynamic programming over cut
/// positions.
bool hcstar_member_dp(const PLanguage& p, const Word& w);

}  // namespace preact

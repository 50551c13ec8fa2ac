#pragma once

#include <optional>
#include <string>

#include "preact/recognition.hpp"

namespace preact {

/// The acceptor observed on initial and terminal states only. Restricting a
/// preaction to a state subset keeps it a preaction, and keeping exactly
/// {initial} + terminals preserves the accepted language.
Preacceptor trim(const Preacceptor& acceptor);

struct MinimalPreacceptor {
    Preacceptor acceptor;
    bool exact = false;  // built from an exact language description
    std::string method;  // "family", "regular" or "bounded-signatures"
};

/// Canonical quotient acceptor for a regular language: one state for the
/// class of the empty word plus one per congruence class inside the
/// language.
MinimalPreacceptor minimal_preacceptor_regular(const Dfa& language);

/// Minimization through the quotient machine. Exact when the acceptor's
/// language family is recognized or an exact regular description exists;
/// otherwise classes are identified by membership signatures over suffixes
/// of length <= suffix_bound, discovered from words of length <= word_bound.
MinimalPreacceptor minimal_preacceptor_bounded(const Preacceptor& acceptor,
                                               std::size_t word_bound, std::size_t suffix_bound);

struct EquivalenceResult {
    bool equal = false;
    bool exact = false;                // compared through exact regular descriptions
    std::size_t bound = 0;             // inspected length for the bounded route
    std::optional<Word> difference;    // shortlex-least disagreement found
};

/// Language equality of two acceptors: exact when both have regular
/// descriptions, otherwise compared on all words of length <= bound.
EquivalenceResult syntactically_equivalent(const Preacceptor& a, const Preacceptor& b,
                                           std::size_t bound);

}  // namespace preact

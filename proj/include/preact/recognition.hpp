#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "preact/machine.hpp"
#include "preact/oracle.hpp"
#include "preact/words.hpp"

namespace preact {

/// An acceptor over a preaction machine: a word is accepted when it acts on
/// the initial state and lands on a terminal one.
struct Preacceptor {
    PreactionMachine machine;
    int initial;
    std::vector<int> terminal;  // declaration order, distinct
};

Preacceptor make_preacceptor(PreactionMachine machine, int initial, std::vector<int> terminal);

bool accepts(const Preacceptor& acceptor, const Word& w);

/// Accepted words of length <= bound, in shortlex order.
std::vector<Word> language_upto(const Preacceptor& acceptor, std::size_t bound);

LanguageOracle oracle_of(const Preacceptor& acceptor);

/// Exact regular description of the accepted language, when the machine
/// supports exact reach languages from the initial state.
std::optional<Dfa> language_dfa(const Preacceptor& acceptor);

struct CongruenceBlock {
    Word representative;        // shortlex-least member
    std::vector<Word> members;  // shortlex order
    bool inside;                // members belong to the language
};

struct CongruencePartition {
    std::size_t word_bound = 0;
    std::size_t suffix_bound = 0;
    std::vector<CongruenceBlock> blocks;  // ordered by representative
};

/// Groups all words of length <= word_bound by their membership signature
/// over suffixes of length <= suffix_bound. Blocks approximate the right
/// syntactic congruence from above; distinct blocks are genuinely distinct
/// classes, equal blocks might still split at larger suffix bounds.
CongruencePartition bounded_right_congruence(const LanguageOracle& language,
                                             std::size_t word_bound, std::size_t suffix_bound);

struct SeparatedPair {
    Word left, right;
    Word suffix;  // shortlex-least with exactly one of (left suffix, right suffix) inside
};

struct NonrecognizabilityEvidence {
    std::vector<Word> representatives;
    std::size_t suffix_bound = 0;
    bool complete = false;  // every pair separated within the bound
    std::vector<SeparatedPair> separations;
};

/// Shows the given words to lie in pairwise distinct right-congruence
/// classes by exhibiting a separating suffix for every pair. An unbounded
/// family of such words rules out recognition by any finite machine.
NonrecognizabilityEvidence nonrecognizability_witness(const LanguageOracle& language,
                                                      const std::vector<Word>& representatives,
                                                      std::size_t suffix_bound);

/// Product acceptor recognizing the intersection of the two languages.
Preacceptor intersect_acceptors(const Preacceptor& a, const Preacceptor& b);

struct PeriodicityProbe {
    std::size_t bound = 0;
    std::vector<bool> profile;  // f(0) .. f(bound)
    /// Least (preperiod, period) in lexicographic order with
    /// preperiod + 2 * period <= bound and f(k) == f(k + period) on the
    /// whole checkable window.
    std::optional<std::pair<std::size_t, std::size_t>> shape;
};

PeriodicityProbe unary_periodicity_probe(const std::function<bool(std::size_t)>& f,
                                         std::size_t bound);
/// Samples f(k) = accepts(symbol^k).
PeriodicityProbe unary_periodicity_probe(const Preacceptor& acceptor, char symbol,
                                         std::size_t bound);

}  // namespace preact

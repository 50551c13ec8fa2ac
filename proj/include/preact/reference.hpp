#pragma once

#include "preact/axioms.hpp"
#include "preact/globalization.hpp"
#include "preact/recognition.hpp"

namespace preact::reference {

/// Single-threaded, straight-line versions of the scanning kernels. They
/// recompute everything directly instead of tabulating or pruning, and stay
/// in the build as comparison baselines for the parallel implementations.

AxiomReport check_axioms(const EvalFn& eval, const std::vector<int>& states,
                         const Alphabet& alphabet, std::size_t max_len);
AxiomReport check_axioms(const PreactionMachine& machine, std::size_t max_len);

std::vector<Word> language_upto(const Preacceptor& acceptor, std::size_t bound);

/// Filters every word up to depth through the normal-form predicate instead
/// of searching.
std::vector<GlobalClass> expand(const PreactionMachine& machine, std::size_t depth);

FreenessReport freeness_probe(const PreactionMachine& machine, std::size_t depth,
                              std::size_t word_bound);

CongruencePartition bounded_right_congruence(const LanguageOracle& language,
                                             std::size_t word_bound, std::size_t suffix_bound);

}  // namespace preact::reference

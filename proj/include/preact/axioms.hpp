#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "preact/machine.hpp"
#include "preact/words.hpp"

namespace preact {

/// A broken instance of one of the three preaction laws at (state, u, v):
///   'a'  x . %e != x
///   'b'  x.u and (x.u).v defined, but x.(uv) missing or different
///   'c'  x.u and x.(uv) defined, but (x.u).v missing
struct AxiomWitness {
    int state;
    Word u, v;
    char axiom;

    bool operator==(const AxiomWitness&) const = default;
};

struct AxiomReport {
    bool ok = true;
    std::size_t states_checked = 0;
    std::size_t words_checked = 0;
    std::size_t splits_checked = 0;
    std::vector<AxiomWitness> witnesses;  // ordered by (state, u, v)
};

using EvalFn = std::function<std::optional<int>(int, const Word&)>;

/// Exhaustively checks the preaction laws for all listed states against all
/// words and two-part splits of total length <= max_len. Evaluation results
/// must stay inside the listed states. The direct form lets callers probe
/// arbitrary whole-word evaluators, not just built machines.
AxiomReport check_axioms(const EvalFn& eval, const std::vector<int>& states,
                         const Alphabet& alphabet, std::size_t max_len);
AxiomReport check_axioms(const PreactionMachine& machine, std::size_t max_len);

std::string describe(const AxiomWitness& w);

}  // namespace preact

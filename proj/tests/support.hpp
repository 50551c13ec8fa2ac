#pragma once

#include <string>
#include <vector>

#include "preact/axioms.hpp"
#include "preact/machine.hpp"
#include "preact/recognition.hpp"
#include "preact/regex.hpp"

namespace preact::testing {

/// Regex membership straight off the syntax tree, with no automaton in
/// between: computes the set of match end positions by structural recursion.
bool brute_regex_member(const RegularExpr& e, const Word& w);
bool brute_regex_member(const Alphabet& alphabet, const std::string& pattern, const Word& w);

/// Membership in H C* for finite head and code word lists, by dynamic
/// programming over positions. No automata involved.
bool brute_hcstar_member(const std::vector<Word>& head, const std::vector<Word>& code,
                         const Word& w);
bool brute_cstar_member(const std::vector<Word>& code, const Word& w);

/// Equality of globalization classes as the symmetric-transitive closure of
/// single peel steps (x, uv) ~ (x.u, v) over all raw pairs with |word| <=
/// cap, computed by union-find. Independent of normalize().
class ClosureClasses {
public:
    ClosureClasses(const PreactionMachine& machine, std::size_t cap);

    bool equal(int state1, const Word& w1, int state2, const Word& w2) const;

private:
    std::size_t node(int state, const Word& w) const;
    std::size_t find(std::size_t i) const;

    const PreactionMachine& machine_;
    WordSpace space_;
    std::vector<int> slot_;  // state -> dense index
    mutable std::vector<std::size_t> parent_;
};

/// Whole-word evaluator on states {0, 1} that breaks composition: whether a
/// word acts follows its true endpoint under the +1/-1 translation, but the
/// resulting state follows a walk clamped to the window [-1, 2]. Any
/// letter-by-letter evaluator satisfies the composition laws automatically,
/// so the checker is probed with a genuinely non-compositional map.
EvalFn clamped_window_eval(const Alphabet& alphabet);

// shared machines
PreactionMachine integer_machine();                       // Z, a: +1, b: -1, observable {0,1}
PreactionMachine equal_blocks_machine();                  // quotient machine of a^n b^n
PreactionMachine ideal_machine();                         // quotient machine of the ab ideal
PreactionMachine cycle_restriction();                     // 3-cycle observed on 2 states
PreactionMachine flipflop_restriction();                  // 2-state swap observed on 1 state
PreactionMachine trivial_total_machine();                 // one total state
Preacceptor aba_star_acceptor();                          // quotient acceptor of a b a*
Preacceptor competitor4_acceptor();                       // same language on 4 states

struct PlCase {
    std::string name;
    std::vector<Word> head;
    std::vector<Word> code;
};

/// Head/code corpus covering the degenerate shapes: %e in the head, empty
/// head, %e as the only code word.
std::vector<PlCase> p_language_corpus();

}  // namespace preact::testing

#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "preact/regex.hpp"
#include "preact/words.hpp"

namespace preact {

/// Complete deterministic finite automaton: every state has a transition on
/// every symbol, so boolean combinations never leave the representation.
/// Partiality lives one layer up, in the preaction machines.
struct Dfa {
    Alphabet alphabet;
    std::vector<std::string> names;
    std::vector<std::vector<int>> next;  // next[state][symbol]
    int initial = 0;
    std::vector<bool> accepting;

    std::size_t state_count() const { return names.size(); }
    int step(int state, std::size_t symbol) const { return next[state][symbol]; }
    int run(int state, const Word& w) const;
    bool member(const Word& w) const;
    void validate() const;
};

/// Nondeterministic automaton with epsilon moves, the compilation target for
/// regular expressions. Symbol index kEpsilon marks an epsilon edge.
struct Nfa {
    static constexpr int kEpsilon = -1;
    Alphabet alphabet;
    std::vector<std::vector<std::pair<int, int>>> edges;  // state -> (symbol | kEpsilon, target)
    std::set<int> initial;
    std::set<int> accepting;

    int add_state();
};

Dfa determinize(const Nfa& nfa);

Dfa compile(const Alphabet& alphabet, const RegularExpr& e);
Dfa compile(const Alphabet& alphabet, std::string_view regex_text);

Dfa intersect(const Dfa& a, const Dfa& b);
Dfa unite(const Dfa& a, const Dfa& b);
Dfa difference(const Dfa& a, const Dfa& b);
Dfa complement(const Dfa& a);
Dfa concat(const Dfa& a, const Dfa& b);
Dfa star(const Dfa& a);

/// Canonical minimal complete automaton: reachable states only, Moore
/// refinement, then breadth-first renumbering. Equivalent inputs produce
/// structurally identical results.
Dfa minimize(const Dfa& a);

bool is_empty(const Dfa& a);
bool equivalent(const Dfa& a, const Dfa& b);

Dfa empty_language(const Alphabet& alphabet);
Dfa epsilon_only(const Alphabet& alphabet);
Dfa sigma_star(const Alphabet& alphabet);
Dfa sigma_plus(const Alphabet& alphabet);
Dfa from_words(const Alphabet& alphabet, const std::vector<Word>& words);

/// Shortlex-least accepted word, when the language is nonempty.
std::optional<Word> shortest_member(const Dfa& a);
std::vector<Word> members_upto(const Dfa& a, std::size_t bound);

/// Shortlex-least word reaching each state from the initial state; states
/// unreachable from the initial state have no entry.
std::vector<std::optional<Word>> reaching_words(const Dfa& a);

/// u, uv in L forces v empty. The empty language and {%e} count as prefix
/// codes; any other language containing %e does not.
bool is_prefix_code(const Dfa& a);

/// Shortlex-least witness (u, uv) with both in L and v nonempty, if any.
std::optional<std::pair<Word, Word>> prefix_violation(const Dfa& a);

/// Words of L with no proper prefix in L.
Dfa prefix_free_kernel(const Dfa& a);

struct NerodePartition {
    Dfa minimal;
    std::vector<Word> representatives;  // per minimal state, shortlex-least
    bool inside(int state) const { return minimal.accepting[state]; }
};

/// Right-congruence classes of L as states of the minimal complete
/// automaton, each with its shortlex-least representative.
NerodePartition nerode_classes(const Dfa& a);

}  // namespace preact

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "preact/dfa.hpp"
#include "preact/oracle.hpp"
#include "preact/words.hpp"

namespace preact {

/// Total deterministic action of the free monoid on a finite state set.
struct TotalAction {
    Alphabet alphabet;
    std::vector<std::string> names;
    std::vector<std::vector<int>> next;  // next[state][symbol]

    int step(int state, std::size_t symbol) const { return next[state][symbol]; }
    int run(int state, const Word& w) const;
    void validate() const;
};

/// Restriction of a total action to an observable subset of its states.
/// A word acts exactly when its endpoint in the host is observable;
/// intermediate host states are unconstrained.
struct FiniteRestriction {
    TotalAction host;
    std::vector<int> observable;  // sorted distinct host states
};

/// Translation action on Z^k: each letter adds a fixed vector, and a word
/// acts on an observable point exactly when the translated point is again
/// observable.
struct IntegerTranslation {
    std::size_t dimension = 1;
    std::vector<std::vector<long long>> letter;      // per alphabet symbol
    std::vector<std::vector<long long>> observable;  // sorted points
};

/// Two-state machine carrying a language H C* with H and C prefix codes:
/// state x0 flows to the terminal y along H C*, and y returns to itself
/// along C*. When %e is in H the two states coincide and the single state
/// fixes exactly C*.
struct PLanguageMachine {
    Dfa head;     // H
    Dfa code;     // C
    Dfa hc_star;  // H C*, cached
    Dfa c_star;   // C*, cached
    bool epsilon_head = false;
};

/// Quotient-style machine driven by a membership family: state 0 is the
/// class of the empty word, the other states are classes of words inside the
/// language, and a word w moves state [u] to the class of uw exactly when uw
/// is in the language.
struct MembershipDriven {
    MembershipFamily family;
    std::vector<Word> reps;   // reps[0] is the empty word
    std::vector<bool> inside;  // per state: representative is in the language

    // regular-form identification
    std::optional<Dfa> language;    // minimized
    std::vector<int> dfa_to_state;  // dfa state -> machine state, -1 elsewhere
    std::vector<int> state_to_dfa;

    // generic identification
    std::size_t suffix_bound = 0;
    std::vector<Word> suffixes;                 // shortlex, lengths <= suffix_bound
    std::vector<std::vector<bool>> signatures;  // per state, one bit per suffix
};

class PreactionMachine;

/// Componentwise product: a word acts on a pair exactly when it acts on both
/// components.
struct ProductMachine {
    std::shared_ptr<const PreactionMachine> left;
    std::shared_ptr<const PreactionMachine> right;
    std::vector<std::pair<int, int>> pairs;  // state i = (left state, right state)
};

/// A finite-state machine whose whole-word evaluation map is a preaction of
/// the free monoid: evaluation is defined on the empty word, and definedness
/// composes coherently across concatenation in both directions. Evaluation
/// is by whole words; the machines here are generally not determined by
/// their single-letter transitions.
class PreactionMachine {
public:
    using Backend = std::variant<FiniteRestriction, IntegerTranslation, PLanguageMachine,
                                 MembershipDriven, ProductMachine>;

    PreactionMachine(Alphabet alphabet, Backend backend);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const Backend& backend() const noexcept { return backend_; }

    int state_count() const noexcept { return static_cast<int>(names_.size()); }
    const std::vector<int>& active() const noexcept { return active_; }
    bool is_active(int state) const;
    const std::string& state_name(int state) const;
    std::optional<int> state_by_name(std::string_view name) const;

    /// Endpoint of w acting on an active state, when defined. Throws on
    /// inactive states and foreign symbols.
    std::optional<int> eval(int state, const Word& w) const;

    /// The same machine observed on a subset of its active states. The
    /// restriction of a preaction to any state subset is again a preaction,
    /// because only endpoints are constrained.
    PreactionMachine restricted_to(std::vector<int> states) const;

    /// Exact regular description of { w : eval(from, w) == to } for backends
    /// that support one; nullopt otherwise.
    std::optional<Dfa> exact_reach(int from, int to) const;

    static PreactionMachine finite_restriction(TotalAction host, std::vector<int> observable);
    static PreactionMachine integer_translation(const Alphabet& alphabet,
                                                std::vector<std::vector<long long>> letter,
                                                std::vector<std::vector<long long>> observable);
    static PreactionMachine p_language(Dfa head, Dfa code);
    static PreactionMachine membership(MembershipFamily family);
    static PreactionMachine membership(MembershipFamily family, std::vector<Word> reps);
    static PreactionMachine product(PreactionMachine left, PreactionMachine right);

private:
    Alphabet alphabet_;
    Backend backend_;
    std::vector<std::string> names_;
    std::vector<int> active_;  // sorted
};

std::string render_point(const std::vector<long long>& point);

/// Membership of u s for every suffix s with |s| <= bound, in shortlex order.
std::vector<bool> residual_signature(const MembershipFamily& family, const Word& u,
                                     std::size_t bound);
std::vector<bool> residual_signature(const LanguageOracle& oracle, const Word& u,
                                     std::size_t bound);

}  // namespace preact

#include "preact/minimization.hpp"

#include <algorithm>
#include <stdexcept>

namespace preact {

namespace {

Preacceptor membership_acceptor(PreactionMachine machine) {
    const auto& backend = std::get<MembershipDriven>(machine.backend());
    std::vector<int> terminal;
    for (std::size_t i = 0; i < backend.inside.size(); ++i)
        if (backend.inside[i]) terminal.push_back(static_cast<int>(i));
    return make_preacceptor(std::move(machine), 0, std::move(terminal));
}

/// Whole machine as quotient of a recognized family, with every inside state
/// terminal: minimizing reproduces the family machine itself.
bool is_family_canonical(const Preacceptor& acceptor) {
    const auto* backend = std::get_if<MembershipDriven>(&acceptor.machine.backend());
    if (!backend) return false;
    if (std::holds_alternative<GenericFamily>(backend->family.impl())) return false;
    if (acceptor.initial != 0) return false;
    if (acceptor.machine.active().size() != backend->inside.size()) return false;
    std::vector<int> expected;
    for (std::size_t i = 0; i < backend->inside.size(); ++i)
        if (backend->inside[i]) expected.push_back(static_cast<int>(i));
    std::vector<int> terminal = acceptor.terminal;
    std::sort(terminal.begin(), terminal.end());
    return terminal == expected;
}

}  // namespace

Preacceptor trim(const Preacceptor& acceptor) {
    std::vector<int> keep = acceptor.terminal;
    keep.push_back(acceptor.initial);
    return Preacceptor{acceptor.machine.restricted_to(std::move(keep)), acceptor.initial,
                       acceptor.terminal};
}

MinimalPreacceptor minimal_preacceptor_regular(const Dfa& language) {
    auto machine =
        PreactionMachine::membership(MembershipFamily::regular(language.alphabet, language));
    return {membership_acceptor(std::move(machine)), true, "regular"};
}

MinimalPreacceptor minimal_preacceptor_bounded(const Preacceptor& acceptor,
                                               std::size_t word_bound,
                                               std::size_t suffix_bound) {
    if (is_family_canonical(acceptor)) {
        const auto& backend = std::get<MembershipDriven>(acceptor.machine.backend());
        auto machine = PreactionMachine::membership(backend.family);
        return {membership_acceptor(std::move(machine)), true, "family"};
    }
    if (auto lang = language_dfa(acceptor)) return minimal_preacceptor_regular(*lang);

    const LanguageOracle language = oracle_of(acceptor);
    const auto partition = bounded_right_congruence(language, word_bound, suffix_bound);
    std::vector<Word> reps{Word()};
    for (const auto& block : partition.blocks)
        if (block.inside && !block.representative.empty()) reps.push_back(block.representative);
    auto machine = PreactionMachine::membership(
        MembershipFamily::generic(language, suffix_bound), std::move(reps));
    return {membership_acceptor(std::move(machine)), false, "bounded-signatures"};
}

EquivalenceResult syntactically_equivalent(const Preacceptor& a, const Preacceptor& b,
                                           std::size_t bound) {
    if (!(a.machine.alphabet() == b.machine.alphabet()))
        throw std::invalid_argument("equivalence: alphabet mismatch");
    auto da = language_dfa(a);
    auto db = da ? language_dfa(b) : std::optional<Dfa>();
    if (da && db) {
        EquivalenceResult result{equivalent(*da, *db), true, 0, std::nullopt};
        if (!result.equal)
            result.difference = shortest_member(unite(difference(*da, *db), difference(*db, *da)));
        return result;
    }
    EquivalenceResult result{true, false, bound, std::nullopt};
    for (const Word& w : all_words_upto(a.machine.alphabet(), bound)) {
        if (accepts(a, w) != accepts(b, w)) {
            result.equal = false;
            result.difference = w;
            break;
        }
    }
    return result;
}

}  // namespace preact

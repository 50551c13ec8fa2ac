#include "preact/reference.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace preact::reference {

AxiomReport check_axioms(const EvalFn& eval, const std::vector<int>& states,
                         const Alphabet& alphabet, std::size_t max_len) {
    std::set<int> known(states.begin(), states.end());
    if (known.size() != states.size())
        throw std::invalid_argument("axioms: duplicate state");
    auto checked_eval = [&](int state, const Word& w) {
        auto result = eval(state, w);
        if (result && !known.count(*result))
            throw std::invalid_argument("axioms: evaluation left the state set");
        return result;
    };

    const auto words = all_words_upto(alphabet, max_len);
    AxiomReport report;
    report.states_checked = states.size();
    report.words_checked = words.size();
    for (int x : states) {
        if (checked_eval(x, Word()) != std::optional<int>(x))
            report.witnesses.push_back({x, Word(), Word(), 'a'});
        for (const Word& u : words) {
            const auto xu = checked_eval(x, u);
            for (const Word& v : words) {
                if (u.size() + v.size() > max_len) continue;
                ++report.splits_checked;
                if (!xu) continue;
                const auto xu_v = checked_eval(*xu, v);
                const auto xuv = checked_eval(x, u + v);
                if (xu_v && (!xuv || *xuv != *xu_v))
                    report.witnesses.push_back({x, u, v, 'b'});
                else if (xuv && !xu_v)
                    report.witnesses.push_back({x, u, v, 'c'});
            }
        }
    }
    report.ok = report.witnesses.empty();
    return report;
}

AxiomReport check_axioms(const PreactionMachine& machine, std::size_t max_len) {
    return reference::check_axioms(
        [&machine](int state, const Word& w) { return machine.eval(state, w); },
        machine.active(), machine.alphabet(), max_len);
}

std::vector<Word> language_upto(const Preacceptor& acceptor, std::size_t bound) {
    std::vector<Word> out;
    for (const Word& w : all_words_upto(acceptor.machine.alphabet(), bound))
        if (accepts(acceptor, w)) out.push_back(w);
    return out;
}

std::vector<GlobalClass> expand(const PreactionMachine& machine, std::size_t depth) {
    std::vector<GlobalClass> out;
    const auto words = all_words_upto(machine.alphabet(), depth);
    for (int x : machine.active())
        for (const Word& w : words)
            if (is_normal_form(machine, {x, w})) out.push_back({x, w});
    std::sort(out.begin(), out.end());
    return out;
}

FreenessReport freeness_probe(const PreactionMachine& machine, std::size_t depth,
                              std::size_t word_bound) {
    FreenessReport report{depth, word_bound, {}, {}};
    const auto words = all_words_upto(machine.alphabet(), word_bound);
    for (const GlobalClass& c : reference::expand(machine, depth)) {
        std::map<GlobalClass, Word> seen;
        bool collided = false;
        for (const Word& u : words) {
            auto [it, fresh] = seen.try_emplace(act(machine, c, u), u);
            if (!fresh) {
                report.collisions.push_back({c, it->second, u});
                collided = true;
                break;
            }
        }
        if (!collided) report.separating.push_back(c);
    }
    return report;
}

CongruencePartition bounded_right_congruence(const LanguageOracle& language,
                                             std::size_t word_bound, std::size_t suffix_bound) {
    const auto suffixes = all_words_upto(language.alphabet(), suffix_bound);
    CongruencePartition part{word_bound, suffix_bound, {}};
    std::map<std::vector<bool>, std::size_t> block_of;
    for (const Word& w : all_words_upto(language.alphabet(), word_bound)) {
        std::vector<bool> sig;
        sig.reserve(suffixes.size());
        for (const Word& s : suffixes) sig.push_back(language.member(w + s));
        auto [it, fresh] = block_of.try_emplace(std::move(sig), part.blocks.size());
        if (fresh) part.blocks.push_back({w, {}, language.member(w)});
        part.blocks[it->second].members.push_back(w);
    }
    return part;
}

}  // namespace preact::reference

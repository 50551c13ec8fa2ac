#include "preact/recognition.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>

#include "preact/parallel.hpp"

namespace preact {

Preacceptor make_preacceptor(PreactionMachine machine, int initial, std::vector<int> terminal) {
    if (!machine.is_active(initial))
        throw std::invalid_argument("acceptor: initial state is not active");
    std::vector<int> seen;
    for (int t : terminal) {
        if (!machine.is_active(t))
            throw std::invalid_argument("acceptor: terminal state " + std::to_string(t) +
                                        " is not active");
        if (std::find(seen.begin(), seen.end(), t) != seen.end())
            throw std::invalid_argument("acceptor: duplicate terminal state");
        seen.push_back(t);
    }
    return Preacceptor{std::move(machine), initial, std::move(terminal)};
}

bool accepts(const Preacceptor& acceptor, const Word& w) {
    auto end = acceptor.machine.eval(acceptor.initial, w);
    if (!end) return false;
    return std::find(acceptor.terminal.begin(), acceptor.terminal.end(), *end) !=
           acceptor.terminal.end();
}

std::vector<Word> language_upto(const Preacceptor& acceptor, std::size_t bound) {
    const WordSpace space(acceptor.machine.alphabet(), bound);
    const auto flags = par::parallel_map<char>(space.size(), [&](std::size_t i) {
        return static_cast<char>(accepts(acceptor, space.at(i)));
    });
    std::vector<Word> words;
    for (std::size_t i = 0; i < space.size(); ++i)
        if (flags[i]) words.push_back(space.at(i));
    return words;
}

LanguageOracle oracle_of(const Preacceptor& acceptor) {
    auto shared = std::make_shared<const Preacceptor>(acceptor);
    return LanguageOracle(acceptor.machine.alphabet(), "accepted language",
                          [shared](const Word& w) { return accepts(*shared, w); });
}

std::optional<Dfa> language_dfa(const Preacceptor& acceptor) {
    Dfa lang = empty_language(acceptor.machine.alphabet());
    for (int t : acceptor.terminal) {
        auto reach = acceptor.machine.exact_reach(acceptor.initial, t);
        if (!reach) return std::nullopt;
        lang = unite(lang, *reach);
    }
    return minimize(lang);
}

CongruencePartition bounded_right_congruence(const LanguageOracle& language,
                                             std::size_t word_bound, std::size_t suffix_bound) {
    const auto words = all_words_upto(language.alphabet(), word_bound);
    const auto suffixes = all_words_upto(language.alphabet(), suffix_bound);
    const auto signatures = par::parallel_map<std::vector<bool>>(
        words.size(), [&](std::size_t i) {
            std::vector<bool> sig;
            sig.reserve(suffixes.size());
            for (const Word& s : suffixes) sig.push_back(language.member(words[i] + s));
            return sig;
        });
    CongruencePartition part{word_bound, suffix_bound, {}};
    std::map<std::vector<bool>, std::size_t> block_of;
    for (std::size_t i = 0; i < words.size(); ++i) {
        auto [it, fresh] = block_of.try_emplace(signatures[i], part.blocks.size());
        if (fresh) part.blocks.push_back({words[i], {}, bool(signatures[i][0])});
        part.blocks[it->second].members.push_back(words[i]);
    }
    return part;
}

NonrecognizabilityEvidence nonrecognizability_witness(const LanguageOracle& language,
                                                      const std::vector<Word>& representatives,
                                                      std::size_t suffix_bound) {
    const auto suffixes = all_words_upto(language.alphabet(), suffix_bound);
    NonrecognizabilityEvidence evidence{representatives, suffix_bound, true, {}};
    for (std::size_t i = 0; i < representatives.size(); ++i) {
        for (std::size_t j = i + 1; j < representatives.size(); ++j) {
            bool separated = false;
            for (const Word& s : suffixes) {
                if (language.member(representatives[i] + s) !=
                    language.member(representatives[j] + s)) {
                    evidence.separations.push_back({representatives[i], representatives[j], s});
                    separated = true;
                    break;
                }
            }
            if (!separated) evidence.complete = false;
        }
    }
    return evidence;
}

Preacceptor intersect_acceptors(const Preacceptor& a, const Preacceptor& b) {
    PreactionMachine machine = PreactionMachine::product(a.machine, b.machine);
    const auto& pairs = std::get<ProductMachine>(machine.backend()).pairs;
    auto index_of = [&pairs](int l, int r) {
        auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(l, r));
        return static_cast<int>(it - pairs.begin());
    };
    const int initial = index_of(a.initial, b.initial);
    std::vector<int> terminal;
    for (int ta : a.terminal)
        for (int tb : b.terminal) terminal.push_back(index_of(ta, tb));
    std::sort(terminal.begin(), terminal.end());
    return make_preacceptor(std::move(machine), initial, std::move(terminal));
}

PeriodicityProbe unary_periodicity_probe(const std::function<bool(std::size_t)>& f,
                                         std::size_t bound) {
    PeriodicityProbe probe{bound, {}, std::nullopt};
    probe.profile.reserve(bound + 1);
    for (std::size_t k = 0; k <= bound; ++k) probe.profile.push_back(f(k));
    for (std::size_t p = 0; p <= bound && !probe.shape; ++p) {
        for (std::size_t q = 1; p + 2 * q <= bound; ++q) {
            bool matches = true;
            for (std::size_t k = p; k + q <= bound && matches; ++k)
                matches = probe.profile[k] == probe.profile[k + q];
            if (matches) {
                probe.shape = {p, q};
                break;
            }
        }
    }
    return probe;
}

PeriodicityProbe unary_periodicity_probe(const Preacceptor& acceptor, char symbol,
                                         std::size_t bound) {
    if (!acceptor.machine.alphabet().contains(symbol))
        throw std::invalid_argument("periodicity probe: symbol not in alphabet");
    return unary_periodicity_probe(
        [&](std::size_t k) { return accepts(acceptor, Word(std::string(k, symbol))); }, bound);
}

}  // namespace preact

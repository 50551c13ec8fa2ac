#include "preact/axioms.hpp"

#include <map>
#include <stdexcept>

#include "preact/parallel.hpp"

namespace preact {

AxiomReport check_axioms(const EvalFn& eval, const std::vector<int>& states,
                         const Alphabet& alphabet, std::size_t max_len) {
    const WordSpace space(alphabet, max_len);
    const std::size_t words = space.size();
    std::vector<Word> word_at(words);
    for (std::size_t i = 0; i < words; ++i) word_at[i] = space.at(i);

    std::map<int, std::size_t> row_of;
    for (std::size_t si = 0; si < states.size(); ++si)
        if (!row_of.emplace(states[si], si).second)
            throw std::invalid_argument("axioms: duplicate state");

    const auto table = par::parallel_map<std::vector<std::optional<int>>>(
        states.size(), [&](std::size_t si) {
            std::vector<std::optional<int>> row(words);
            for (std::size_t wi = 0; wi < words; ++wi) row[wi] = eval(states[si], word_at[wi]);
            return row;
        });
    for (const auto& row : table)
        for (const auto& endpoint : row)
            if (endpoint && !row_of.count(*endpoint))
                throw std::invalid_argument("axioms: evaluation left the state set");

    std::size_t splits = 0;
    for (std::size_t iu = 0; iu < words; ++iu)
        splits += space.count_upto(max_len - word_at[iu].size());
    AxiomReport report{true, states.size(), words, states.size() * splits, {}};

    const auto per_state = par::parallel_map<std::vector<AxiomWitness>>(
        states.size(), [&](std::size_t si) {
            std::vector<AxiomWitness> found;
            const auto& row = table[si];
            if (row[0] != std::optional<int>(states[si]))
                found.push_back({states[si], Word(), Word(), 'a'});
            for (std::size_t iu = 0; iu < words; ++iu) {
                const auto xu = row[iu];
                if (!xu) continue;
                const Word& u = word_at[iu];
                const auto& mid_row = table[row_of.at(*xu)];
                const std::size_t limit = space.count_upto(max_len - u.size());
                for (std::size_t iv = 0; iv < limit; ++iv) {
                    const Word& v = word_at[iv];
                    const auto xu_v = mid_row[iv];
                    const auto xuv = row[space.index_of(u + v)];
                    if (xu_v && (!xuv || *xuv != *xu_v))
                        found.push_back({states[si], u, v, 'b'});
                    else if (xuv && !xu_v)
                        found.push_back({states[si], u, v, 'c'});
                }
            }
            return found;
        });
    for (const auto& found : per_state)
        report.witnesses.insert(report.witnesses.end(), found.begin(), found.end());
    report.ok = report.witnesses.empty();
    return report;
}

AxiomReport check_axioms(const PreactionMachine& machine, std::size_t max_len) {
    return check_axioms(
        [&machine](int state, const Word& w) { return machine.eval(state, w); },
        machine.active(), machine.alphabet(), max_len);
}

std::string describe(const AxiomWitness& w) {
    const std::string head = "state " + std::to_string(w.state) + ", u=" + display_word(w.u) +
                             ", v=" + display_word(w.v) + ": ";
    switch (w.axiom) {
        case 'a': return head + "empty word does not fix the state";
        case 'b': return head + "(x.u).v defined but x.(uv) missing or different";
        default: return head + "x.u and x.(uv) defined but (x.u).v missing";
    }
}

}  // namespace preact

#include "preact/globalization.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "preact/parallel.hpp"

namespace preact {

GlobalClass normalize(const PreactionMachine& machine, int state, const Word& w) {
    for (std::size_t n = w.size() + 1; n-- > 0;)
        if (auto y = machine.eval(state, w.prefix(n))) return {*y, w.suffix_from(n)};
    throw std::logic_error("normalize: the empty word failed to act");
}

bool is_normal_form(const PreactionMachine& machine, const GlobalClass& c) {
    if (!machine.is_active(c.anchor)) return false;
    for (std::size_t n = 1; n <= c.tail.size(); ++n)
        if (machine.eval(c.anchor, c.tail.prefix(n))) return false;
    return true;
}

GlobalClass embed(const PreactionMachine& machine, int state) {
    if (!machine.is_active(state))
        throw std::invalid_argument("embed: state " + std::to_string(state) + " is not active");
    return {state, Word()};
}

bool classes_equal(const PreactionMachine& machine, int state1, const Word& w1, int state2,
                   const Word& w2) {
    return normalize(machine, state1, w1) == normalize(machine, state2, w2);
}

GlobalClass act(const PreactionMachine& machine, const GlobalClass& c, const Word& u) {
    return normalize(machine, c.anchor, c.tail + u);
}

std::vector<GlobalClass> expand(const PreactionMachine& machine, std::size_t depth) {
    const Alphabet& alphabet = machine.alphabet();
    const auto& anchors = machine.active();
    auto per_anchor = par::parallel_map<std::vector<GlobalClass>>(
        anchors.size(), [&](std::size_t ai) {
            const int x = anchors[ai];
            std::vector<GlobalClass> found;
            std::vector<Word> stack{Word()};
            while (!stack.empty()) {
                Word tail = std::move(stack.back());
                stack.pop_back();
                found.push_back({x, tail});
                if (tail.size() == depth) continue;
                for (std::size_t c = alphabet.size(); c-- > 0;) {
                    Word longer = tail + alphabet.symbol(c);
                    if (!machine.eval(x, longer)) stack.push_back(std::move(longer));
                }
            }
            return found;
        });
    std::vector<GlobalClass> all;
    for (auto& part : per_anchor) all.insert(all.end(), part.begin(), part.end());
    std::sort(all.begin(), all.end());
    return all;
}

FreenessReport freeness_probe(const PreactionMachine& machine, std::size_t depth,
                              std::size_t word_bound) {
    const auto classes = expand(machine, depth);
    const auto words = all_words_upto(machine.alphabet(), word_bound);
    auto collisions = par::parallel_map<std::optional<FreenessCollision>>(
        classes.size(), [&](std::size_t ci) -> std::optional<FreenessCollision> {
            std::map<GlobalClass, Word> seen;
            for (const Word& u : words) {
                auto [it, fresh] = seen.try_emplace(act(machine, classes[ci], u), u);
                if (!fresh) return FreenessCollision{classes[ci], it->second, u};
            }
            return std::nullopt;
        });
    FreenessReport report{depth, word_bound, {}, {}};
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        if (collisions[ci])
            report.collisions.push_back(*collisions[ci]);
        else
            report.separating.push_back(classes[ci]);
    }
    return report;
}

std::string render_class(const PreactionMachine& machine, const GlobalClass& c) {
    return "[" + machine.state_name(c.anchor) + "|" +
           (c.tail.empty() ? std::string("-") : c.tail.text()) + "]";
}

}  // namespace preact

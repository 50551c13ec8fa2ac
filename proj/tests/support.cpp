#include "support.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace preact::testing {

// positions j such that e matches s[from..j)
static std::set<std::size_t> match_ends(const RegularExpr& e, const std::string& s,
                                        std::size_t from) {
    switch (e.kind) {
        case RegexKind::Empty:
            return {};
        case RegexKind::Epsilon:
            return {from};
        case RegexKind::Symbol:
            if (from < s.size() && s[from] == e.symbol) return {from + 1};
            return {};
        case RegexKind::Concat: {
            std::set<std::size_t> out;
            for (std::size_t mid : match_ends(e.children[0], s, from))
                for (std::size_t j : match_ends(e.children[1], s, mid)) out.insert(j);
            return out;
        }
        case RegexKind::Union: {
            auto out = match_ends(e.children[0], s, from);
            auto more = match_ends(e.children[1], s, from);
            out.insert(more.begin(), more.end());
            return out;
        }
        case RegexKind::Star: {
            std::set<std::size_t> out{from};
            std::vector<std::size_t> frontier{from};
            while (!frontier.empty()) {
                std::vector<std::size_t> fresh;
                for (std::size_t p : frontier)
                    for (std::size_t j : match_ends(e.children[0], s, p))
                        if (j != p && out.insert(j).second) fresh.push_back(j);
                frontier = std::move(fresh);
            }
            return out;
        }
    }
    return {};
}

bool brute_regex_member(const RegularExpr& e, const Word& w) {
    return match_ends(e, w.text(), 0).count(w.size()) > 0;
}

bool brute_regex_member(const Alphabet& alphabet, const std::string& pattern, const Word& w) {
    return brute_regex_member(parse_regex(pattern, alphabet), w);
}

bool brute_cstar_member(const std::vector<Word>& code, const Word& w) {
    const std::string& s = w.text();
    std::vector<char> reach(s.size() + 1, 0);
    reach[0] = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!reach[i]) continue;
        for (const Word& c : code) {
            if (c.empty()) continue;  // %e contributes nothing under star
            if (s.compare(i, c.size(), c.text()) == 0) reach[i + c.size()] = 1;
        }
    }
    return reach[s.size()] != 0;
}

bool brute_hcstar_member(const std::vector<Word>& head, const std::vector<Word>& code,
                         const Word& w) {
    for (const Word& h : head)
        if (w.starts_with(h) && brute_cstar_member(code, w.suffix_from(h.size()))) return true;
    return false;
}

ClosureClasses::ClosureClasses(const PreactionMachine& machine, std::size_t cap)
    : machine_(machine), space_(machine.alphabet(), cap) {
    slot_.assign(machine.state_count(), -1);
    int dense = 0;
    for (int s : machine.active()) slot_[s] = dense++;
    parent_.resize(static_cast<std::size_t>(dense) * space_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = i;
    // union every single peel step (x, uv) ~ (x.u, v); transitive closure
    // then glues the multi-step ones. Peeling only shortens words, so pairs
    // within the cap never need partners outside it.
    for (int x : machine_.active()) {
        for (std::size_t wi = 0; wi < space_.size(); ++wi) {
            Word w = space_.at(wi);
            for (std::size_t k = 1; k <= w.size(); ++k) {
                auto mid = machine_.eval(x, w.prefix(k));
                if (!mid) continue;
                std::size_t a = find(node(x, w));
                std::size_t b = find(node(*mid, w.suffix_from(k)));
                if (a != b) parent_[a] = b;
            }
        }
    }
}

std::size_t ClosureClasses::node(int state, const Word& w) const {
    if (state < 0 || state >= static_cast<int>(slot_.size()) || slot_[state] < 0)
        throw std::logic_error("closure oracle: inactive state");
    if (w.size() > space_.max_len()) throw std::logic_error("closure oracle: word beyond cap");
    return static_cast<std::size_t>(slot_[state]) * space_.size() + space_.index_of(w);
}

std::size_t ClosureClasses::find(std::size_t i) const {
    while (parent_[i] != i) {
        parent_[i] = parent_[parent_[i]];
        i = parent_[i];
    }
    return i;
}

bool ClosureClasses::equal(int state1, const Word& w1, int state2, const Word& w2) const {
    return find(node(state1, w1)) == find(node(state2, w2));
}

EvalFn clamped_window_eval(const Alphabet& alphabet) {
    return [alphabet](int x, const Word& w) -> std::optional<int> {
        long long t = x + balance(alphabet, w, 'a', 'b');
        if (t != 0 && t != 1) return std::nullopt;
        long long c = x;
        for (char s : w.text()) c = std::clamp<long long>(c + (s == 'a' ? 1 : -1), -1, 2);
        if (c == 0 || c == 1) return static_cast<int>(c);
        return static_cast<int>(t);
    };
}

PreactionMachine integer_machine() {
    return PreactionMachine::integer_translation(Alphabet("ab"), {{1}, {-1}}, {{0}, {1}});
}

PreactionMachine equal_blocks_machine() {
    return PreactionMachine::membership(MembershipFamily::equal_blocks(Alphabet("ab"), 'a', 'b'));
}

PreactionMachine ideal_machine() {
    return PreactionMachine::membership(MembershipFamily::ideal(Alphabet("ab"), {Word("ab")}));
}

PreactionMachine cycle_restriction() {
    TotalAction host{Alphabet("ab"), {"r0", "r1", "r2"}, {{1, 2}, {2, 0}, {0, 1}}};
    return PreactionMachine::finite_restriction(std::move(host), {0, 1});
}

PreactionMachine flipflop_restriction() {
    TotalAction host{Alphabet("ab"), {"s0", "s1"}, {{1, 0}, {0, 1}}};
    return PreactionMachine::finite_restriction(std::move(host), {0});
}

PreactionMachine trivial_total_machine() {
    TotalAction host{Alphabet("ab"), {"q"}, {{0, 0}}};
    return PreactionMachine::finite_restriction(std::move(host), {0});
}

Preacceptor aba_star_acceptor() {
    PreactionMachine m =
        PreactionMachine::membership(MembershipFamily::regular(Alphabet("ab"), "aba*"));
    const auto& driven = std::get<MembershipDriven>(m.backend());
    std::vector<int> terminal;
    for (int s = 0; s < m.state_count(); ++s)
        if (driven.inside[s]) terminal.push_back(s);
    return make_preacceptor(std::move(m), 0, std::move(terminal));
}

Preacceptor competitor4_acceptor() {
    TotalAction host{Alphabet("ab"), {"q0", "q1", "q2", "dead"},
                     {{1, 3}, {3, 2}, {2, 3}, {3, 3}}};
    PreactionMachine m = PreactionMachine::finite_restriction(std::move(host), {0, 1, 2, 3});
    return make_preacceptor(std::move(m), 0, {2});
}

std::vector<PlCase> p_language_corpus() {
    auto w = [](const char* t) { return word_from_text(t); };
    return {
        {"pair", {w("ab")}, {w("aa")}},
        {"empty head", {}, {w("ab"), w("b")}},
        {"epsilon head", {w("%e")}, {w("ab"), w("b")}},
        {"epsilon code", {w("a")}, {w("%e")}},
        {"plain", {w("a")}, {w("ab"), w("b")}},
        {"wide", {w("a"), w("bb")}, {w("ab"), w("ba")}},
    };
}

}  // namespace preact::testing

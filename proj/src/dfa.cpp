#include "preact/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <stdexcept>

namespace preact {

int Dfa::run(int state, const Word& w) const {
    int s = state;
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto sym = alphabet.index(w[i]);
        if (!sym) throw std::invalid_argument(std::string("dfa run: symbol '") + w[i] + "' not in alphabet");
        s = next[s][*sym];
    }
    return s;
}

bool Dfa::member(const Word& w) const { return accepting[run(initial, w)]; }

void Dfa::validate() const {
    const std::size_t n = names.size();
    if (n == 0) throw std::invalid_argument("dfa: needs at least one state");
    if (next.size() != n || accepting.size() != n)
        throw std::invalid_argument("dfa: table sizes disagree with state count");
    if (initial < 0 || static_cast<std::size_t>(initial) >= n)
        throw std::invalid_argument("dfa: initial state out of range");
    for (const auto& row : next) {
        if (row.size() != alphabet.size())
            throw std::invalid_argument("dfa: transition row incomplete");
        for (int t : row)
            if (t < 0 || static_cast<std::size_t>(t) >= n)
                throw std::invalid_argument("dfa: transition target out of range");
    }
}

int Nfa::add_state() {
    edges.emplace_back();
    return static_cast<int>(edges.size()) - 1;
}

namespace {

void require_same_alphabet(const Dfa& a, const Dfa& b, const char* op) {
    if (!(a.alphabet == b.alphabet))
        throw std::invalid_argument(std::string(op) + ": alphabet mismatch");
}

std::vector<std::string> synth_names(std::size_t n) {
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = "q" + std::to_string(i);
    return names;
}

std::set<int> eps_closure(const Nfa& nfa, std::set<int> states) {
    std::deque<int> work(states.begin(), states.end());
    while (!work.empty()) {
        int s = work.front();
        work.pop_front();
        for (auto [sym, t] : nfa.edges[s])
            if (sym == Nfa::kEpsilon && states.insert(t).second) work.push_back(t);
    }
    return states;
}

Nfa dfa_to_nfa(const Dfa& d) {
    Nfa nfa{d.alphabet, {}, {}, {}};
    nfa.edges.resize(d.state_count());
    for (std::size_t s = 0; s < d.state_count(); ++s) {
        for (std::size_t c = 0; c < d.alphabet.size(); ++c)
            nfa.edges[s].push_back({static_cast<int>(c), d.next[s][c]});
        if (d.accepting[s]) nfa.accepting.insert(static_cast<int>(s));
    }
    nfa.initial.insert(d.initial);
    return nfa;
}

}  // namespace

Dfa determinize(const Nfa& nfa) {
    const std::size_t k = nfa.alphabet.size();
    std::map<std::set<int>, int> ids;
    std::vector<std::set<int>> subsets;
    auto intern = [&](std::set<int> subset) {
        auto [it, fresh] = ids.try_emplace(std::move(subset), static_cast<int>(subsets.size()));
        if (fresh) subsets.push_back(it->first);
        return it->second;
    };

    Dfa d{nfa.alphabet, {}, {}, 0, {}};
    int start = intern(eps_closure(nfa, nfa.initial));
    d.initial = start;
    std::deque<int> work{start};
    std::vector<std::vector<int>> table;
    while (!work.empty()) {
        int id = work.front();
        work.pop_front();
        if (static_cast<std::size_t>(id) >= table.size()) table.resize(id + 1);
        std::set<int> current = subsets[id];
        std::vector<int> row(k);
        for (std::size_t c = 0; c < k; ++c) {
            std::set<int> target;
            for (int s : current)
                for (auto [sym, t] : nfa.edges[s])
                    if (sym == static_cast<int>(c)) target.insert(t);
            std::size_t before = subsets.size();
            int tid = intern(eps_closure(nfa, std::move(target)));
            if (subsets.size() > before) work.push_back(tid);
            row[c] = tid;
        }
        table[id] = std::move(row);
    }
    table.resize(subsets.size());
    for (auto& row : table)
        if (row.empty()) row.assign(k, 0);  // unreachable filler; dropped by minimize

    d.next = std::move(table);
    d.names = synth_names(subsets.size());
    d.accepting.resize(subsets.size(), false);
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (int s : subsets[i])
            if (nfa.accepting.count(s)) { d.accepting[i] = true; break; }
    d.validate();
    return d;
}

namespace {

// Thompson construction; returns (start, accept).
std::pair<int, int> build(Nfa& nfa, const RegularExpr& e) {
    switch (e.kind) {
        case RegexKind::Empty: {
            int s = nfa.add_state(), t = nfa.add_state();
            return {s, t};
        }
        case RegexKind::Epsilon: {
            int s = nfa.add_state();
            return {s, s};
        }
        case RegexKind::Symbol: {
            int s = nfa.add_state(), t = nfa.add_state();
            auto sym = nfa.alphabet.index(e.symbol);
            if (!sym) throw std::invalid_argument(std::string("compile: symbol '") + e.symbol + "' not in alphabet");
            nfa.edges[s].push_back({static_cast<int>(*sym), t});
            return {s, t};
        }
        case RegexKind::Concat: {
            auto [s1, t1] = build(nfa, e.children[0]);
            auto [s2, t2] = build(nfa, e.children[1]);
            nfa.edges[t1].push_back({Nfa::kEpsilon, s2});
            return {s1, t2};
        }
        case RegexKind::Union: {
            auto [s1, t1] = build(nfa, e.children[0]);
            auto [s2, t2] = build(nfa, e.children[1]);
            int s = nfa.add_state(), t = nfa.add_state();
            nfa.edges[s].push_back({Nfa::kEpsilon, s1});
            nfa.edges[s].push_back({Nfa::kEpsilon, s2});
            nfa.edges[t1].push_back({Nfa::kEpsilon, t});
            nfa.edges[t2].push_back({Nfa::kEpsilon, t});
            return {s, t};
        }
        case RegexKind::Star: {
            auto [s1, t1] = build(nfa, e.children[0]);
            int s = nfa.add_state();
            nfa.edges[s].push_back({Nfa::kEpsilon, s1});
            nfa.edges[t1].push_back({Nfa::kEpsilon, s});
            return {s, s};
        }
    }
    throw std::logic_error("compile: unknown node");
}

}  // namespace

Dfa compile(const Alphabet& alphabet, const RegularExpr& e) {
    Nfa nfa{alphabet, {}, {}, {}};
    auto [s, t] = build(nfa, e);
    nfa.initial.insert(s);
    nfa.accepting.insert(t);
    return minimize(determinize(nfa));
}

Dfa compile(const Alphabet& alphabet, std::string_view regex_text) {
    return compile(alphabet, parse_regex(regex_text, alphabet));
}

namespace {

Dfa product(const Dfa& a, const Dfa& b, bool (*combine)(bool, bool), const char* op) {
    require_same_alphabet(a, b, op);
    const std::size_t k = a.alphabet.size();
    std::map<std::pair<int, int>, int> ids;
    std::vector<std::pair<int, int>> pairs;
    auto intern = [&](std::pair<int, int> p) {
        auto [it, fresh] = ids.try_emplace(p, static_cast<int>(pairs.size()));
        if (fresh) pairs.push_back(p);
        return it->second;
    };

    Dfa d{a.alphabet, {}, {}, 0, {}};
    d.initial = intern({a.initial, b.initial});
    std::deque<int> work{d.initial};
    while (!work.empty()) {
        int id = work.front();
        work.pop_front();
        if (static_cast<std::size_t>(id) >= d.next.size()) d.next.resize(id + 1);
        auto [sa, sb] = pairs[id];
        std::vector<int> row(k);
        for (std::size_t c = 0; c < k; ++c) {
            std::size_t before = pairs.size();
            int tid = intern({a.next[sa][c], b.next[sb][c]});
            if (pairs.size() > before) work.push_back(tid);
            row[c] = tid;
        }
        d.next[id] = std::move(row);
    }
    d.next.resize(pairs.size());
    for (auto& row : d.next)
        if (row.empty()) row.assign(k, 0);
    d.names = synth_names(pairs.size());
    d.accepting.resize(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        d.accepting[i] = combine(a.accepting[pairs[i].first], b.accepting[pairs[i].second]);
    d.validate();
    return d;
}

}  // namespace

Dfa intersect(const Dfa& a, const Dfa& b) {
    return product(a, b, [](bool x, bool y) { return x && y; }, "intersect");
}

Dfa unite(const Dfa& a, const Dfa& b) {
    return product(a, b, [](bool x, bool y) { return x || y; }, "unite");
}

Dfa difference(const Dfa& a, const Dfa& b) {
    return product(a, b, [](bool x, bool y) { return x && !y; }, "difference");
}

Dfa complement(const Dfa& a) {
    Dfa d = a;
    for (std::size_t i = 0; i < d.accepting.size(); ++i) d.accepting[i] = !d.accepting[i];
    return d;
}

Dfa concat(const Dfa& a, const Dfa& b) {
    require_same_alphabet(a, b, "concat");
    Nfa na = dfa_to_nfa(a);
    Nfa nb = dfa_to_nfa(b);
    const int offset = static_cast<int>(na.edges.size());
    na.edges.insert(na.edges.end(), nb.edges.begin(), nb.edges.end());
    for (std::size_t s = offset; s < na.edges.size(); ++s)
        for (auto& [sym, t] : na.edges[s]) t += offset;
    const int b_start = *nb.initial.begin() + offset;
    for (int acc : na.accepting) na.edges[acc].push_back({Nfa::kEpsilon, b_start});
    na.accepting.clear();
    for (int acc : nb.accepting) na.accepting.insert(acc + offset);
    return minimize(determinize(na));
}

Dfa star(const Dfa& a) {
    Nfa nfa = dfa_to_nfa(a);
    int hub = nfa.add_state();
    nfa.edges[hub].push_back({Nfa::kEpsilon, *nfa.initial.begin()});
    for (int acc : nfa.accepting) nfa.edges[acc].push_back({Nfa::kEpsilon, hub});
    nfa.initial = {hub};
    nfa.accepting = {hub};
    return minimize(determinize(nfa));
}

Dfa minimize(const Dfa& input) {
    input.validate();
    const std::size_t k = input.alphabet.size();

    // reachable trim
    std::vector<int> keep;
    std::vector<int> old_to_new(input.state_count(), -1);
    std::deque<int> work{input.initial};
    old_to_new[input.initial] = 0;
    keep.push_back(input.initial);
    while (!work.empty()) {
        int s = work.front();
        work.pop_front();
        for (std::size_t c = 0; c < k; ++c) {
            int t = input.next[s][c];
            if (old_to_new[t] < 0) {
                old_to_new[t] = static_cast<int>(keep.size());
                keep.push_back(t);
                work.push_back(t);
            }
        }
    }

    const std::size_t n = keep.size();
    std::vector<std::vector<int>> next(n, std::vector<int>(k));
    std::vector<bool> accepting(n);
    for (std::size_t i = 0; i < n; ++i) {
        accepting[i] = input.accepting[keep[i]];
        for (std::size_t c = 0; c < k; ++c) next[i][c] = old_to_new[input.next[keep[i]][c]];
    }

    // Moore refinement
    std::vector<int> cls(n);
    for (std::size_t i = 0; i < n; ++i) cls[i] = accepting[i] ? 1 : 0;
    for (;;) {
        std::map<std::vector<int>, int> sig_ids;
        std::vector<int> fresh(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<int> sig;
            sig.reserve(k + 1);
            sig.push_back(cls[i]);
            for (std::size_t c = 0; c < k; ++c) sig.push_back(cls[next[i][c]]);
            auto [it, unused] = sig_ids.try_emplace(std::move(sig), static_cast<int>(sig_ids.size()));
            fresh[i] = it->second;
        }
        if (fresh == cls) break;
        cls = std::move(fresh);
    }

    // canonical breadth-first renumbering of classes
    const int num_classes = *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<int> order(num_classes, -1);
    int assigned = 0;
    std::deque<int> bfs{cls[0]};
    order[cls[0]] = assigned++;
    std::vector<int> class_state(num_classes, -1);
    for (std::size_t i = 0; i < n; ++i)
        if (class_state[cls[i]] < 0) class_state[cls[i]] = static_cast<int>(i);
    while (!bfs.empty()) {
        int c0 = bfs.front();
        bfs.pop_front();
        int rep = class_state[c0];
        for (std::size_t c = 0; c < k; ++c) {
            int tc = cls[next[rep][c]];
            if (order[tc] < 0) {
                order[tc] = assigned++;
                bfs.push_back(tc);
            }
        }
    }

    Dfa d{input.alphabet, {}, {}, 0, {}};
    d.names = synth_names(assigned);
    d.next.assign(assigned, std::vector<int>(k));
    d.accepting.assign(assigned, false);
    d.initial = order[cls[0]];
    for (int c0 = 0; c0 < num_classes; ++c0) {
        int rep = class_state[c0];
        int id = order[c0];
        d.accepting[id] = accepting[rep];
        for (std::size_t c = 0; c < k; ++c) d.next[id][c] = order[cls[next[rep][c]]];
    }
    d.validate();
    return d;
}

bool is_empty(const Dfa& a) {
    std::vector<bool> seen(a.state_count(), false);
    std::deque<int> work{a.initial};
    seen[a.initial] = true;
    while (!work.empty()) {
        int s = work.front();
        work.pop_front();
        if (a.accepting[s]) return false;
        for (std::size_t c = 0; c < a.alphabet.size(); ++c) {
            int t = a.next[s][c];
            if (!seen[t]) {
                seen[t] = true;
                work.push_back(t);
            }
        }
    }
    return true;
}

bool equivalent(const Dfa& a, const Dfa& b) {
    require_same_alphabet(a, b, "equivalent");
    std::set<std::pair<int, int>> seen;
    std::deque<std::pair<int, int>> work{{a.initial, b.initial}};
    seen.insert({a.initial, b.initial});
    while (!work.empty()) {
        auto [sa, sb] = work.front();
        work.pop_front();
        if (a.accepting[sa] != b.accepting[sb]) return false;
        for (std::size_t c = 0; c < a.alphabet.size(); ++c) {
            std::pair<int, int> t{a.next[sa][c], b.next[sb][c]};
            if (seen.insert(t).second) work.push_back(t);
        }
    }
    return true;
}

Dfa empty_language(const Alphabet& alphabet) {
    Dfa d{alphabet, {}, {}, 0, {}};
    d.names = {"q0"};
    d.next = {std::vector<int>(alphabet.size(), 0)};
    d.initial = 0;
    d.accepting = {false};
    return d;
}

Dfa epsilon_only(const Alphabet& alphabet) {
    Dfa d{alphabet, {}, {}, 0, {}};
    d.names = {"q0", "q1"};
    d.next = {std::vector<int>(alphabet.size(), 1), std::vector<int>(alphabet.size(), 1)};
    d.initial = 0;
    d.accepting = {true, false};
    return d;
}

Dfa sigma_star(const Alphabet& alphabet) {
    Dfa d = empty_language(alphabet);
    d.accepting = {true};
    return d;
}

Dfa sigma_plus(const Alphabet& alphabet) {
    Dfa d = epsilon_only(alphabet);
    d.accepting = {false, true};
    d.next[1] = std::vector<int>(alphabet.size(), 1);
    return d;
}

Dfa from_words(const Alphabet& alphabet, const std::vector<Word>& words) {
    RegularExpr e = RegularExpr::empty();
    bool first = true;
    for (const Word& w : words) {
        alphabet.require(w, "from_words");
        RegularExpr we = RegularExpr::epsilon();
        bool wfirst = true;
        for (std::size_t i = 0; i < w.size(); ++i) {
            RegularExpr s = RegularExpr::sym(w[i]);
            we = wfirst ? std::move(s) : RegularExpr::concat(std::move(we), std::move(s));
            wfirst = false;
        }
        e = first ? std::move(we) : RegularExpr::unite(std::move(e), std::move(we));
        first = false;
    }
    return compile(alphabet, e);
}

std::vector<std::optional<Word>> reaching_words(const Dfa& a) {
    std::vector<std::optional<Word>> rep(a.state_count());
    std::deque<int> work{a.initial};
    rep[a.initial] = Word();
    while (!work.empty()) {
        int s = work.front();
        work.pop_front();
        for (std::size_t c = 0; c < a.alphabet.size(); ++c) {
            int t = a.next[s][c];
            if (!rep[t]) {
                rep[t] = *rep[s] + a.alphabet.symbol(c);
                work.push_back(t);
            }
        }
    }
    return rep;
}

std::optional<Word> shortest_member(const Dfa& a) {
    auto reps = reaching_words(a);
    std::optional<Word> best;
    for (std::size_t s = 0; s < a.state_count(); ++s)
        if (a.accepting[s] && reps[s] && (!best || *reps[s] < *best)) best = reps[s];
    return best;
}

std::vector<Word> members_upto(const Dfa& a, std::size_t bound) {
    std::vector<Word> out;
    WordSpace space(a.alphabet, bound);
    for (std::size_t i = 0; i < space.size(); ++i) {
        Word w = space.at(i);
        if (a.member(w)) out.push_back(std::move(w));
    }
    return out;
}

bool is_prefix_code(const Dfa& a) {
    if (a.member(Word())) return equivalent(a, epsilon_only(a.alphabet));
    return is_empty(intersect(a, concat(a, sigma_plus(a.alphabet))));
}

std::optional<std::pair<Word, Word>> prefix_violation(const Dfa& a) {
    if (a.member(Word()) && !equivalent(a, epsilon_only(a.alphabet))) {
        Dfa rest = difference(a, epsilon_only(a.alphabet));
        return std::make_pair(Word(), *shortest_member(rest));
    }
    Dfa extended = intersect(a, concat(a, sigma_plus(a.alphabet)));
    auto uv = shortest_member(extended);
    if (!uv) return std::nullopt;
    for (std::size_t n = 0; n < uv->size(); ++n) {
        Word u = uv->prefix(n);
        if (a.member(u)) return std::make_pair(u, *uv);
    }
    return std::nullopt;  // unreachable for a genuine violation
}

Dfa prefix_free_kernel(const Dfa& a) {
    return minimize(difference(a, concat(a, sigma_plus(a.alphabet))));
}

NerodePartition nerode_classes(const Dfa& a) {
    NerodePartition p{minimize(a), {}};
    auto reps = reaching_words(p.minimal);
    p.representatives.reserve(reps.size());
    for (auto& r : reps) p.representatives.push_back(*r);  // minimal is reachable-only
    return p;
}

}  // namespace preact

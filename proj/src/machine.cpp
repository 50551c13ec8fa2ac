#include "preact/machine.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace preact {

int TotalAction::run(int state, const Word& w) const {
    int s = state;
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto sym = alphabet.index(w[i]);
        if (!sym)
            throw std::invalid_argument(std::string("action run: symbol '") + w[i] +
                                        "' not in alphabet");
        s = next[s][*sym];
    }
    return s;
}

void TotalAction::validate() const {
    const std::size_t n = names.size();
    if (n == 0) throw std::invalid_argument("action: needs at least one state");
    if (next.size() != n)
        throw std::invalid_argument("action: table size disagrees with state count");
    for (const auto& row : next) {
        if (row.size() != alphabet.size())
            throw std::invalid_argument("action: transition row incomplete");
        for (int t : row)
            if (t < 0 || static_cast<std::size_t>(t) >= n)
                throw std::invalid_argument("action: transition target out of range");
    }
}

std::string render_point(const std::vector<long long>& point) {
    if (point.size() == 1) return std::to_string(point[0]);
    std::string out = "(";
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(point[i]);
    }
    out += ')';
    return out;
}

std::vector<bool> residual_signature(const MembershipFamily& family, const Word& u,
                                     std::size_t bound) {
    std::vector<bool> sig;
    for (const Word& s : all_words_upto(family.alphabet(), bound)) sig.push_back(family.member(u + s));
    return sig;
}

std::vector<bool> residual_signature(const LanguageOracle& oracle, const Word& u,
                                     std::size_t bound) {
    std::vector<bool> sig;
    for (const Word& s : all_words_upto(oracle.alphabet(), bound)) sig.push_back(oracle.member(u + s));
    return sig;
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

template <class T>
std::optional<int> sorted_index(const std::vector<T>& values, const T& key) {
    auto it = std::lower_bound(values.begin(), values.end(), key);
    if (it == values.end() || *it != key) return std::nullopt;
    return static_cast<int>(it - values.begin());
}

Word least_inside_word(const MembershipFamily& family) {
    return std::visit(
        overloaded{
            [](const EqualBlocksFamily& f) { return Word(std::string{f.first, f.second}); },
            [](const BalanceFamily& f) {
                return f.value >= 0 ? Word(std::string(static_cast<std::size_t>(f.value), f.plus))
                                    : Word(std::string(static_cast<std::size_t>(-f.value), f.minus));
            },
            [](const auto&) -> Word {
                throw std::logic_error("least inside word: unsupported family");
            },
        },
        family.impl());
}

MembershipDriven make_membership_backend(MembershipFamily family,
                                         std::optional<std::vector<Word>> provided) {
    MembershipDriven m{std::move(family), {}, {}, std::nullopt, {}, {}, 0, {}, {}};
    const Alphabet& alphabet = m.family.alphabet();
    if (provided)
        for (const Word& rep : *provided) alphabet.require(rep, "membership representative");

    if (m.family.regular_form()) {
        NerodePartition part = nerode_classes(*m.family.regular_form());
        const Dfa& lang = part.minimal;
        m.dfa_to_state.assign(lang.state_count(), -1);
        auto add_state = [&](int dfa_state, Word rep) {
            m.dfa_to_state[dfa_state] = static_cast<int>(m.reps.size());
            m.state_to_dfa.push_back(dfa_state);
            m.inside.push_back(lang.accepting[dfa_state]);
            m.reps.push_back(std::move(rep));
        };
        add_state(lang.initial, Word());
        for (int s = 0; s < static_cast<int>(lang.state_count()); ++s)
            if (lang.accepting[s] && s != lang.initial) add_state(s, part.representatives[s]);
        if (provided) {
            if (provided->size() != m.reps.size())
                throw std::invalid_argument("membership: representative count mismatch");
            for (std::size_t i = 0; i < provided->size(); ++i)
                if (lang.run(lang.initial, (*provided)[i]) != m.state_to_dfa[i])
                    throw std::invalid_argument("membership: representative '" +
                                                display_word((*provided)[i]) +
                                                "' does not reach its class");
            m.reps = std::move(*provided);
        }
        m.language = lang;
        return m;
    }

    if (m.family.single_inside_class()) {
        m.reps.push_back(Word());
        const bool eps_inside = m.family.member(Word());
        if (!eps_inside) m.reps.push_back(least_inside_word(m.family));
        if (provided) {
            if (provided->size() != m.reps.size())
                throw std::invalid_argument("membership: representative count mismatch");
            if (!(*provided)[0].empty())
                throw std::invalid_argument(
                    "membership: first representative must be the empty word");
            for (std::size_t i = 1; i < provided->size(); ++i)
                if (!m.family.member((*provided)[i]))
                    throw std::invalid_argument("membership: representative '" +
                                                display_word((*provided)[i]) +
                                                "' is outside the language");
            m.reps = std::move(*provided);
        }
        m.inside.assign(m.reps.size(), true);
        m.inside[0] = eps_inside;
        return m;
    }

    if (!provided)
        throw std::invalid_argument("membership: generic families need explicit representatives");
    if (provided->empty() || !(*provided)[0].empty())
        throw std::invalid_argument("membership: first representative must be the empty word");
    m.suffix_bound = std::get<GenericFamily>(m.family.impl()).suffix_bound;
    m.suffixes = all_words_upto(alphabet, m.suffix_bound);
    m.reps = std::move(*provided);
    for (std::size_t i = 0; i < m.reps.size(); ++i) {
        m.inside.push_back(m.family.member(m.reps[i]));
        if (i >= 1 && !m.inside[i])
            throw std::invalid_argument("membership: representative '" + display_word(m.reps[i]) +
                                        "' is outside the language");
        std::vector<bool> sig;
        sig.reserve(m.suffixes.size());
        for (const Word& s : m.suffixes) sig.push_back(m.family.member(m.reps[i] + s));
        m.signatures.push_back(std::move(sig));
    }
    for (std::size_t i = 0; i < m.reps.size(); ++i)
        for (std::size_t j = i + 1; j < m.reps.size(); ++j)
            if (m.inside[i] && m.inside[j] && m.signatures[i] == m.signatures[j])
                throw std::invalid_argument("membership: representatives '" +
                                            display_word(m.reps[i]) + "' and '" +
                                            display_word(m.reps[j]) +
                                            "' are not separated at this suffix bound");
    return m;
}

std::optional<int> identify_inside(const MembershipDriven& m, const Word& target) {
    if (m.language) {
        const int mapped = m.dfa_to_state[m.language->run(m.language->initial, target)];
        return mapped >= 0 ? std::optional<int>(mapped) : std::nullopt;
    }
    if (m.family.single_inside_class()) {
        for (std::size_t i = 0; i < m.inside.size(); ++i)
            if (m.inside[i]) return static_cast<int>(i);
        return std::nullopt;
    }
    std::vector<bool> sig;
    sig.reserve(m.suffixes.size());
    for (const Word& s : m.suffixes) sig.push_back(m.family.member(target + s));
    for (std::size_t i = 0; i < m.signatures.size(); ++i)
        if (m.inside[i] && m.signatures[i] == sig) return static_cast<int>(i);
    return std::nullopt;
}

std::optional<int> eval_backend(const Alphabet&, const FiniteRestriction& m, int state,
                                const Word& w) {
    return sorted_index(m.observable, m.host.run(m.observable[state], w));
}

std::optional<int> eval_backend(const Alphabet& alphabet, const IntegerTranslation& m, int state,
                                const Word& w) {
    std::vector<long long> point = m.observable[state];
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto& delta = m.letter[*alphabet.index(w[i])];
        for (std::size_t d = 0; d < m.dimension; ++d) point[d] += delta[d];
    }
    return sorted_index(m.observable, point);
}

std::optional<int> eval_backend(const Alphabet&, const PLanguageMachine& m, int state,
                                const Word& w) {
    if (m.epsilon_head) return m.c_star.member(w) ? std::optional<int>(0) : std::nullopt;
    if (state == 0) {
        if (w.empty()) return 0;
        return m.hc_star.member(w) ? std::optional<int>(1) : std::nullopt;
    }
    return m.c_star.member(w) ? std::optional<int>(1) : std::nullopt;
}

std::optional<int> eval_backend(const Alphabet&, const MembershipDriven& m, int state,
                                const Word& w) {
    if (w.empty()) return state;
    const Word target = m.reps[state] + w;
    if (!m.family.member(target)) return std::nullopt;
    return identify_inside(m, target);
}

std::optional<int> eval_backend(const Alphabet&, const ProductMachine& m, int state,
                                const Word& w) {
    const auto [l, r] = m.pairs[state];
    auto left = m.left->eval(l, w);
    if (!left) return std::nullopt;
    auto right = m.right->eval(r, w);
    if (!right) return std::nullopt;
    return sorted_index(m.pairs, std::make_pair(*left, *right));
}

std::vector<std::string> backend_names(const Alphabet&, const FiniteRestriction& m) {
    std::vector<std::string> names;
    for (int s : m.observable) names.push_back(m.host.names[s]);
    return names;
}

std::vector<std::string> backend_names(const Alphabet&, const IntegerTranslation& m) {
    std::vector<std::string> names;
    for (const auto& point : m.observable) names.push_back(render_point(point));
    return names;
}

std::vector<std::string> backend_names(const Alphabet&, const PLanguageMachine& m) {
    if (m.epsilon_head) return {"x0"};
    return {"x0", "y"};
}

std::vector<std::string> backend_names(const Alphabet&, const MembershipDriven& m) {
    std::vector<std::string> names;
    for (const Word& rep : m.reps) names.push_back("[" + display_word(rep) + "]");
    return names;
}

std::vector<std::string> backend_names(const Alphabet&, const ProductMachine& m) {
    std::vector<std::string> names;
    for (auto [l, r] : m.pairs)
        names.push_back("(" + m.left->state_name(l) + "," + m.right->state_name(r) + ")");
    return names;
}

}  // namespace

PreactionMachine::PreactionMachine(Alphabet alphabet, Backend backend)
    : alphabet_(std::move(alphabet)), backend_(std::move(backend)) {
    names_ = std::visit([&](const auto& m) { return backend_names(alphabet_, m); }, backend_);
    active_.resize(names_.size());
    std::iota(active_.begin(), active_.end(), 0);
}

bool PreactionMachine::is_active(int state) const {
    return std::binary_search(active_.begin(), active_.end(), state);
}

const std::string& PreactionMachine::state_name(int state) const {
    if (state < 0 || state >= state_count())
        throw std::invalid_argument("state name: state out of range");
    return names_[state];
}

std::optional<int> PreactionMachine::state_by_name(std::string_view name) const {
    for (int s : active_)
        if (names_[s] == name) return s;
    return std::nullopt;
}

std::optional<int> PreactionMachine::eval(int state, const Word& w) const {
    if (!is_active(state))
        throw std::invalid_argument("eval: state " + std::to_string(state) + " is not active");
    alphabet_.require(w, "eval");
    auto result =
        std::visit([&](const auto& m) { return eval_backend(alphabet_, m, state, w); }, backend_);
    if (result && !is_active(*result)) return std::nullopt;
    return result;
}

PreactionMachine PreactionMachine::restricted_to(std::vector<int> states) const {
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    if (states.empty())
        throw std::invalid_argument("restriction: needs at least one state");
    for (int s : states)
        if (!is_active(s))
            throw std::invalid_argument("restriction: state " + std::to_string(s) +
                                        " is not active");
    PreactionMachine copy(*this);
    copy.active_ = std::move(states);
    return copy;
}

std::optional<Dfa> PreactionMachine::exact_reach(int from, int to) const {
    if (!is_active(from) || !is_active(to))
        throw std::invalid_argument("exact reach: state not active");
    return std::visit(
        overloaded{
            [&](const FiniteRestriction& m) -> std::optional<Dfa> {
                Dfa d{alphabet_, m.host.names, m.host.next, m.observable[from],
                      std::vector<bool>(m.host.names.size(), false)};
                d.accepting[m.observable[to]] = true;
                return minimize(d);
            },
            [&](const IntegerTranslation&) -> std::optional<Dfa> { return std::nullopt; },
            [&](const PLanguageMachine& m) -> std::optional<Dfa> {
                if (m.epsilon_head) return m.c_star;
                if (from == 0 && to == 0) return epsilon_only(alphabet_);
                if (from == 0 && to == 1) return m.hc_star;
                if (from == 1 && to == 0) return empty_language(alphabet_);
                return m.c_star;
            },
            [&](const MembershipDriven& m) -> std::optional<Dfa> {
                if (!m.language) return std::nullopt;
                if (!m.inside[to])
                    return from == to ? epsilon_only(alphabet_) : empty_language(alphabet_);
                Dfa d = *m.language;
                d.initial = m.state_to_dfa[from];
                d.accepting.assign(d.state_count(), false);
                d.accepting[m.state_to_dfa[to]] = true;
                return minimize(d);
            },
            [&](const ProductMachine& m) -> std::optional<Dfa> {
                const auto [l1, r1] = m.pairs[from];
                const auto [l2, r2] = m.pairs[to];
                auto left = m.left->exact_reach(l1, l2);
                if (!left) return std::nullopt;
                auto right = m.right->exact_reach(r1, r2);
                if (!right) return std::nullopt;
                return minimize(intersect(*left, *right));
            },
        },
        backend_);
}

PreactionMachine PreactionMachine::finite_restriction(TotalAction host,
                                                      std::vector<int> observable) {
    host.validate();
    std::sort(observable.begin(), observable.end());
    observable.erase(std::unique(observable.begin(), observable.end()), observable.end());
    if (observable.empty())
        throw std::invalid_argument("finite restriction: needs at least one observable state");
    for (int s : observable)
        if (s < 0 || static_cast<std::size_t>(s) >= host.names.size())
            throw std::invalid_argument("finite restriction: observable state out of range");
    Alphabet alphabet = host.alphabet;
    return PreactionMachine(std::move(alphabet),
                            FiniteRestriction{std::move(host), std::move(observable)});
}

PreactionMachine PreactionMachine::integer_translation(
    const Alphabet& alphabet, std::vector<std::vector<long long>> letter,
    std::vector<std::vector<long long>> observable) {
    if (letter.size() != alphabet.size())
        throw std::invalid_argument("integer translation: one vector per symbol required");
    const std::size_t dimension = letter.empty() ? 0 : letter[0].size();
    if (dimension == 0)
        throw std::invalid_argument("integer translation: dimension must be positive");
    for (const auto& v : letter)
        if (v.size() != dimension)
            throw std::invalid_argument("integer translation: letter vector dimension mismatch");
    std::sort(observable.begin(), observable.end());
    observable.erase(std::unique(observable.begin(), observable.end()), observable.end());
    if (observable.empty())
        throw std::invalid_argument("integer translation: needs at least one observable point");
    for (const auto& p : observable)
        if (p.size() != dimension)
            throw std::invalid_argument("integer translation: point dimension mismatch");
    return PreactionMachine(
        alphabet, IntegerTranslation{dimension, std::move(letter), std::move(observable)});
}

PreactionMachine PreactionMachine::p_language(Dfa head, Dfa code) {
    if (!(head.alphabet == code.alphabet))
        throw std::invalid_argument("p-language: alphabet mismatch");
    if (!is_prefix_code(head))
        throw std::invalid_argument("p-language: head is not a prefix code");
    if (!is_prefix_code(code))
        throw std::invalid_argument("p-language: code is not a prefix code");
    Dfa h = minimize(head);
    Dfa c = minimize(code);
    Dfa c_star = minimize(star(c));
    Dfa hc_star = minimize(concat(h, c_star));
    const bool epsilon_head = h.member(Word());
    Alphabet alphabet = h.alphabet;
    return PreactionMachine(std::move(alphabet),
                            PLanguageMachine{std::move(h), std::move(c), std::move(hc_star),
                                             std::move(c_star), epsilon_head});
}

PreactionMachine PreactionMachine::membership(MembershipFamily family) {
    Alphabet alphabet = family.alphabet();
    return PreactionMachine(std::move(alphabet),
                            make_membership_backend(std::move(family), std::nullopt));
}

PreactionMachine PreactionMachine::membership(MembershipFamily family, std::vector<Word> reps) {
    Alphabet alphabet = family.alphabet();
    return PreactionMachine(std::move(alphabet),
                            make_membership_backend(std::move(family), std::move(reps)));
}

PreactionMachine PreactionMachine::product(PreactionMachine left, PreactionMachine right) {
    if (!(left.alphabet() == right.alphabet()))
        throw std::invalid_argument("product: alphabet mismatch");
    ProductMachine m;
    m.left = std::make_shared<const PreactionMachine>(std::move(left));
    m.right = std::make_shared<const PreactionMachine>(std::move(right));
    for (int l : m.left->active())
        for (int r : m.right->active()) m.pairs.emplace_back(l, r);
    Alphabet alphabet = m.left->alphabet();
    return PreactionMachine(std::move(alphabet), std::move(m));
}

}  // namespace preact

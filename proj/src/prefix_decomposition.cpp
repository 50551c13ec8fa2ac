#include "preact/prefix_decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace preact {

PLanguage make_p_language(Dfa head, Dfa code) {
    if (!(head.alphabet == code.alphabet))
        throw std::invalid_argument("p-language: alphabet mismatch");
    if (!is_prefix_code(head))
        throw std::invalid_argument("p-language: head is not a prefix code");
    if (!is_prefix_code(code))
        throw std::invalid_argument("p-language: code is not a prefix code");
    return PLanguage{minimize(head), minimize(code)};
}

PLanguage p_language_from_words(const Alphabet& alphabet, const std::vector<Word>& head,
                                const std::vector<Word>& code) {
    return make_p_language(from_words(alphabet, head), from_words(alphabet, code));
}

Dfa p_language_dfa(const PLanguage& p) {
    return minimize(concat(p.head, star(p.code)));
}

Preacceptor build_preacceptor(const PLanguage& p) {
    auto machine = PreactionMachine::p_language(p.head, p.code);
    const bool merged = std::get<PLanguageMachine>(machine.backend()).epsilon_head;
    return make_preacceptor(std::move(machine), 0, {merged ? 0 : 1});
}

namespace {

Dfa reach_language(const Preacceptor& acceptor, int from, int to,
                   std::optional<std::size_t> bound, bool& exact) {
    if (auto d = acceptor.machine.exact_reach(from, to)) return *d;
    if (!bound)
        throw std::invalid_argument(
            "extract codes: this machine has no exact reach languages; a bound is required");
    exact = false;
    std::vector<Word> words;
    for (const Word& w : all_words_upto(acceptor.machine.alphabet(), *bound))
        if (acceptor.machine.eval(from, w) == std::optional<int>(to)) words.push_back(w);
    return from_words(acceptor.machine.alphabet(), words);
}

}  // namespace

ExtractedCodes extract_codes(const Preacceptor& acceptor, int terminal,
                             std::optional<std::size_t> bound) {
    if (!acceptor.machine.is_active(terminal))
        throw std::invalid_argument("extract codes: terminal state is not active");
    bool exact = true;
    const Dfa arrivals = reach_language(acceptor, acceptor.initial, terminal, bound, exact);
    const Dfa returns = reach_language(acceptor, terminal, terminal, bound, exact);
    ExtractedCodes out{prefix_free_kernel(arrivals),
                       prefix_free_kernel(difference(returns, epsilon_only(arrivals.alphabet))),
                       exact};
    return out;
}

Decomposition decompose(const Preacceptor& acceptor, std::optional<std::size_t> bound) {
    Decomposition d{acceptor.terminal, {}};
    d.components.reserve(acceptor.terminal.size());
    for (int t : acceptor.terminal) d.components.push_back(extract_codes(acceptor, t, bound));
    return d;
}

namespace {

/// Positions n where a prefix of length n >= at lands the dfa in an
/// accepting state; at most one such n exists for a prefix code.
std::optional<std::size_t> unique_cut(const Dfa& code, const Word& w, std::size_t at) {
    int state = code.initial;
    if (at == 0 && code.accepting[state]) return 0;
    for (std::size_t n = at; n < w.size(); ++n) {
        auto sym = code.alphabet.index(w[n]);
        if (!sym) throw std::invalid_argument("factorization: foreign symbol");
        state = code.next[state][*sym];
        if (code.accepting[state]) return n + 1 - at;
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<Word>> unique_factorization(const PLanguage& p, const Word& w) {
    auto head_len = unique_cut(p.head, w, 0);
    if (!head_len) return std::nullopt;
    std::vector<Word> factors{w.prefix(*head_len)};
    std::size_t at = *head_len;
    while (at < w.size()) {
        auto code_len = unique_cut(p.code, w, at);
        if (!code_len || *code_len == 0) return std::nullopt;
        factors.push_back(w.suffix_from(at).prefix(*code_len));
        at += *code_len;
    }
    return factors;
}

bool hcstar_member_dp(const PLanguage& p, const Word& w) {
    // reachable[i]: w[0..i) splits as one head word then code words
    std::vector<char> reachable(w.size() + 1, 0);
    for (std::size_t i = 0; i <= w.size(); ++i)
        if (p.head.member(w.prefix(i))) reachable[i] = 1;
    for (std::size_t i = 0; i <= w.size(); ++i) {
        if (!reachable[i]) continue;
        for (std::size_t j = i + 1; j <= w.size(); ++j)
            if (p.code.member(w.prefix(j).suffix_from(i))) reachable[j] = 1;
    }
    return bool(reachable[w.size()]);
}

}  // namespace preact

#include "preact/oracle.hpp"

#include <stdexcept>

namespace preact {

LanguageOracle::LanguageOracle(Alphabet alphabet, std::string description,
                               std::function<bool(const Word&)> member)
    : alphabet_(std::move(alphabet)), description_(std::move(description)), member_(std::move(member)) {
    if (!member_) throw std::invalid_argument("oracle: missing membership function");
}

bool LanguageOracle::member(const Word& w) const {
    alphabet_.require(w, "oracle member");
    return member_(w);
}

LanguageOracle LanguageOracle::from_dfa(Dfa d, std::string description) {
    d.validate();
    Alphabet alphabet = d.alphabet;
    if (description.empty()) description = "regular";
    return LanguageOracle(alphabet, std::move(description),
                          [d = std::move(d)](const Word& w) { return d.member(w); });
}

LanguageOracle LanguageOracle::finite(const Alphabet& alphabet, std::vector<Word> words) {
    for (const Word& w : words) alphabet.require(w, "finite language");
    return LanguageOracle(alphabet, "finite", [words = std::move(words)](const Word& w) {
        for (const Word& v : words)
            if (v == w) return true;
        return false;
    });
}

LanguageOracle LanguageOracle::equal_blocks(const Alphabet& alphabet, char first, char second) {
    if (!alphabet.contains(first) || !alphabet.contains(second) || first == second)
        throw std::invalid_argument("equal_blocks: needs two distinct alphabet symbols");
    std::string desc = std::string("equal-blocks(") + first + "^n " + second + "^n)";
    return LanguageOracle(alphabet, desc, [first, second](const Word& w) {
        if (w.empty() || w.size() % 2 != 0) return false;
        std::size_t half = w.size() / 2;
        for (std::size_t i = 0; i < half; ++i)
            if (w[i] != first) return false;
        for (std::size_t i = half; i < w.size(); ++i)
            if (w[i] != second) return false;
        return true;
    });
}

LanguageOracle LanguageOracle::balance_language(const Alphabet& alphabet, char plus, char minus,
                                                long long value) {
    balance(alphabet, Word(), plus, minus);  // validates the letters
    std::string desc = "balance(" + std::to_string(value) + ")";
    Alphabet copy = alphabet;
    return LanguageOracle(alphabet, desc, [copy, plus, minus, value](const Word& w) {
        return balance(copy, w, plus, minus) == value;
    });
}

LanguageOracle LanguageOracle::ideal(const Alphabet& alphabet, std::vector<Word> factors) {
    if (factors.empty()) throw std::invalid_argument("ideal: needs at least one factor");
    for (const Word& f : factors) {
        alphabet.require(f, "ideal factor");
        if (f.empty()) throw std::invalid_argument("ideal: factors must be nonempty");
    }
    return LanguageOracle(alphabet, "ideal", [factors = std::move(factors)](const Word& w) {
        for (const Word& f : factors)
            if (w.text().find(f.text()) != std::string::npos) return true;
        return false;
    });
}

namespace {
void require_same_alphabet(const LanguageOracle& a, const LanguageOracle& b, const char* op) {
    if (!(a.alphabet() == b.alphabet()))
        throw std::invalid_argument(std::string(op) + ": alphabet mismatch");
}
}  // namespace

LanguageOracle unite(const LanguageOracle& a, const LanguageOracle& b) {
    require_same_alphabet(a, b, "unite");
    return LanguageOracle(a.alphabet(), "(" + a.description() + " | " + b.description() + ")",
                          [a, b](const Word& w) { return a.member(w) || b.member(w); });
}

LanguageOracle intersect(const LanguageOracle& a, const LanguageOracle& b) {
    require_same_alphabet(a, b, "intersect");
    return LanguageOracle(a.alphabet(), "(" + a.description() + " & " + b.description() + ")",
                          [a, b](const Word& w) { return a.member(w) && b.member(w); });
}

LanguageOracle concat(const LanguageOracle& a, const LanguageOracle& b) {
    require_same_alphabet(a, b, "concat");
    return LanguageOracle(a.alphabet(), "(" + a.description() + " . " + b.description() + ")",
                          [a, b](const Word& w) {
                              for (std::size_t i = 0; i <= w.size(); ++i)
                                  if (a.member(w.prefix(i)) && b.member(w.suffix_from(i))) return true;
                              return false;
                          });
}

LanguageOracle star(const LanguageOracle& a) {
    return LanguageOracle(a.alphabet(), "(" + a.description() + ")*", [a](const Word& w) {
        if (w.empty()) return true;
        std::vector<bool> reach(w.size() + 1, false);
        reach[0] = true;
        for (std::size_t j = 1; j <= w.size(); ++j)
            for (std::size_t i = 0; i < j; ++i)
                if (reach[i] && a.member(w.prefix(j).suffix_from(i))) {
                    reach[j] = true;
                    break;
                }
        return bool(reach[w.size()]);
    });
}

MembershipFamily::MembershipFamily(Alphabet alphabet, Impl impl)
    : alphabet_(std::move(alphabet)), impl_(std::move(impl)) {
    if (auto* r = std::get_if<RegularFamily>(&impl_)) {
        r->language = minimize(r->language);
        if (!(r->language.alphabet == alphabet_))
            throw std::invalid_argument("membership family: alphabet mismatch");
        regular_form_ = r->language;
    } else if (auto* i = std::get_if<IdealFamily>(&impl_)) {
        if (i->factors.empty()) throw std::invalid_argument("ideal family: needs a factor");
        Dfa all = sigma_star(alphabet_);
        regular_form_ = minimize(concat(concat(all, from_words(alphabet_, i->factors)), all));
    }
}

MembershipFamily MembershipFamily::regular(const Alphabet& alphabet, Dfa language) {
    return MembershipFamily(alphabet, RegularFamily{std::move(language)});
}

MembershipFamily MembershipFamily::regular(const Alphabet& alphabet, std::string_view regex_text) {
    return MembershipFamily(alphabet, RegularFamily{compile(alphabet, regex_text)});
}

MembershipFamily MembershipFamily::equal_blocks(const Alphabet& alphabet, char first, char second) {
    LanguageOracle::equal_blocks(alphabet, first, second);  // validation
    return MembershipFamily(alphabet, EqualBlocksFamily{first, second});
}

MembershipFamily MembershipFamily::balance(const Alphabet& alphabet, char plus, char minus,
                                           long long value) {
    preact::balance(alphabet, Word(), plus, minus);
    return MembershipFamily(alphabet, BalanceFamily{plus, minus, value});
}

MembershipFamily MembershipFamily::ideal(const Alphabet& alphabet, std::vector<Word> factors) {
    return MembershipFamily(alphabet, IdealFamily{std::move(factors)});
}

MembershipFamily MembershipFamily::generic(LanguageOracle oracle, std::size_t suffix_bound) {
    Alphabet alphabet = oracle.alphabet();
    return MembershipFamily(alphabet, GenericFamily{std::move(oracle), suffix_bound});
}

bool MembershipFamily::member(const Word& w) const {
    alphabet_.require(w, "family member");
    if (const auto* r = std::get_if<RegularFamily>(&impl_)) return r->language.member(w);
    if (const auto* e = std::get_if<EqualBlocksFamily>(&impl_)) {
        if (w.empty() || w.size() % 2 != 0) return false;
        std::size_t half = w.size() / 2;
        for (std::size_t i = 0; i < half; ++i)
            if (w[i] != e->first) return false;
        for (std::size_t i = half; i < w.size(); ++i)
            if (w[i] != e->second) return false;
        return true;
    }
    if (const auto* b = std::get_if<BalanceFamily>(&impl_))
        return preact::balance(alphabet_, w, b->plus, b->minus) == b->value;
    if (std::holds_alternative<IdealFamily>(impl_)) return regular_form_->member(w);
    return std::get<GenericFamily>(impl_).oracle.member(w);
}

bool MembershipFamily::single_inside_class() const {
    return std::holds_alternative<EqualBlocksFamily>(impl_) ||
           std::holds_alternative<BalanceFamily>(impl_) ||
           std::holds_alternative<IdealFamily>(impl_);
}

LanguageOracle MembershipFamily::oracle() const {
    MembershipFamily copy = *this;
    return LanguageOracle(alphabet_, describe(), [copy](const Word& w) { return copy.member(w); });
}

std::string MembershipFamily::describe() const {
    if (std::holds_alternative<RegularFamily>(impl_)) return "regular";
    if (const auto* e = std::get_if<EqualBlocksFamily>(&impl_))
        return std::string("equal-blocks(") + e->first + "," + e->second + ")";
    if (const auto* b = std::get_if<BalanceFamily>(&impl_))
        return "balance(" + std::to_string(b->value) + ")";
    if (std::holds_alternative<IdealFamily>(impl_)) return "ideal";
    return "generic: " + std::get<GenericFamily>(impl_).oracle.description();
}

}  // namespace preact

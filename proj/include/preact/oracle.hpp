#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "preact/dfa.hpp"
#include "preact/words.hpp"

namespace preact {

/// A decidable membership procedure. Combinators evaluate pointwise, so any
/// composition stays decidable; star uses dynamic programming over split
/// points.
class LanguageOracle {
public:
    LanguageOracle(Alphabet alphabet, std::string description,
                   std::function<bool(const Word&)> member);

    bool member(const Word& w) const;
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::string& description() const noexcept { return description_; }

    static LanguageOracle from_dfa(Dfa d, std::string description = "");
    static LanguageOracle finite(const Alphabet& alphabet, std::vector<Word> words);
    /// { first^n second^n : n >= 1 }
    static LanguageOracle equal_blocks(const Alphabet& alphabet, char first, char second);
    /// words whose plus/minus balance equals value
    static LanguageOracle balance_language(const Alphabet& alphabet, char plus, char minus,
                                           long long value);
    /// two-sided ideal: words containing some factor as a subword block
    static LanguageOracle ideal(const Alphabet& alphabet, std::vector<Word> factors);

    friend LanguageOracle unite(const LanguageOracle& a, const LanguageOracle& b);
    friend LanguageOracle intersect(const LanguageOracle& a, const LanguageOracle& b);
    friend LanguageOracle concat(const LanguageOracle& a, const LanguageOracle& b);
    friend LanguageOracle star(const LanguageOracle& a);

private:
    Alphabet alphabet_;
    std::string description_;
    std::function<bool(const Word&)> member_;
};

struct RegularFamily {
    Dfa language;  // kept minimal
};
struct EqualBlocksFamily {
    char first, second;
};
struct BalanceFamily {
    char plus, minus;
    long long value;
};
struct IdealFamily {
    std::vector<Word> factors;
};
struct GenericFamily {
    LanguageOracle oracle;
    std::size_t suffix_bound;  // identification compares residuals up to this length
};

/// A language family member with enough structure to identify which
/// right-congruence class inside L a member of L belongs to. Regular members
/// identify by minimal-automaton state; equal-blocks, balance and ideal
/// members have a single class inside L; generic members identify by bounded
/// residual signatures.
class MembershipFamily {
public:
    using Impl = std::variant<RegularFamily, EqualBlocksFamily, BalanceFamily, IdealFamily, GenericFamily>;

    MembershipFamily(Alphabet alphabet, Impl impl);

    static MembershipFamily regular(const Alphabet& alphabet, Dfa language);
    static MembershipFamily regular(const Alphabet& alphabet, std::string_view regex_text);
    static MembershipFamily equal_blocks(const Alphabet& alphabet, char first, char second);
    static MembershipFamily balance(const Alphabet& alphabet, char plus, char minus, long long value);
    static MembershipFamily ideal(const Alphabet& alphabet, std::vector<Word> factors);
    static MembershipFamily generic(LanguageOracle oracle, std::size_t suffix_bound);

    bool member(const Word& w) const;
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const Impl& impl() const noexcept { return impl_; }

    /// True for the families whose whole language is one class of its right
    /// syntactic congruence.
    bool single_inside_class() const;

    /// Exact regular form when one exists (regular and ideal members).
    const std::optional<Dfa>& regular_form() const noexcept { return regular_form_; }

    LanguageOracle oracle() const;
    std::string describe() const;

private:
    Alphabet alphabet_;
    Impl impl_;
    std::optional<Dfa> regular_form_;
};

}  // namespace preact

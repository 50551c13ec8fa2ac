#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace preact {

/// A word over a finite alphabet. Comparison is shortlex: shorter words come
/// first, equal lengths are ordered lexicographically. The empty word plays
/// the role of the monoid unit.
class Word {
public:
    Word() = default;
    explicit Word(std::string letters) : letters_(std::move(letters)) {}
    explicit Word(char letter) : letters_(1, letter) {}

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    char operator[](std::size_t i) const { return letters_[i]; }

    Word prefix(std::size_t n) const { return Word(letters_.substr(0, n)); }
    Word suffix_from(std::size_t i) const { return Word(letters_.substr(i)); }
    bool starts_with(const Word& p) const {
        return letters_.compare(0, p.letters_.size(), p.letters_) == 0;
    }

    Word operator+(const Word& rhs) const { return Word(letters_ + rhs.letters_); }
    Word operator+(char c) const { return Word(letters_ + c); }

    bool operator==(const Word&) const = default;
    bool operator<(const Word& rhs) const {
        if (letters_.size() != rhs.letters_.size())
            return letters_.size() < rhs.letters_.size();
        return letters_ < rhs.letters_;
    }

    const std::string& text() const noexcept { return letters_; }

    friend std::ostream& operator<<(std::ostream& os, const Word& w) {
        return os << w.letters_;
    }

private:
    std::string letters_;
};

inline bool shortlex_less(const Word& a, const Word& b) { return a < b; }

/// Renders the empty word as "%e", everything else verbatim.
std::string display_word(const Word& w);

/// Inverse of display_word: "%e" and "" both denote the empty word.
Word word_from_text(std::string_view text);

/// Ordered set of distinct single-character symbols. The characters
/// | * ( ) % and whitespace are reserved by the expression dialect and are
/// rejected here.
class Alphabet {
public:
    explicit Alphabet(std::string_view symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    char symbol(std::size_t i) const { return symbols_[i]; }
    std::optional<std::size_t> index(char c) const;
    bool contains(char c) const { return index(c).has_value(); }
    const std::string& symbols() const noexcept { return symbols_; }

    bool operator==(const Alphabet&) const = default;

    /// Validating factory; throws std::invalid_argument on foreign symbols.
    Word word(std::string_view text) const;
    void require(const Word& w, const char* context) const;

private:
    std::string symbols_;
};

/// Count of `plus` letters minus count of `minus` letters.
long long balance(const Alphabet& alphabet, const Word& w, char plus, char minus);

/// All proper prefixes of w, shortest first; the empty word is included for
/// nonempty w. Has exactly size(w) elements.
std::vector<Word> proper_prefixes(const Word& w);

/// True when every nonempty prefix of w has strictly negative balance.
/// The empty word counts as true, having no nonempty prefix.
bool prefix_balances_all_negative(const Alphabet& alphabet, const Word& w, char plus, char minus);
bool prefix_balances_all_positive(const Alphabet& alphabet, const Word& w, char plus, char minus);

/// Shortlex enumeration of all words of length <= max_len, addressable by
/// rank. Index 0 is the empty word.
class WordSpace {
public:
    WordSpace(Alphabet alphabet, std::size_t max_len);

    std::size_t size() const noexcept { return total_; }
    Word at(std::size_t index) const;
    std::size_t index_of(const Word& w) const;
    /// Number of words of length <= len; equals the rank just past them.
    std::size_t count_upto(std::size_t len) const;

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t max_len() const noexcept { return max_len_; }

private:
    Alphabet alphabet_;
    std::size_t max_len_;
    std::vector<std::uint64_t> offsets_;  // offsets_[l] = rank of first word of length l
    std::size_t total_;
};

std::vector<Word> all_words_upto(const Alphabet& alphabet, std::size_t max_len);

}  // namespace preact

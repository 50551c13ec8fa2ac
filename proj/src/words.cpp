#include "preact/words.hpp"

#include <cctype>
#include <stdexcept>

namespace preact {

namespace {
constexpr std::string_view kReserved = "|*()%";
}

std::string display_word(const Word& w) {
    return w.empty() ? std::string("%e") : w.text();
}

Word word_from_text(std::string_view text) {
    if (text.empty() || text == "%e") return Word();
    return Word(std::string(text));
}

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.empty())
        throw std::invalid_argument("alphabet: must contain at least one symbol");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        char c = symbols_[i];
        if (!std::isprint(static_cast<unsigned char>(c)) || std::isspace(static_cast<unsigned char>(c)))
            throw std::invalid_argument("alphabet: symbols must be printable and non-blank");
        if (kReserved.find(c) != std::string_view::npos)
            throw std::invalid_argument(std::string("alphabet: symbol '") + c + "' is reserved");
        for (std::size_t j = i + 1; j < symbols_.size(); ++j)
            if (symbols_[j] == c)
                throw std::invalid_argument(std::string("alphabet: duplicate symbol '") + c + "'");
    }
}

std::optional<std::size_t> Alphabet::index(char c) const {
    auto pos = symbols_.find(c);
    if (pos == std::string::npos) return std::nullopt;
    return pos;
}

Word Alphabet::word(std::string_view text) const {
    Word w = word_from_text(text);
    require(w, "word");
    return w;
}

void Alphabet::require(const Word& w, const char* context) const {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!contains(w[i]))
            throw std::invalid_argument(std::string(context) + ": symbol '" + w[i] +
                                        "' not in alphabet '" + symbols_ + "'");
}

long long balance(const Alphabet& alphabet, const Word& w, char plus, char minus) {
    if (!alphabet.contains(plus))
        throw std::invalid_argument(std::string("balance: symbol '") + plus + "' not in alphabet");
    if (!alphabet.contains(minus))
        throw std::invalid_argument(std::string("balance: symbol '") + minus + "' not in alphabet");
    if (plus == minus)
        throw std::invalid_argument("balance: plus and minus must differ");
    alphabet.require(w, "balance");
    long long value = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == plus) ++value;
        else if (w[i] == minus) --value;
    }
    return value;
}

std::vector<Word> proper_prefixes(const Word& w) {
    std::vector<Word> out;
    out.reserve(w.size());
    for (std::size_t n = 0; n < w.size(); ++n) out.push_back(w.prefix(n));
    return out;
}

namespace {
bool prefix_balances_all(const Alphabet& alphabet, const Word& w, char plus, char minus, bool negative) {
    balance(alphabet, Word(), plus, minus);  // validate letters
    alphabet.require(w, "prefix balance");
    long long value = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == plus) ++value;
        else if (w[i] == minus) --value;
        if (negative ? value >= 0 : value <= 0) return false;
    }
    return true;
}
}  // namespace

bool prefix_balances_all_negative(const Alphabet& alphabet, const Word& w, char plus, char minus) {
    return prefix_balances_all(alphabet, w, plus, minus, true);
}

bool prefix_balances_all_positive(const Alphabet& alphabet, const Word& w, char plus, char minus) {
    return prefix_balances_all(alphabet, w, plus, minus, false);
}

WordSpace::WordSpace(Alphabet alphabet, std::size_t max_len)
    : alphabet_(std::move(alphabet)), max_len_(max_len) {
    offsets_.assign(max_len_ + 2, 0);
    std::uint64_t count = 1;  // words of length 0
    for (std::size_t l = 0; l <= max_len_; ++l) {
        offsets_[l + 1] = offsets_[l] + count;
        if (offsets_[l + 1] > (1ull << 40))
            throw std::length_error("word space too large");
        count *= alphabet_.size();
    }
    total_ = static_cast<std::size_t>(offsets_[max_len_ + 1]);
}

Word WordSpace::at(std::size_t index) const {
    if (index >= total_) throw std::out_of_range("word space index");
    std::size_t len = 0;
    while (offsets_[len + 1] <= index) ++len;
    std::uint64_t r = index - offsets_[len];
    std::string letters(len, alphabet_.symbol(0));
    const std::uint64_t k = alphabet_.size();
    for (std::size_t i = len; i-- > 0;) {
        letters[i] = alphabet_.symbol(static_cast<std::size_t>(r % k));
        r /= k;
    }
    return Word(std::move(letters));
}

std::size_t WordSpace::index_of(const Word& w) const {
    if (w.size() > max_len_) throw std::out_of_range("word longer than space bound");
    const std::uint64_t k = alphabet_.size();
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto d = alphabet_.index(w[i]);
        if (!d) throw std::invalid_argument("word space: foreign symbol");
        r = r * k + *d;
    }
    return static_cast<std::size_t>(offsets_[w.size()] + r);
}

std::size_t WordSpace::count_upto(std::size_t len) const {
    if (len > max_len_) throw std::out_of_range("length beyond space bound");
    return static_cast<std::size_t>(offsets_[len + 1]);
}

std::vector<Word> all_words_upto(const Alphabet& alphabet, std::size_t max_len) {
    WordSpace space(alphabet, max_len);
    std::vector<Word> out;
    out.reserve(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) out.push_back(space.at(i));
    return out;
}

}  // namespace preact

#include <algorithm>
#include <set>

#include "doctest.h"
#include "preact/words.hpp"

using namespace preact;

TEST_CASE("shortlex order and enumeration") {
    Alphabet ab("ab");
    auto words = all_words_upto(ab, 3);
    CHECK(words.size() == 15);  // 1 + 2 + 4 + 8
    CHECK(words.front() == Word());
    CHECK(words.back() == Word("bbb"));
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(std::set<Word>(words.begin(), words.end()).size() == words.size());

    // shorter beats longer, ties break lexicographically
    CHECK(Word("b") < Word("aa"));
    CHECK(Word("ab") < Word("ba"));
    CHECK_FALSE(Word("ab") < Word("ab"));
}

TEST_CASE("word space ranks round-trip") {
    WordSpace space(Alphabet("ab"), 5);
    CHECK(space.size() == 63);
    CHECK(space.count_upto(0) == 1);
    CHECK(space.count_upto(2) == 7);
    for (std::size_t i = 0; i < space.size(); ++i) CHECK(space.index_of(space.at(i)) == i);
    CHECK_THROWS_AS(space.at(63), std::out_of_range);
    CHECK_THROWS_AS(space.index_of(Word("aaaaaa")), std::out_of_range);
}

TEST_CASE("display and parse of the empty word") {
    CHECK(display_word(Word()) == "%e");
    CHECK(display_word(Word("ba")) == "ba");
    CHECK(word_from_text("%e") == Word());
    CHECK(word_from_text("") == Word());
    CHECK(word_from_text("ab") == Word("ab"));
}

TEST_CASE("alphabet validation") {
    Alphabet ab("ab");
    CHECK(ab.size() == 2);
    CHECK(ab.index('b') == 1);
    CHECK_FALSE(ab.contains('c'));
    CHECK(ab.word("ab") == Word("ab"));
    CHECK_THROWS_AS(ab.word("ac"), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet(""), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet("aa"), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet("a|b"), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet("a*"), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet("a b"), std::invalid_argument);
}

TEST_CASE("balance and prefix balances") {
    Alphabet ab("ab");
    CHECK(balance(ab, Word(), 'a', 'b') == 0);
    CHECK(balance(ab, Word("aab"), 'a', 'b') == 1);
    CHECK(balance(ab, Word("abbb"), 'a', 'b') == -2);
    CHECK_THROWS_AS(balance(ab, Word(), 'a', 'a'), std::invalid_argument);
    CHECK_THROWS_AS(balance(ab, Word(), 'c', 'b'), std::invalid_argument);

    CHECK(prefix_balances_all_negative(ab, Word(), 'a', 'b'));
    CHECK(prefix_balances_all_negative(ab, Word("bba"), 'a', 'b'));
    CHECK_FALSE(prefix_balances_all_negative(ab, Word("ba"), 'a', 'b'));  // prefix ba hits 0
    CHECK_FALSE(prefix_balances_all_negative(ab, Word("ab"), 'a', 'b'));
    CHECK(prefix_balances_all_positive(ab, Word("aab"), 'a', 'b'));
    CHECK_FALSE(prefix_balances_all_positive(ab, Word("aabb"), 'a', 'b'));
}

TEST_CASE("proper prefixes") {
    auto ps = proper_prefixes(Word("abc"));
    REQUIRE(ps.size() == 3);
    CHECK(ps[0] == Word());
    CHECK(ps[1] == Word("a"));
    CHECK(ps[2] == Word("ab"));
    CHECK(proper_prefixes(Word()).empty());
}

TEST_CASE("word concatenation helpers") {
    Word w("ab");
    CHECK(w + Word("ba") == Word("abba"));
    CHECK(w + 'a' == Word("aba"));
    CHECK(Word("abba").starts_with(w));
    CHECK_FALSE(Word("a").starts_with(w));
    CHECK(Word("abba").suffix_from(2) == Word("ba"));
    CHECK(Word("abba").prefix(2) == w);
}

#include <algorithm>

#include "doctest.h"
#include "preact/prefix_decomposition.hpp"
#include "support.hpp"

using namespace preact;
namespace pt = preact::testing;

TEST_CASE("head-code languages, three routes") {
    Alphabet ab("ab");
    for (const auto& c : pt::p_language_corpus()) {
        CAPTURE(c.name);
        PLanguage p = p_language_from_words(ab, c.head, c.code);
        Dfa lang = p_language_dfa(p);
        Preacceptor acceptor = build_preacceptor(p);
        for (const Word& w : all_words_upto(ab, 8)) {
            bool brute = pt::brute_hcstar_member(c.head, c.code, w);
            CAPTURE(w.text());
            CHECK(lang.member(w) == brute);
            CHECK(hcstar_member_dp(p, w) == brute);
            CHECK(accepts(acceptor, w) == brute);
        }
    }
}

TEST_CASE("factorization exists exactly on members and is valid") {
    Alphabet ab("ab");
    for (const auto& c : pt::p_language_corpus()) {
        CAPTURE(c.name);
        PLanguage p = p_language_from_words(ab, c.head, c.code);
        for (const Word& w : all_words_upto(ab, 8)) {
            auto factors = unique_factorization(p, w);
            CHECK(factors.has_value() == pt::brute_hcstar_member(c.head, c.code, w));
            if (!factors) continue;
            REQUIRE(!factors->empty());
            CHECK(p.head.member((*factors)[0]));
            Word joined = (*factors)[0];
            for (std::size_t i = 1; i < factors->size(); ++i) {
                CHECK(p.code.member((*factors)[i]));
                CHECK_FALSE((*factors)[i].empty());
                joined = joined + (*factors)[i];
            }
            CHECK(joined == w);
        }
    }
}

TEST_CASE("only prefix codes are accepted") {
    Alphabet ab("ab");
    CHECK_THROWS_AS(p_language_from_words(ab, {Word("a"), Word("ab")}, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(p_language_from_words(ab, {Word("a")}, {Word(), Word("b")}),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_p_language(sigma_star(ab), epsilon_only(ab)), std::invalid_argument);
}

// u, u v in C* force v in C*; and u in H C* with u v in H C* force v in C*.
// Scanned over every two-part split, through the automaton and the scanner.
TEST_CASE("cancellation laws of code stars") {
    Alphabet ab("ab");
    for (const auto& c : pt::p_language_corpus()) {
        CAPTURE(c.name);
        PLanguage p = p_language_from_words(ab, c.head, c.code);
        Dfa c_star = minimize(star(p.code));
        Dfa hc_star = p_language_dfa(p);
        for (const Word& w : all_words_upto(ab, 8)) {
            for (std::size_t n = 0; n <= w.size(); ++n) {
                const Word u = w.prefix(n);
                const Word v = w.suffix_from(n);
                if (c_star.member(u) && c_star.member(w)) {
                    CHECK(c_star.member(v));
                    CHECK(pt::brute_cstar_member(c.code, v));
                }
                if (hc_star.member(u) && hc_star.member(w)) {
                    CHECK(c_star.member(v));
                    CHECK(pt::brute_cstar_member(c.code, v));
                }
            }
        }
    }
}

TEST_CASE("exact extraction from a quotient acceptor") {
    Alphabet ab("ab");
    Preacceptor aba = pt::aba_star_acceptor();
    ExtractedCodes ec = extract_codes(aba, 1, std::nullopt);
    CHECK(ec.exact);
    CHECK(equivalent(ec.head, from_words(ab, {Word("ab")})));
    CHECK(equivalent(ec.code, from_words(ab, {Word("a")})));
    // putting the pieces back together restores the language
    PLanguage p = make_p_language(ec.head, ec.code);
    CHECK(equivalent(p_language_dfa(p), compile(ab, "aba*")));
}

TEST_CASE("decomposing a built machine recovers its codes") {
    Alphabet ab("ab");
    for (const auto& c : pt::p_language_corpus()) {
        CAPTURE(c.name);
        PLanguage p = p_language_from_words(ab, c.head, c.code);
        Preacceptor acceptor = build_preacceptor(p);
        Decomposition d = decompose(acceptor, std::nullopt);
        REQUIRE(d.components.size() == 1);
        const ExtractedCodes& ec = d.components[0];
        CHECK(ec.exact);
        // the recovered pair spans the same language
        PLanguage back = make_p_language(ec.head, ec.code);
        CHECK(equivalent(p_language_dfa(back), p_language_dfa(p)));
        // heads come back literally; codes too, unless the code was {%e},
        // which canonicalizes to the empty code with the same span
        CHECK(equivalent(ec.head, p.head));
        bool epsilon_code = c.code.size() == 1 && c.code[0].empty();
        if (epsilon_code)
            CHECK(is_empty(ec.code));
        else
            CHECK(equivalent(ec.code, p.code));
    }
}

TEST_CASE("bounded extraction on the translation acceptor") {
    Preacceptor z = make_preacceptor(pt::integer_machine(), 0, {0, 1});
    CHECK_THROWS_AS(extract_codes(z, 0, std::nullopt), std::invalid_argument);
    CHECK_THROWS_AS(extract_codes(z, 5, 4), std::invalid_argument);

    Decomposition d = decompose(z, 6);
    REQUIRE(d.components.size() == 2);
    CHECK(d.terminals == std::vector<int>{0, 1});
    CHECK_FALSE(d.components[0].exact);
    CHECK_FALSE(d.components[1].exact);

    CHECK(members_upto(d.components[0].head, 6) == std::vector<Word>{Word()});
    CHECK(members_upto(d.components[1].head, 6) ==
          std::vector<Word>{Word("a"), Word("baa"), Word("babaa"), Word("bbaaa")});
    std::vector<Word> returns = {Word("ab"),     Word("ba"),     Word("aabb"),   Word("bbaa"),
                                 Word("aaabbb"), Word("aababb"), Word("bbabaa"), Word("bbbaaa")};
    CHECK(members_upto(d.components[0].code, 6) == returns);
    CHECK(members_upto(d.components[1].code, 6) == returns);
}

TEST_CASE("components of a decomposition cover disjointly") {
    Alphabet ab("ab");
    Preacceptor z = make_preacceptor(pt::integer_machine(), 0, {0, 1});
    Decomposition d = decompose(z, 8);
    REQUIRE(d.components.size() == 2);
    Dfa first = p_language_dfa(make_p_language(d.components[0].head, d.components[0].code));
    Dfa second = p_language_dfa(make_p_language(d.components[1].head, d.components[1].code));
    for (const Word& w : all_words_upto(ab, 6)) {
        CHECK_FALSE((first.member(w) && second.member(w)));
        CHECK((first.member(w) || second.member(w)) == accepts(z, w));
    }
}

TEST_CASE("extraction bound too small is visible, not hidden") {
    // with bound 3 the longer return words are missed but nothing is invented
    Preacceptor z = make_preacceptor(pt::integer_machine(), 0, {0, 1});
    Decomposition d = decompose(z, 3);
    CHECK(members_upto(d.components[0].code, 3) == std::vector<Word>{Word("ab"), Word("ba")});
    Dfa small = p_language_dfa(make_p_language(d.components[0].head, d.components[0].code));
    Alphabet ab("ab");
    for (const Word& w : all_words_upto(ab, 3))
        if (small.member(w)) CHECK(accepts(z, w));
    CHECK_FALSE(small.member(Word("aabb")));  // beyond the bound, absent
}

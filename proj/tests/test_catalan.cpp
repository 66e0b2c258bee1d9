#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace qshuffle;

TEST_CASE("catalan words by direct construction") {
    CHECK(catalan_words(0) == std::vector<Word>{Word()});
    CHECK(catalan_words(1) == std::vector<Word>{"xy"_w});

    auto w2 = catalan_words(2);
    CHECK(std::set<Word>(w2.begin(), w2.end()) == std::set<Word>{"xyxy"_w, "xxyy"_w});

    auto w3 = catalan_words(3);
    CHECK(std::set<Word>(w3.begin(), w3.end()) ==
          std::set<Word>{"xyxyxy"_w, "xxyyxy"_w, "xyxxyy"_w, "xxyxyy"_w, "xxxyyy"_w});

    CHECK(catalan_words(4).size() == 14);

    // emitted order is lexicographic
    for (int n = 1; n <= 5; ++n) {
        auto words = catalan_words(n);
        CHECK(std::is_sorted(words.begin(), words.end()));
    }
}

TEST_CASE("catalan word counts against the brute-force filter") {
    for (int n = 0; n <= 6; ++n) {
        auto fast = catalan_words(n);
        auto brute = testing::catalan_words_bruteforce(n);
        std::sort(brute.begin(), brute.end());
        REQUIRE(fast == brute);
    }
    for (int n = 0; n <= 8; ++n)
        REQUIRE(Int(catalan_words(n).size()) == catalan_number(static_cast<unsigned>(n)));
}

TEST_CASE("catalan elements match their printed expansions") {
    CHECK(catalan_element(0) == Element::one());
    CHECK(catalan_element(1) == Element::of_word("xy"_w, q_int(2)));

    Scalar two = q_int(2), three = q_int(3), four = q_int(4);
    Element c2;
    c2.add_term("xyxy"_w, two.pow(2));
    c2.add_term("xxyy"_w, three * two.pow(2));
    CHECK(catalan_element(2) == c2);

    Element c3;
    c3.add_term("xyxyxy"_w, two.pow(3));
    c3.add_term("xxyyxy"_w, three * two.pow(3));
    c3.add_term("xyxxyy"_w, three * two.pow(3));
    c3.add_term("xxyxyy"_w, three.pow(2) * two.pow(3));
    c3.add_term("xxxyyy"_w, four * three.pow(2) * two.pow(2));
    CHECK(catalan_element(3) == c3);
}

TEST_CASE("x C_n y free products match their printed expansions") {
    CHECK(x_catalan_y(0) == Element::of_word("xy"_w));
    CHECK(x_catalan_y(1) == Element::of_word("xxyy"_w, q_int(2)));

    Scalar two = q_int(2), three = q_int(3), four = q_int(4);
    Element m2;
    m2.add_term("xxyxyy"_w, two.pow(2));
    m2.add_term("xxxyyy"_w, three * two.pow(2));
    CHECK(x_catalan_y(2) == m2);

    Element m3;
    m3.add_term("xxyxyxyy"_w, two.pow(3));
    m3.add_term("xxxyyxyy"_w, three * two.pow(3));
    m3.add_term("xxyxxyyy"_w, three * two.pow(3));
    m3.add_term("xxxyxyyy"_w, three.pow(2) * two.pow(3));
    m3.add_term("xxxxyyyy"_w, four * three.pow(2) * two.pow(2));
    CHECK(x_catalan_y(3) == m3);
}

TEST_CASE("coefficient of x^n y^n inside C_n") {
    // partial sums along x^n y^n climb 1..n+1 and descend, so the coefficient
    // must be [n+1]_q prod_{i=1}^n [i]_q^2
    for (int n = 1; n <= 6; ++n) {
        Word w;
        for (int i = 0; i < n; ++i) w = w.append(Letter::x);
        for (int i = 0; i < n; ++i) w = w.append(Letter::y);
        Scalar expected = q_int(n + 1);
        for (int i = 1; i <= n; ++i) expected *= q_int(i).pow(2);
        REQUIRE(catalan_element(n).coeff(w) == expected);
    }
}

TEST_CASE("alternating words") {
    CHECK(alternating_word(AltFamily::Gtilde, 0) == Element::one());
    CHECK(alternating_word(AltFamily::G, 0) == Element::one());
    CHECK(alternating_word(AltFamily::Gtilde, 2) == Element::of_word("xyxy"_w));
    CHECK(alternating_word(AltFamily::G, 3) == Element::of_word("yxyxyx"_w));
    CHECK(alternating_word(AltFamily::Wminus, 0) == Element::of_word("x"_w));
    CHECK(alternating_word(AltFamily::Wminus, 2) == Element::of_word("xyxyx"_w));
    CHECK(alternating_word(AltFamily::Wplus, 1) == Element::of_word("y"_w));
    CHECK(alternating_word(AltFamily::Wplus, 3) == Element::of_word("yxyxy"_w));

    CHECK_THROWS_AS(alternating_word(AltFamily::Wplus, 0), std::invalid_argument);
    CHECK_THROWS_AS(alternating_word(AltFamily::Wminus, -1), std::invalid_argument);
    CHECK_THROWS_AS(alternating_word(AltFamily::G, -1), std::invalid_argument);

    for (int k = 1; k <= 4; ++k) {
        CHECK(is_alternating(alternating_word_value(AltFamily::Gtilde, k)));
        CHECK(is_alternating(alternating_word_value(AltFamily::Wminus, k)));
    }
    CHECK_FALSE(is_alternating("xxy"_w));
    CHECK_FALSE(is_alternating(Word()));
}

TEST_CASE("paired recursion reproduces both families") {
    CHECK(catalan_via_recursion(1) == Element::of_word("xy"_w, q_int(2)));
    CHECK(gtilde_via_recursion(1) == Element::of_word("xy"_w));

    // G~_2 via the recursion unfolds to ([3] C1*C1 - [2]^2 C2)/([2][4])
    Element c1 = catalan_element(1), c2 = catalan_element(2);
    Element expected =
        (q_int(3) * shuffle_mul(c1, c1) - q_int(2).pow(2) * c2) / (q_int(2) * q_int(4));
    CHECK(gtilde_via_recursion(2) == expected);

    for (int n = 1; n <= 5; ++n) {
        REQUIRE(catalan_via_recursion(n) == catalan_element(n));
        REQUIRE(gtilde_via_recursion(n) == gtilde(n));
    }
}

TEST_CASE("small commutation checks") {
    // full index bounds run in the acceptance suite
    for (int i = 1; i <= 2; ++i)
        for (int j = i + 1; i + j <= 5; ++j)
            REQUIRE(shuffle_commutator(catalan_element(i), catalan_element(j)).is_zero());
    for (int i = 0; i <= 1; ++i)
        for (int j = i + 1; i + j <= 3; ++j)
            REQUIRE(shuffle_commutator(x_catalan_y(i), x_catalan_y(j)).is_zero());
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; i + j <= 6; ++j)
            REQUIRE(shuffle_commutator(gtilde(i), gtilde(j)).is_zero());
}

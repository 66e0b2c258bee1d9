#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace qshuffle;

TEST_CASE("word basics") {
    CHECK(Word().str() == "1");
    CHECK(Word::from_string("1").empty());
    CHECK("xxy"_w.str() == "xxy");
    CHECK("xxy"_w.length() == 3);
    CHECK(bar(Letter::x) == 1);
    CHECK(bar(Letter::y) == -1);
    CHECK("xxy"_w.bar_sum() == 1);
    CHECK("xyxy"_w.tail() == "yxy"_w);
    CHECK("xyxy"_w.drop_last() == "xyx"_w);
    CHECK("xy"_w.concat("yx"_w) == "xyyx"_w);
    CHECK_THROWS_AS(Word::from_string("xz"), std::invalid_argument);

    // (length, lex) order with x < y
    CHECK("x"_w < "y"_w);
    CHECK("y"_w < "xx"_w);
    CHECK("xxyy"_w < "xyxy"_w);
    CHECK("xyxy"_w < "yxxx"_w);
}

TEST_CASE("length guards") {
    Word w32 = Word::from_bits(0, 32);
    CHECK_NOTHROW(w32.concat(w32));
    CHECK_THROWS_AS(w32.concat(w32).concat(Word::single(Letter::x)), std::length_error);
    CHECK_THROWS_AS(Word::from_bits(0, 65), std::length_error);
    CHECK_THROWS_AS(grade_project(Element::one(), -1), std::invalid_argument);
    CHECK_THROWS_AS(Series(-1), std::invalid_argument);
}

TEST_CASE("free product concatenates words bilinearly") {
    Element x = Element::of_letter(Letter::x);
    Element y = Element::of_letter(Letter::y);

    Element c0 = Element::one();
    CHECK(free_mul(x, free_mul(c0, y)) == Element::of_word("xy"_w));

    Element c1 = Element::of_word("xy"_w, q_int(2));
    CHECK(free_mul(x, free_mul(c1, y)) == Element::of_word("xxyy"_w, q_int(2)));

    Element c2;
    c2.add_term("xyxy"_w, q_int(2).pow(2));
    c2.add_term("xxyy"_w, q_int(3) * q_int(2).pow(2));
    Element expected;
    expected.add_term("xxyxyy"_w, q_int(2).pow(2));
    expected.add_term("xxxyyy"_w, q_int(3) * q_int(2).pow(2));
    CHECK(free_mul(x, free_mul(c2, y)) == expected);
}

TEST_CASE("bilinear form: standard basis is orthonormal") {
    Element xy = Element::of_word("xy"_w);
    CHECK(bilinear_form(xy, xy) == Scalar(1));
    CHECK(bilinear_form(Element::of_word("xxxy"_w), j_plus()) == Scalar(1));
    CHECK(bilinear_form(Element::of_word("xxyx"_w), j_plus()) == -q_int(3));
    CHECK(bilinear_form(j_plus(), j_minus()).is_zero());
}

TEST_CASE("grade projection") {
    Element e = Element::one() + Element::of_word("xy"_w, q_int(2));
    CHECK(grade_project(e, 0) == Element::one());
    CHECK(grade_project(e, 2) == Element::of_word("xy"_w, q_int(2)));

    Element xc1y = Element::of_word("xxyy"_w, q_int(2));
    CHECK(grade_project(xc1y, 4) == xc1y);

    Element c2;
    c2.add_term("xyxy"_w, q_int(2).pow(2));
    c2.add_term("xxyy"_w, q_int(3) * q_int(2).pow(2));
    CHECK(grade_project(c2, 2).is_zero());
    CHECK(c2.is_homogeneous(4));
    CHECK(c2.homogeneous_degree() == 4);
    CHECK_FALSE(e.homogeneous_degree().has_value());
}

TEST_CASE("ideal generators as printed") {
    Element jp = j_plus();
    CHECK(jp.term_count() == 4);
    CHECK(jp.coeff("xxxy"_w) == Scalar(1));
    CHECK(jp.coeff("xxyx"_w) == -q_int(3));
    CHECK(jp.coeff("xyxx"_w) == q_int(3));
    CHECK(jp.coeff("yxxx"_w) == Scalar(-1));

    Element jm = j_minus();
    CHECK(jm.coeff("yyyx"_w) == Scalar(1));
    CHECK(jm.coeff("yyxy"_w) == -q_int(3));
    CHECK(jm.coeff("yxyy"_w) == q_int(3));
    CHECK(jm.coeff("xyyy"_w) == Scalar(-1));
}

TEST_CASE("free product is associative with unit") {
    std::mt19937 rng(20240804);
    for (int i = 0; i < 60; ++i) {
        Element a = testing::random_element(rng, 4, 5);
        Element b = testing::random_element(rng, 4, 5);
        Element c = testing::random_element(rng, 4, 5);
        CHECK(free_mul(free_mul(a, b), c) == free_mul(a, free_mul(b, c)));
        CHECK(free_mul(a, Element::one()) == a);
        CHECK(free_mul(Element::one(), a) == a);
    }
}

TEST_CASE("bilinear form is symmetric and factors on homogeneous splits") {
    std::mt19937 rng(20240805);
    for (int i = 0; i < 80; ++i) {
        Element a = testing::random_element(rng, 5, 6);
        Element b = testing::random_element(rng, 5, 6);
        CHECK(bilinear_form(a, b) == bilinear_form(b, a));
    }
    // <XY, X'Y'> = <X, X'><Y, Y'> for X, X' of one degree and Y, Y' of another
    std::uniform_int_distribution<int> degree(0, 3);
    for (int i = 0; i < 80; ++i) {
        int r = degree(rng), s = degree(rng);
        Element X = testing::random_homogeneous_element(rng, 3, r);
        Element Xp = testing::random_homogeneous_element(rng, 3, r);
        Element Y = testing::random_homogeneous_element(rng, 3, s);
        Element Yp = testing::random_homogeneous_element(rng, 3, s);
        CHECK(bilinear_form(free_mul(X, Y), free_mul(Xp, Yp)) ==
              bilinear_form(X, Xp) * bilinear_form(Y, Yp));
    }
}

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace qshuffle;

namespace {

Series catalan_series(int order) {
    Series s(order);
    for (int k = 0; k <= order; ++k) s.set_coeff(k, catalan_element(k));
    return s;
}

Series gtilde_series(int order) {
    Series s(order);
    for (int k = 0; k <= order; ++k) s.set_coeff(k, gtilde(k));
    return s;
}

}  // namespace

TEST_CASE("truncated products") {
    Element x = Element::of_letter(Letter::x);
    Element y = Element::of_letter(Letter::y);

    Series a = Series::one(1), b = Series::one(1);
    a.set_coeff(1, x);
    b.set_coeff(1, y);
    Series ab = series_mul(a, b);
    CHECK(ab.coeff(0) == Element::one());
    CHECK(ab.coeff(1) == x + y);

    Series c = Series::one(2), d = Series::one(2);
    c.set_coeff(1, x);
    d.set_coeff(1, -x);
    Series cd = series_mul(c, d);
    CHECK(cd.coeff(0) == Element::one());
    CHECK(cd.coeff(1).is_zero());
    CHECK(cd.coeff(2) == -shuffle_mul(x, x));

    Series wrong_order(3);
    CHECK_THROWS_AS(series_mul(a, wrong_order), std::invalid_argument);
}

TEST_CASE("series inverse via forward substitution oracle") {
    Series c = catalan_series(4);
    Series inv = testing::series_inverse_forward_substitution(c);
    CHECK(series_mul(c, inv).is_one());
    CHECK(series_mul(inv, c).is_one());
}

TEST_CASE("exponential") {
    Series zero(3);
    CHECK(series_exp(zero).is_one());

    Series bad = Series::one(3);
    CHECK_THROWS_AS(series_exp(bad), std::domain_error);

    // exp([2]_q xy t): t^2 coefficient is ([2]_q^2 / 2) (xy * xy)
    Series a(2);
    a.set_coeff(1, Element::of_word("xy"_w, q_int(2)));
    Series e = series_exp(a);
    Element xyxy = shuffle_mul(Element::of_word("xy"_w), Element::of_word("xy"_w));
    CHECK(e.coeff(2) == Scalar(Rational(1, 2)) * q_int(2).pow(2) * xyxy);

    // the Catalan generating identity at order 2: coefficient t^2 equals C_2
    Series arg(2);
    for (int k = 1; k <= 2; ++k) arg.set_coeff(k, (q_int(2 * k) / Scalar(k)) * x_catalan_y(k - 1));
    CHECK(series_exp(arg).coeff(2) == catalan_element(2));
}

TEST_CASE("logarithm") {
    Series zero(3);
    CHECK(series_ln1p(zero) == Series(3));
    CHECK_THROWS_AS(series_ln1p(Series::one(3)), std::domain_error);

    // first-order term of ln(1 + sum C_k t^k) is C_1 = [2]_q xy
    Series c = catalan_series(3);
    c.set_coeff(0, Element::zero());
    CHECK(series_ln1p(c).coeff(1) == Element::of_word("xy"_w, q_int(2)));
}

TEST_CASE("exp/ln round trip on random series") {
    std::mt19937 rng(20240810);
    for (int i = 0; i < 10; ++i) {
        Series a(4);
        for (int k = 1; k <= 4; ++k) a.set_coeff(k, testing::random_element(rng, 2, 3));
        Series b = series_exp(a);
        b.set_coeff(0, Element::zero());  // b = exp(a) - 1
        CHECK(series_ln1p(b) == a);
    }
}

TEST_CASE("substitution t -> c t") {
    Series c = catalan_series(3);
    CHECK(series_scale_t(c, Scalar(1)) == c);

    Series neg = series_scale_t(c, Scalar(-1));
    CHECK(neg.coeff(1) == -catalan_element(1));
    CHECK(neg.coeff(2) == catalan_element(2));

    Series g = gtilde_series(3);
    CHECK(series_scale_t(series_scale_t(g, Scalar::q_power(1)), Scalar::q_power(-1)) == g);
}

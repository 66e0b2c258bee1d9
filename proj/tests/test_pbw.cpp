#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "helpers.hpp"

using namespace qshuffle;

TEST_CASE("damiani base cases") {
    CHECK(damiani(DamianiKind::alpha0, 0) == Element::of_letter(Letter::x));
    CHECK(damiani(DamianiKind::alpha1, 0) == Element::of_letter(Letter::y));

    // E_d = q^-2 y*x - x*y collapses to (q^-4 - 1) xy
    Element ed = damiani(DamianiKind::delta, 1);
    Element direct = Scalar::q_power(-2) * shuffle_mul(Element::of_letter(Letter::y), Element::of_letter(Letter::x)) -
                     shuffle_mul(Element::of_letter(Letter::x), Element::of_letter(Letter::y));
    CHECK(ed == direct);
    CHECK(ed == Element::of_word("xy"_w, Scalar::q_power(-4) - Scalar(1)));
    // ... and agrees with -q^-2 (q - q^-1) C_1
    CHECK(ed == (-Scalar::q_power(-2) * q_minus_qinv()) * catalan_element(1));

    CHECK_THROWS_AS(damiani(DamianiKind::delta, 0), std::invalid_argument);
    CHECK_THROWS_AS(damiani(DamianiKind::alpha0, -1), std::invalid_argument);
}

TEST_CASE("damiani recursion equals the closed form") {
    for (int n = 0; n <= 3; ++n) {
        REQUIRE(damiani(DamianiKind::alpha0, n) == damiani_closed_form(DamianiKind::alpha0, n));
        REQUIRE(damiani(DamianiKind::alpha1, n) == damiani_closed_form(DamianiKind::alpha1, n));
        if (n >= 1) REQUIRE(damiani(DamianiKind::delta, n) == damiani_closed_form(DamianiKind::delta, n));
    }
    // grading: (2n+1)-homogeneous for the alpha kinds, 2n for the delta kind
    CHECK(damiani(DamianiKind::alpha0, 2).is_homogeneous(5));
    CHECK(damiani(DamianiKind::alpha1, 2).is_homogeneous(5));
    CHECK(damiani(DamianiKind::delta, 2).is_homogeneous(4));
}

TEST_CASE("beck root vectors from the generating function") {
    Element e1 = damiani(DamianiKind::delta, 1);
    Element e2 = damiani(DamianiKind::delta, 2);
    Element e3 = damiani(DamianiKind::delta, 3);
    Scalar p = q_minus_qinv();

    CHECK(beck(1) == -e1);
    CHECK(beck(2) == -e2 - (p / Scalar(2)) * shuffle_mul(e1, e1));
    CHECK(beck(3) == -e3 - p * shuffle_mul(e1, e2) -
                         (p.pow(2) / Scalar(3)) * shuffle_mul(shuffle_mul(e1, e1), e1));
    CHECK_THROWS_AS(beck(0), std::invalid_argument);
    CHECK(beck(2).is_homogeneous(4));
}

TEST_CASE("beck closed form") {
    CHECK(beck_closed_form(1) ==
          (q_int(2) * Scalar::q_power(-2) * q_minus_qinv()) * Element::of_word("xy"_w));
    CHECK(beck_closed_form(2) ==
          (q_int(4) / Scalar(2) * Scalar::q_power(-4) * q_minus_qinv().pow(3) * q_int(2)) *
              Element::of_word("xxyy"_w));
    CHECK_THROWS_AS(beck_closed_form(0), std::invalid_argument);

    for (int n = 1; n <= 3; ++n) REQUIRE(beck(n) == beck_closed_form(n));
}

TEST_CASE("ideal slices and graded dimensions") {
    CHECK(dim_ideal(4) == 2);
    CHECK(dim_ideal(5) == 8);
    CHECK(dim_U(2) == 4);
    CHECK(dim_U(4) == 14);

    GradedSubspaceBasis b5 = ideal_degree_basis(5);
    CHECK(b5.vectors.size() == 8);
    for (const Element& v : b5.vectors) CHECK(v.is_homogeneous(5));

    // dim V_6 - dim J_6 must equal the degree-6 monomial count
    CHECK(Int(64 - dim_ideal(6)) == Int(pbw_monomials(PBWBasis::damiani, 6).size()));
    CHECK(dim_U(8) == Int(pbw_monomials(PBWBasis::damiani, 8).size()));

    CHECK_THROWS_AS(ideal_degree_span(3), std::invalid_argument);
}

TEST_CASE("pbw monomial enumeration") {
    auto deg2 = pbw_monomials(PBWBasis::damiani, 2);
    std::set<std::string> names;
    for (const auto& m : deg2) names.insert(m.name(PBWBasis::damiani));
    CHECK(names == std::set<std::string>{"A·A", "A·B", "B·B", "E_{d}"});

    CHECK(pbw_monomials(PBWBasis::damiani, 0).size() == 1);
    CHECK(pbw_monomials(PBWBasis::damiani, 0).front().name(PBWBasis::damiani) == "1");
    CHECK(pbw_monomials(PBWBasis::damiani, 4).size() == 14);
    CHECK(pbw_monomials(PBWBasis::beck, 4).size() == 14);
    CHECK(pbw_monomials(PBWBasis::xcy, 4).size() == 14);
    CHECK(pbw_monomials(PBWBasis::alternating, 4).size() == 14);

    // factors respect the declared order and degrees add up
    for (const auto& m : pbw_monomials(PBWBasis::xcy, 6)) {
        int total = 0;
        for (size_t i = 0; i < m.factors.size(); ++i) {
            total += detail::pbw_generator_degree(PBWBasis::xcy, m.factors[i]);
            if (i)
                CHECK(detail::pbw_order_key(PBWBasis::xcy, m.factors[i - 1]) <=
                      detail::pbw_order_key(PBWBasis::xcy, m.factors[i]));
        }
        CHECK(total == 6);
    }

    CHECK_THROWS_AS(parse_pbw_basis("nope"), std::invalid_argument);
}

TEST_CASE("pbw independence at a specialization") {
    for (PBWBasis basis : {PBWBasis::damiani, PBWBasis::beck, PBWBasis::xcy, PBWBasis::alternating}) {
        PBWCheckReport report = pbw_independence_check(basis, 6, Rational(2));
        INFO(pbw_basis_name(basis) << ": " << report.message);
        REQUIRE(report.pass);
        REQUIRE(report.counts ==
                std::vector<size_t>{1, 2, 4, 8, 14, 24, 40});
        REQUIRE(report.q0_used == Rational(2));
    }
}

TEST_CASE("dims table is internally consistent") {
    auto rows = dims_table(6);
    CHECK(rows[0].dim_v == 1);
    CHECK(rows[0].dim_j == 0);
    CHECK(rows[0].dim_u == 1);
    CHECK(rows[4].dim_v == 16);
    CHECK(rows[4].dim_j == 2);
    CHECK(rows[4].dim_u == 14);
    for (const auto& r : rows) CHECK(r.consistent);
}

TEST_CASE("mixed q-bracket and raising relations at small indices") {
    // [E_{id+a0}, E_{jd+a1}]_q = -q E_{(i+j+1)d}
    for (int i = 0; i <= 1; ++i)
        for (int j = 0; i + j <= 1; ++j) {
            Element lhs = shuffle_q_commutator(damiani(DamianiKind::alpha0, i), damiani(DamianiKind::alpha1, j));
            REQUIRE(lhs == -Scalar::q_power(1) * damiani(DamianiKind::delta, i + j + 1));
        }
    // [E_{ld+a0}, E^Beck_{kd}] = ([2k]_q/k) E_{(k+l)d+a0}
    for (int k = 1; k <= 2; ++k)
        for (int l = 0; k + l <= 2; ++l) {
            Element lhs = shuffle_commutator(damiani(DamianiKind::alpha0, l), beck(k));
            REQUIRE(lhs == (q_int(2 * k) / Scalar(k)) * damiani(DamianiKind::alpha0, k + l));
            Element rhs = shuffle_commutator(beck(k), damiani(DamianiKind::alpha1, l));
            REQUIRE(rhs == (q_int(2 * k) / Scalar(k)) * damiani(DamianiKind::alpha1, k + l));
        }
}

#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "catalan.hpp"
#include "linalg.hpp"
#include "series.hpp"

namespace qshuffle {

// ---------------------------------------------------------------------------
// Damiani and Beck root vectors (as images in the q-shuffle algebra)
// ---------------------------------------------------------------------------

enum class DamianiKind { alpha0, alpha1, delta };

namespace detail {

// The defining recursion, with every product taken in the q-shuffle algebra:
//   E_{a0} = x,  E_{a1} = y,  E_d = q^-2 y*x - x*y
//   E_{nd+a0} = [E_d, E_{(n-1)d+a0}] / (q + q^-1)
//   E_{nd+a1} = [E_{(n-1)d+a1}, E_d] / (q + q^-1)
//   E_{nd}    = q^-2 (E_{(n-1)d+a1} * x) - x * E_{(n-1)d+a1}
struct DamianiTower {
    std::vector<Element> a0, a1, d;  // d[0] is unused

    explicit DamianiTower(int n_max) {
        Element x = Element::of_letter(Letter::x);
        Element y = Element::of_letter(Letter::y);
        a0.push_back(x);
        a1.push_back(y);
        d.push_back(Element());
        if (n_max < 1) return;
        d.push_back(Scalar::q_power(-2) * shuffle_mul(y, x) - shuffle_mul(x, y));
        Scalar qq = Scalar::q_power(1) + Scalar::q_power(-1);
        for (int n = 1; n <= n_max; ++n) {
            if (n >= 2) d.push_back(Scalar::q_power(-2) * shuffle_mul(a1[n - 1], x) - shuffle_mul(x, a1[n - 1]));
            a0.push_back(shuffle_commutator(d[1], a0[n - 1]) / qq);
            a1.push_back(shuffle_commutator(a1[n - 1], d[1]) / qq);
        }
    }
};

inline void check_damiani_index(DamianiKind kind, int n) {
    if (kind == DamianiKind::delta) {
        if (n < 1) throw std::invalid_argument("damiani: E_{nd} needs n >= 1");
    } else if (n < 0) {
        throw std::invalid_argument("damiani: negative index");
    }
}

}  // namespace detail

inline Element damiani(DamianiKind kind, int n) {
    detail::check_damiani_index(kind, n);
    detail::DamianiTower tower(n);
    switch (kind) {
        case DamianiKind::alpha0: return tower.a0[static_cast<size_t>(n)];
        case DamianiKind::alpha1: return tower.a1[static_cast<size_t>(n)];
        case DamianiKind::delta: return tower.d[static_cast<size_t>(n)];
    }
    throw std::invalid_argument("damiani: unknown kind");
}

// Closed forms: E_{nd+a0} -> q^-2n (q-q^-1)^2n xC_n,
//               E_{nd+a1} -> q^-2n (q-q^-1)^2n C_n y,
//               E_{nd}    -> -q^-2n (q-q^-1)^{2n-1} C_n   (free products).
inline Element damiani_closed_form(DamianiKind kind, int n) {
    detail::check_damiani_index(kind, n);
    Scalar p = q_minus_qinv();
    switch (kind) {
        case DamianiKind::alpha0:
            return (Scalar::q_power(-2 * n) * p.pow(2 * n)) * x_catalan(n);
        case DamianiKind::alpha1:
            return (Scalar::q_power(-2 * n) * p.pow(2 * n)) * catalan_y(n);
        case DamianiKind::delta:
            return (-Scalar::q_power(-2 * n) * p.pow(2 * n - 1)) * catalan_element(n);
    }
    throw std::invalid_argument("damiani_closed_form: unknown kind");
}

// E^Beck_{nd}: the t^n coefficient of (q-q^-1)^{-1} ln of the generating
// function 1 - (q-q^-1) sum_k E_{kd} t^k, with products in the shuffle algebra.
inline Element beck(int n) {
    if (n < 1) throw std::invalid_argument("beck: index must be >= 1");
    detail::DamianiTower tower(n);
    Scalar p = q_minus_qinv();
    Series a(n);
    for (int k = 1; k <= n; ++k) a.set_coeff(k, -p * tower.d[static_cast<size_t>(k)]);
    Series lg = series_ln1p(a);
    return lg.coeff(n) * p.inverse();
}

// E^Beck_{nd} -> ([2n]_q / n) q^-2n (q-q^-1)^{2n-1} x C_{n-1} y (free product).
inline Element beck_closed_form(int n) {
    if (n < 1) throw std::invalid_argument("beck_closed_form: index must be >= 1");
    Scalar c = q_int(2 * n) / Scalar(n) * Scalar::q_power(-2 * n) * q_minus_qinv().pow(2 * n - 1);
    return c * x_catalan_y(n - 1);
}

// ---------------------------------------------------------------------------
// The ideal J and graded dimensions
// ---------------------------------------------------------------------------

struct GradedSubspaceBasis {
    int degree = 0;
    std::vector<Element> vectors;  // n-homogeneous, independent at the certifying q0
    Rational q0;
};

namespace detail {

// Column index of a degree-n word: its bit pattern.
inline SparseRow specialize_row(const Element& e, const Rational& q0) {
    SparseRow row;
    for (const auto& [w, c] : e.terms()) {
        Rational v = specialize(c, q0);
        if (v != 0) row[static_cast<int>(w.bits())] = v;
    }
    return row;
}

inline std::vector<Word> all_words(int len) {
    std::vector<Word> out;
    out.reserve(size_t(1) << len);
    for (uint64_t b = 0; b < (uint64_t(1) << len); ++b) out.push_back(Word::from_bits(b, static_cast<uint32_t>(len)));
    return out;
}

}  // namespace detail

// Spanning elements w1 J^{+-} w2 of the degree-n slice of the ideal J.
inline std::vector<Element> ideal_degree_span(int n) {
    if (n < 4) throw std::invalid_argument("ideal_degree_span: degree must be >= 4");
    std::vector<Element> span;
    Element jp = j_plus(), jm = j_minus();
    for (int a = 0; a + 4 <= n; ++a) {
        int b = n - 4 - a;
        for (const Word& w1 : detail::all_words(a)) {
            Element left = Element::of_word(w1);
            for (const Word& w2 : detail::all_words(b)) {
                Element right = Element::of_word(w2);
                span.push_back(free_mul(left, free_mul(jp, right)));
                span.push_back(free_mul(left, free_mul(jm, right)));
            }
        }
    }
    return span;
}

// Maximal independent subset of the spanning set, certified by exact rank at
// the specialization q0.
inline GradedSubspaceBasis ideal_degree_basis(int n, const Rational& q0 = Rational(2)) {
    std::vector<Element> span = ideal_degree_span(n);
    std::vector<SparseRow> rows;
    rows.reserve(span.size());
    for (const Element& e : span) rows.push_back(detail::specialize_row(e, q0));
    RankResult rk = sparse_rank(rows);
    GradedSubspaceBasis basis;
    basis.degree = n;
    basis.q0 = q0;
    for (int i : rk.independent_rows) basis.vectors.push_back(span[static_cast<size_t>(i)]);
    return basis;
}

inline int dim_ideal(int n, const Rational& q0 = Rational(2)) {
    if (n < 4) return 0;
    return static_cast<int>(ideal_degree_basis(n, q0).vectors.size());
}

// dim U_n = dim V_n - dim J_n = 2^n - dim J_n.
inline Int dim_U(int n, const Rational& q0 = Rational(2)) {
    if (n < 0) throw std::invalid_argument("dim_U: negative degree");
    return int_pow(2, static_cast<unsigned>(n)) - dim_ideal(n, q0);
}

// ---------------------------------------------------------------------------
// PBW monomials and the truncated independence check
// ---------------------------------------------------------------------------

enum class PBWBasis { damiani, beck, xcy, alternating };

inline PBWBasis parse_pbw_basis(const std::string& s) {
    if (s == "damiani") return PBWBasis::damiani;
    if (s == "beck") return PBWBasis::beck;
    if (s == "xcy") return PBWBasis::xcy;
    if (s == "alternating") return PBWBasis::alternating;
    throw std::invalid_argument("unknown PBW basis tag: '" + s + "'");
}

inline std::string pbw_basis_name(PBWBasis b) {
    switch (b) {
        case PBWBasis::damiani: return "damiani";
        case PBWBasis::beck: return "beck";
        case PBWBasis::xcy: return "xcy";
        case PBWBasis::alternating: return "alternating";
    }
    return "?";
}

// A generator is identified by its family slot (0 < 1 < 2 in the declared
// linear order of the basis) and an index within the family.
struct PBWGenerator {
    int family = 0;
    int index = 0;
    bool operator==(const PBWGenerator&) const = default;
};

namespace detail {

inline int pbw_generator_degree(PBWBasis basis, const PBWGenerator& g) {
    switch (basis) {
        case PBWBasis::damiani:
        case PBWBasis::beck:
            // E_{nd+a0} / E^(Beck)_{nd} / E_{nd+a1}
            return g.family == 1 ? 2 * g.index : 2 * g.index + 1;
        case PBWBasis::xcy:
            // xC_n / xC_n y / C_n y
            return g.family == 1 ? 2 * g.index + 2 : 2 * g.index + 1;
        case PBWBasis::alternating:
            // W_{-i} / Gtilde_{j+1} / W_{k+1}
            return g.family == 1 ? 2 * g.index + 2 : 2 * g.index + 1;
    }
    return 0;
}

// Rank inside the declared linear order. The alpha1-style families at slot 2
// of the damiani/beck/xcy orders are listed with decreasing index; within the
// alternating families any compliant order works, so index-increasing is used.
inline std::pair<int, int> pbw_order_key(PBWBasis basis, const PBWGenerator& g) {
    bool slot2_descending = basis != PBWBasis::alternating;
    int second = (g.family == 2 && slot2_descending) ? -g.index : g.index;
    return {g.family, second};
}

inline std::string pbw_generator_name(PBWBasis basis, const PBWGenerator& g) {
    std::ostringstream os;
    auto damiani_style = [&](const std::string& delta_tag) {
        if (g.family == 0) {
            if (g.index == 0) return std::string("A");
            os << "E_{" << (g.index == 1 ? "" : std::to_string(g.index)) << "d+a0}";
        } else if (g.family == 1) {
            os << delta_tag << "_{" << (g.index == 1 ? "" : std::to_string(g.index)) << "d}";
        } else {
            if (g.index == 0) return std::string("B");
            os << "E_{" << (g.index == 1 ? "" : std::to_string(g.index)) << "d+a1}";
        }
        return os.str();
    };
    switch (basis) {
        case PBWBasis::damiani: return damiani_style("E");
        case PBWBasis::beck: return damiani_style("EB");
        case PBWBasis::xcy:
            if (g.family == 0) return g.index == 0 ? "x" : "xC" + std::to_string(g.index);
            if (g.family == 1) return g.index == 0 ? "xy" : "xC" + std::to_string(g.index) + "y";
            return g.index == 0 ? "y" : "C" + std::to_string(g.index) + "y";
        case PBWBasis::alternating:
            if (g.family == 0) return "W" + std::to_string(-g.index);
            if (g.family == 1) return "G~" + std::to_string(g.index + 1);
            return "W" + std::to_string(g.index + 1);
    }
    return "?";
}

inline Element pbw_generator_element(PBWBasis basis, const PBWGenerator& g) {
    switch (basis) {
        case PBWBasis::damiani:
            if (g.family == 0) return damiani_closed_form(DamianiKind::alpha0, g.index);
            if (g.family == 1) return damiani_closed_form(DamianiKind::delta, g.index);
            return damiani_closed_form(DamianiKind::alpha1, g.index);
        case PBWBasis::beck:
            if (g.family == 0) return damiani_closed_form(DamianiKind::alpha0, g.index);
            if (g.family == 1) return beck_closed_form(g.index);
            return damiani_closed_form(DamianiKind::alpha1, g.index);
        case PBWBasis::xcy:
            if (g.family == 0) return x_catalan(g.index);
            if (g.family == 1) return x_catalan_y(g.index);
            return catalan_y(g.index);
        case PBWBasis::alternating:
            if (g.family == 0) return alternating_word(AltFamily::Wminus, g.index);
            if (g.family == 1) return alternating_word(AltFamily::Gtilde, g.index + 1);
            return alternating_word(AltFamily::Wplus, g.index + 1);
    }
    throw std::invalid_argument("pbw_generator_element: unknown basis");
}

// Every generator of the basis with degree <= n, sorted by the declared order.
inline std::vector<PBWGenerator> pbw_generators_up_to(PBWBasis basis, int n) {
    std::vector<PBWGenerator> gens;
    for (int family = 0; family < 3; ++family) {
        int index = (family == 1 && basis != PBWBasis::xcy && basis != PBWBasis::alternating) ? 1 : 0;
        for (;; ++index) {
            PBWGenerator g{family, index};
            if (pbw_generator_degree(basis, g) > n) break;
            gens.push_back(g);
        }
    }
    std::sort(gens.begin(), gens.end(), [&](const PBWGenerator& a, const PBWGenerator& b) {
        return pbw_order_key(basis, a) < pbw_order_key(basis, b);
    });
    return gens;
}

}  // namespace detail

// A weakly increasing product of generators under the declared order.
struct PBWMonomial {
    std::vector<PBWGenerator> factors;
    int degree = 0;

    std::string name(PBWBasis basis) const {
        if (factors.empty()) return "1";
        std::string s;
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) s += "·";
            s += detail::pbw_generator_name(basis, factors[i]);
        }
        return s;
    }

    Element evaluate(PBWBasis basis) const {
        Element r = Element::one();
        for (const PBWGenerator& g : factors) r = shuffle_mul(r, detail::pbw_generator_element(basis, g));
        return r;
    }
};

// All weakly increasing factor sequences of total degree n.
inline std::vector<PBWMonomial> pbw_monomials(PBWBasis basis, int n) {
    if (n < 0) throw std::invalid_argument("pbw_monomials: negative degree");
    std::vector<PBWGenerator> gens = detail::pbw_generators_up_to(basis, n);
    std::vector<PBWMonomial> out;
    std::vector<PBWGenerator> current;
    auto rec = [&](auto&& self, size_t from, int remaining) -> void {
        if (remaining == 0) {
            out.push_back({current, n});
            return;
        }
        for (size_t i = from; i < gens.size(); ++i) {
            int d = detail::pbw_generator_degree(basis, gens[i]);
            if (d > remaining) continue;
            current.push_back(gens[i]);
            self(self, i, remaining - d);
            current.pop_back();
        }
    };
    rec(rec, 0, n);
    return out;
}

struct PBWCheckReport {
    bool pass = false;
    int max_degree = 0;
    Rational q0_used;
    std::vector<Int> expected_dims;  // dim U_n for n = 0..N
    std::vector<size_t> counts;      // monomials per degree
    int failed_degree = -1;
    std::string message;
    std::optional<Element> witness;  // vanishing combination on rank failure
};

// For each n <= N: evaluate the degree-n monomials as ordered shuffle
// products, specialize at q0, and certify exact-rank independence together
// with count == dim U_n. Full rank at one specialization certifies generic
// independence. Vanishing denominators at q0 fall back to the fixed
// candidate list 2, 3, 5/2 before giving up.
inline PBWCheckReport pbw_independence_check(PBWBasis basis, int N, const Rational& q0 = Rational(2)) {
    if (N < 0) throw std::invalid_argument("pbw_independence_check: negative degree");
    std::vector<Rational> candidates{q0, Rational(2), Rational(3), Rational(5, 2)};
    std::string last_error;
    for (size_t ci = 0; ci < candidates.size(); ++ci) {
        const Rational& q = candidates[ci];
        if (q == 0 || q == 1 || q == -1) continue;
        bool duplicate = false;
        for (size_t cj = 0; cj < ci; ++cj) duplicate = duplicate || candidates[cj] == q;
        if (duplicate) continue;
        try {
            PBWCheckReport report;
            report.max_degree = N;
            report.q0_used = q;
            report.pass = true;
            for (int n = 0; n <= N; ++n) {
                std::vector<PBWMonomial> monomials = pbw_monomials(basis, n);
                report.counts.push_back(monomials.size());
                Int dim = dim_U(n, q);
                report.expected_dims.push_back(dim);
                std::vector<Element> values;
                std::vector<SparseRow> rows;
                values.reserve(monomials.size());
                for (const PBWMonomial& m : monomials) {
                    values.push_back(m.evaluate(basis));
                    rows.push_back(detail::specialize_row(values.back(), q));
                }
                if (Int(monomials.size()) != dim) {
                    report.pass = false;
                    report.failed_degree = n;
                    report.message = "degree " + std::to_string(n) + ": " +
                                     std::to_string(monomials.size()) + " monomials but dim U = " + dim.str();
                    report.witness = Scalar(Int(monomials.size()) - dim) * Element::one();
                    return report;
                }
                RankResult rk = sparse_rank(rows, /*want_kernel=*/true);
                if (rk.rank != static_cast<int>(monomials.size())) {
                    report.pass = false;
                    report.failed_degree = n;
                    std::ostringstream msg;
                    msg << "degree " << n << ": rank " << rk.rank << " < " << monomials.size()
                        << ", dependent monomial " << monomials[static_cast<size_t>(rk.first_dependent_row)].name(basis);
                    report.message = msg.str();
                    Element combo;
                    if (rk.kernel) {
                        for (size_t i = 0; i < values.size(); ++i)
                            if ((*rk.kernel)[i] != 0) combo += Scalar((*rk.kernel)[i]) * values[i];
                    }
                    report.witness = combo.is_zero() ? values[static_cast<size_t>(rk.first_dependent_row)] : combo;
                    return report;
                }
            }
            return report;
        } catch (const std::domain_error& e) {
            last_error = e.what();  // vanishing denominator: try next q0
        }
    }
    throw std::domain_error("pbw_independence_check: no usable specialization point (" + last_error + ")");
}

// Per-degree dimension table used by the CLI and the consistency checks.
struct DimsRow {
    int n = 0;
    Int dim_v;
    int dim_j = 0;
    Int dim_u;
    size_t damiani_count = 0, beck_count = 0, xcy_count = 0, alternating_count = 0;
    bool consistent = false;
};

inline std::vector<DimsRow> dims_table(int N, const Rational& q0 = Rational(2)) {
    std::vector<DimsRow> rows;
    for (int n = 0; n <= N; ++n) {
        DimsRow r;
        r.n = n;
        r.dim_v = int_pow(2, static_cast<unsigned>(n));
        r.dim_j = dim_ideal(n, q0);
        r.dim_u = r.dim_v - r.dim_j;
        r.damiani_count = pbw_monomials(PBWBasis::damiani, n).size();
        r.beck_count = pbw_monomials(PBWBasis::beck, n).size();
        r.xcy_count = pbw_monomials(PBWBasis::xcy, n).size();
        r.alternating_count = pbw_monomials(PBWBasis::alternating, n).size();
        r.consistent = Int(r.damiani_count) == r.dim_u && Int(r.beck_count) == r.dim_u &&
                       Int(r.xcy_count) == r.dim_u && Int(r.alternating_count) == r.dim_u;
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace qshuffle

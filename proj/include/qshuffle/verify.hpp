#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "catalan.hpp"
#include "json_io.hpp"
#include "parse.hpp"
#include "pbw.hpp"
#include "series.hpp"

namespace qshuffle {

// ---------------------------------------------------------------------------
// Report types
// ---------------------------------------------------------------------------

struct IdentityCheck {
    std::string id;
    int bound = 0;  // degree / index-sum bound the check ran at
    bool pass = false;
    std::optional<Element> witness;  // nonzero difference on failure
    std::string detail;
    double elapsed_ms = 0.0;
};

struct SuiteParams {
    int degree = 5;
    Rational q0 = Rational(2);
    std::map<std::string, int> bound_overrides;
    std::vector<std::string> only;  // empty = run everything
};

struct VerificationReport {
    SuiteParams params;
    std::vector<IdentityCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    int passed() const {
        int n = 0;
        for (const auto& c : checks) n += c.pass ? 1 : 0;
        return n;
    }

    json to_json(bool with_timing = true) const {
        json jchecks = json::array();
        for (const auto& c : checks) {
            json jc{{"id", c.id},
                    {"status", c.pass ? "pass" : "fail"},
                    {"bound", c.bound},
                    {"witness", c.witness ? element_to_json(*c.witness) : json(nullptr)}};
            if (!c.detail.empty()) jc["detail"] = c.detail;
            if (with_timing) jc["ms"] = c.elapsed_ms;
            jchecks.push_back(std::move(jc));
        }
        return json{{"params", {{"N", params.degree}, {"q0", rational_str(params.q0)}}},
                    {"checks", jchecks}};
    }
};

// ---------------------------------------------------------------------------
// Check context: caches the named elements one suite run keeps reusing.
// The Catalan provider is injectable so tests can corrupt a coefficient and
// watch the dependent checks fail.
// ---------------------------------------------------------------------------

class CheckContext {
public:
    using CatalanProvider = std::function<Element(int)>;

    CheckContext(int degree, Rational q0, CatalanProvider provider = nullptr)
        : degree_(degree),
          q0_(std::move(q0)),
          provider_(provider ? std::move(provider) : [](int n) { return catalan_element(n); }) {
        x_ = Element::of_letter(Letter::x);
        y_ = Element::of_letter(Letter::y);
    }

    int degree() const { return degree_; }
    const Rational& q0() const { return q0_; }
    const Element& x() const { return x_; }
    const Element& y() const { return y_; }

    const Element& C(int n) {
        auto it = c_.find(n);
        if (it == c_.end()) it = c_.emplace(n, provider_(n)).first;
        return it->second;
    }
    Element xC(int n) { return free_mul(x_, C(n)); }
    Element Cy(int n) { return free_mul(C(n), y_); }
    Element xCy(int n) { return free_mul(x_, free_mul(C(n), y_)); }

    const Element& Gt(int n) {
        auto it = gt_.find(n);
        if (it == gt_.end()) it = gt_.emplace(n, gtilde(n)).first;
        return it->second;
    }

    // Damiani tower built from the defining recursion (independent of the
    // Catalan provider by construction).
    const Element& E_a0(int n) { ensure_damiani(n); return a0_[static_cast<size_t>(n)]; }
    const Element& E_a1(int n) { ensure_damiani(n); return a1_[static_cast<size_t>(n)]; }
    const Element& E_d(int n) { ensure_damiani(n); return d_[static_cast<size_t>(n)]; }

    // Beck root vectors from the logarithm of the Damiani generating function.
    const Element& beck_ln(int n) { ensure_beck(n); return beck_[static_cast<size_t>(n)]; }

    Element beck_closed(int n) {
        Scalar c = q_int(2 * n) / Scalar(n) * Scalar::q_power(-2 * n) * q_minus_qinv().pow(2 * n - 1);
        return c * xCy(n - 1);
    }

    Element damiani_closed(DamianiKind kind, int n) {
        Scalar p = q_minus_qinv();
        switch (kind) {
            case DamianiKind::alpha0: return (Scalar::q_power(-2 * n) * p.pow(2 * n)) * xC(n);
            case DamianiKind::alpha1: return (Scalar::q_power(-2 * n) * p.pow(2 * n)) * Cy(n);
            case DamianiKind::delta: return (-Scalar::q_power(-2 * n) * p.pow(2 * n - 1)) * C(n);
        }
        throw std::invalid_argument("damiani_closed: unknown kind");
    }

    // Shuffle product memo for the commutation suites, keyed by names.
    const Element& star(const std::string& ka, const Element& a, const std::string& kb, const Element& b) {
        auto key = std::make_pair(ka, kb);
        auto it = star_.find(key);
        if (it == star_.end()) it = star_.emplace(key, shuffle_mul(a, b)).first;
        return it->second;
    }
    Element comm(const std::string& ka, const Element& a, const std::string& kb, const Element& b) {
        return star(ka, a, kb, b) - star(kb, b, ka, a);
    }

private:
    void ensure_damiani(int n) {
        if (a0_.empty()) {
            a0_.push_back(x_);
            a1_.push_back(y_);
            d_.push_back(Element());
        }
        if (n >= 1 && d_.size() < 2)
            d_.push_back(Scalar::q_power(-2) * shuffle_mul(y_, x_) - shuffle_mul(x_, y_));
        Scalar qq = Scalar::q_power(1) + Scalar::q_power(-1);
        while (static_cast<int>(a0_.size()) <= n) {
            size_t m = a0_.size();  // next index to fill
            if (m >= 2) d_.push_back(Scalar::q_power(-2) * shuffle_mul(a1_[m - 1], x_) - shuffle_mul(x_, a1_[m - 1]));
            a0_.push_back(shuffle_commutator(d_[1], a0_[m - 1]) / qq);
            a1_.push_back(shuffle_commutator(a1_[m - 1], d_[1]) / qq);
        }
        while (static_cast<int>(d_.size()) <= n) {
            size_t m = d_.size();
            d_.push_back(Scalar::q_power(-2) * shuffle_mul(a1_[m - 1], x_) - shuffle_mul(x_, a1_[m - 1]));
        }
    }

    void ensure_beck(int n) {
        if (static_cast<int>(beck_.size()) > n) return;
        ensure_damiani(n);
        Scalar p = q_minus_qinv();
        Series a(n);
        for (int k = 1; k <= n; ++k) a.set_coeff(k, -p * d_[static_cast<size_t>(k)]);
        Series lg = series_ln1p(a);
        beck_.assign(1, Element());  // index 0 unused
        Scalar pinv = p.inverse();
        for (int k = 1; k <= n; ++k) beck_.push_back(lg.coeff(k) * pinv);
    }

    int degree_;
    Rational q0_;
    CatalanProvider provider_;
    Element x_, y_;
    std::map<int, Element> c_, gt_;
    std::vector<Element> a0_, a1_, d_, beck_;
    std::map<std::pair<std::string, std::string>, Element> star_;
};

// ---------------------------------------------------------------------------
// Individual checks
// ---------------------------------------------------------------------------

struct CheckOutcome {
    bool pass = true;
    std::optional<Element> witness;
    std::string detail;

    void fail(Element diff, std::string where) {
        if (!pass) return;  // keep the first witness
        pass = false;
        witness = std::move(diff);
        detail = std::move(where);
    }
    void require_zero(const Element& diff, const std::string& where) {
        if (!diff.is_zero()) fail(diff, where);
    }
    void require_equal(const Element& lhs, const Element& rhs, const std::string& where) {
        if (!(lhs == rhs)) fail(lhs - rhs, where);
    }
};

namespace checks {

// q-Serre relations in the shuffle algebra, (x,y) and (y,x) versions.
inline CheckOutcome q_serre(CheckContext& ctx, bool x_first) {
    const Element& a = x_first ? ctx.x() : ctx.y();
    const Element& b = x_first ? ctx.y() : ctx.x();
    auto prod = [](std::initializer_list<const Element*> fs) {
        Element r = Element::one();
        for (const Element* f : fs) r = shuffle_mul(r, *f);
        return r;
    };
    Element v = prod({&a, &a, &a, &b}) - q_int(3) * prod({&a, &a, &b, &a}) +
                q_int(3) * prod({&a, &b, &a, &a}) - prod({&b, &a, &a, &a});
    CheckOutcome out;
    out.require_zero(v, "q-Serre");
    return out;
}

// Damiani recursion values match their Catalan closed forms.
inline CheckOutcome damiani_closed_forms(CheckContext& ctx, int bound) {
    CheckOutcome out;
    for (int n = 0; n <= bound && out.pass; ++n) {
        out.require_equal(ctx.E_a0(n), ctx.damiani_closed(DamianiKind::alpha0, n), "E_{nd+a0}, n=" + std::to_string(n));
        out.require_equal(ctx.E_a1(n), ctx.damiani_closed(DamianiKind::alpha1, n), "E_{nd+a1}, n=" + std::to_string(n));
        if (n >= 1)
            out.require_equal(ctx.E_d(n), ctx.damiani_closed(DamianiKind::delta, n), "E_{nd}, n=" + std::to_string(n));
    }
    return out;
}

// Main theorem: the Beck root vectors in closed form.
inline CheckOutcome beck_closed_forms(CheckContext& ctx, int bound) {
    CheckOutcome out;
    for (int n = 1; n <= bound && out.pass; ++n)
        out.require_equal(ctx.beck_ln(n), ctx.beck_closed(n), "E^Beck_{nd}, n=" + std::to_string(n));
    return out;
}

inline CheckOutcome delta_commutation(CheckContext& ctx, int bound) {
    CheckOutcome out;
    for (int i = 1; i < bound && out.pass; ++i)
        for (int j = i + 1; i + j <= bound && out.pass; ++j) {
            std::string ti = "Ed" + std::to_string(i), tj = "Ed" + std::to_string(j);
            out.require_zero(ctx.comm(ti, ctx.E_d(i), tj, ctx.E_d(j)),
                             "[E_{" + std::to_string(i) + "d}, E_{" + std::to_string(j) + "d}]");
        }
    return out;
}

// [E_{id+a0}, E_{jd+a1}]_q = -q E_{(i+j+1)d}
inline CheckOutcome mixed_q_bracket(CheckContext& ctx, int bound) {
    CheckOutcome out;
    for (int i = 0; i <= bound && out.pass; ++i)
        for (int j = 0; i + j <= bound && out.pass; ++j) {
            Element lhs = shuffle_q_commutator(ctx.E_a0(i), ctx.E_a1(j));
            Element rhs = -Scalar::q_power(1) * ctx.E_d(i + j + 1);
            out.require_equal(lhs, rhs, "i=" + std::to_string(i) + ", j=" + std::to_string(j));
        }
    return out;
}

inline CheckOutcome beck_commutation(CheckContext& ctx, int bound) {
    CheckOutcome out;
    for (int i = 1; i < bound && out.pass; ++i)
        for (int j = i + 1; i + j <= bound && out.pass; ++j) {
            std::string ti = "EB" + std::to_string(i), tj = "EB" + std::to_string(j);
            out.require_zero(ctx.comm(ti, ctx.beck_ln(i), tj, ctx.beck_ln(j)),
                             "[EB_{" + std::to_string(i) + "d}, EB_{" + std::to_string(j) + "d}]");
        }
    return out;
}

// [E_{ld+a0}, E^Beck_{kd}] = ([2k]_q/k) E_{(k+l)d+a0} and its a1 companion.
inline CheckOutcome beck_bracket_raising(CheckContext& ctx, int bound, bool alpha0_side) {
    CheckOutcome out;
    for (int k = 1; k <= bound && out.pass; ++k)
        for (int l = 0; k + l <= bound && out.pass; ++l) {
            Scalar c = q_int(2 * k) / Scalar(k);
            Element lhs = alpha0_side ? shuffle_commutator(ctx.E_a0(l), ctx.beck_ln(k))
                                      : shuffle_commutator(ctx.beck_ln(k), ctx.E_a1(l));
            Element rhs = alpha0_side ? c * ctx.E_a0(k + l) : c * ctx.E_a1(k + l);
            out.require_equal(lhs, rhs, "k=" + std::to_string(k) + ", l=" + std::to_string(l));
        }
    return out;
}

namespace detail_orth {

inline CheckOutcome orthogonal_to_ideal(const Element& v, int total_split, const std::string& tag) {
    CheckOutcome out;
    Element jp = j_plus(), jm = j_minus();
    for (int a = 0; a <= total_split && out.pass; ++a) {
        int b = total_split - a;
        for (const Word& w1 : qshuffle::detail::all_words(a)) {
            for (const Word& w2 : qshuffle::detail::all_words(b)) {
                for (bool plus : {true, false}) {
                    Element mid = free_mul(Element::of_word(w1),
                                           free_mul(plus ? jp : jm, Element::of_word(w2)));
                    Scalar ip = bilinear_form(v, mid);
                    if (!ip.is_zero()) {
                        out.fail(Scalar(ip) * Element::one(),
                                 tag + ": <v, " + w1.str() + (plus ? " J+ " : " J- ") + w2.str() + "> != 0");
                        return out;
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace detail_orth

// xC_k y lands in the subalgebra U = J-perp.
inline CheckOutcome xcy_in_U(CheckContext& ctx, int bound) {
    CheckOutcome out;
    for (int k = 1; k <= bound && out.pass; ++k) {
        CheckOutcome sub = detail_orth::orthogonal_to_ideal(ctx.xCy(k), 2 * k - 2, "k=" + std::to_string(k));
        if (!sub.pass) out = sub;
    }
    return out;
}

// Every alternating word of length <= bound lands in U.
inline CheckOutcome alternating_in_U(CheckContext& ctx, int bound) {
    (void)ctx;
    CheckOutcome out;
    for (int len = 4; len <= bound && out.pass; ++len) {
        for (Letter start : {Letter::x, Letter::y}) {
            Word w;
            Letter l = start;
            for (int i = 0; i < len; ++i) {
                w = w.append(l);
                l = l == Letter::x ? Letter::y : Letter::x;
            }
            CheckOutcome sub =
                detail_orth::orthogonal_to_ideal(Element::of_word(w), len - 4, "word " + w.str());
            if (!sub.pass) out = sub;
        }
    }
    return out;
}

// xC_{k+1} = (x*(xC_k y) - (xC_k y)*x)/(q-q^-1) and the C_{k+1}y companion.
inline CheckOutcome xcy_letter_brackets(CheckContext& ctx, int bound) {
    CheckOutcome out;
    Scalar p = q_minus_qinv();
    for (int k = 0; k <= bound && out.pass; ++k) {
        Element m = ctx.xCy(k);
        out.require_equal(ctx.xC(k + 1), shuffle_commutator(ctx.x(), m) / p, "xC_{k+1}, k=" + std::to_string(k));
        out.require_equal(ctx.Cy(k + 1), shuffle_commutator(m, ctx.y()) / p, "C_{k+1}y, k=" + std::to_string(k));
    }
    return out;
}

inline CheckOutcome catalan_commutation(CheckContext& ctx, int bound) {
    CheckOutcome out;
    for (int i = 1; i < bound && out.pass; ++i)
        for (int j = i + 1; i + j <= bound && out.pass; ++j) {
            std::string ti = "C" + std::to_string(i), tj = "C" + std::to_string(j);
            out.require_zero(ctx.comm(ti, ctx.C(i), tj, ctx.C(j)),
                             "[C_" + std::to_string(i) + ", C_" + std::to_string(j) + "]");
        }
    return out;
}

// q^-1 C_{i+j+1} = (q (xC_i)*(C_j y) - q^-1 (C_j y)*(xC_i)) / (q - q^-1)
inline CheckOutcome catalan_q_bracket(CheckContext& ctx, int bound) {
    CheckOutcome out;
    Scalar p = q_minus_qinv();
    for (int i = 0; i <= bound && out.pass; ++i)
        for (int j = 0; i + j <= bound && out.pass; ++j) {
            Element lhs = Scalar::q_power(-1) * ctx.C(i + j + 1);
            Element rhs = shuffle_q_commutator(ctx.xC(i), ctx.Cy(j)) / p;
            out.require_equal(lhs, rhs, "i=" + std::to_string(i) + ", j=" + std::to_string(j));
        }
    return out;
}

// exp( sum ([2k]_q/k) xC_{k-1}y t^k ) = 1 + sum C_k t^k
inline CheckOutcome exp_catalan_series(CheckContext& ctx, int bound) {
    CheckOutcome out;
    Series arg(bound);
    for (int k = 1; k <= bound; ++k) arg.set_coeff(k, (q_int(2 * k) / Scalar(k)) * ctx.xCy(k - 1));
    Series lhs = series_exp(arg);
    for (int k = 0; k <= bound && out.pass; ++k) {
        Element rhs = k == 0 ? Element::one() : ctx.C(k);
        out.require_equal(lhs.coeff(k), rhs, "coefficient of t^" + std::to_string(k));
    }
    return out;
}

// The inverse direction: t^n coefficient of ln(1 + sum C_k t^k) recovers
// ([2n]_q/n) xC_{n-1}y.
inline CheckOutcome ln_catalan_series(CheckContext& ctx, int bound) {
    CheckOutcome out;
    Series arg(bound);
    for (int k = 1; k <= bound; ++k) arg.set_coeff(k, ctx.C(k));
    Series lhs = series_ln1p(arg);
    for (int n = 1; n <= bound && out.pass; ++n)
        out.require_equal(lhs.coeff(n), (q_int(2 * n) / Scalar(n)) * ctx.xCy(n - 1),
                          "coefficient of t^" + std::to_string(n));
    return out;
}

inline CheckOutcome xcy_commutation(CheckContext& ctx, int bound) {
    CheckOutcome out;
    for (int i = 0; i < bound && out.pass; ++i)
        for (int j = i + 1; i + j <= bound && out.pass; ++j) {
            std::string ti = "xC" + std::to_string(i) + "y", tj = "xC" + std::to_string(j) + "y";
            out.require_zero(ctx.comm(ti, ctx.xCy(i), tj, ctx.xCy(j)),
                             "[xC_" + std::to_string(i) + "y, xC_" + std::to_string(j) + "y]");
        }
    return out;
}

// xC_{k+l+1} = ((xC_l)*(xC_k y) - (xC_k y)*(xC_l)) / (q-q^-1), and companion.
inline CheckOutcome xcy_bracket_raising(CheckContext& ctx, int bound, bool x_side) {
    CheckOutcome out;
    Scalar p = q_minus_qinv();
    for (int k = 0; k <= bound && out.pass; ++k)
        for (int l = 0; k + l <= bound && out.pass; ++l) {
            Element m = ctx.xCy(k);
            Element lhs = x_side ? ctx.xC(k + l + 1) : ctx.Cy(k + l + 1);
            Element rhs = x_side ? shuffle_commutator(ctx.xC(l), m) / p
                                 : shuffle_commutator(m, ctx.Cy(l)) / p;
            out.require_equal(lhs, rhs, "k=" + std::to_string(k) + ", l=" + std::to_string(l));
        }
    return out;
}

inline CheckOutcome gtilde_commutation(CheckContext& ctx, int bound) {
    CheckOutcome out;
    for (int i = 1; i < bound && out.pass; ++i)
        for (int j = i + 1; i + j <= bound && out.pass; ++j) {
            std::string ti = "G~" + std::to_string(i), tj = "G~" + std::to_string(j);
            out.require_zero(ctx.comm(ti, ctx.Gt(i), tj, ctx.Gt(j)),
                             "[G~_" + std::to_string(i) + ", G~_" + std::to_string(j) + "]");
        }
    return out;
}

// Gtilde(qt) * C(-t) * Gtilde(q^-1 t) = 1
inline CheckOutcome ggc_identity(CheckContext& ctx, int bound) {
    CheckOutcome out;
    Series gt(bound), c(bound);
    gt.set_coeff(0, Element::one());
    c.set_coeff(0, Element::one());
    for (int k = 1; k <= bound; ++k) {
        gt.set_coeff(k, ctx.Gt(k));
        c.set_coeff(k, ctx.C(k));
    }
    Series prod = series_mul(series_mul(series_scale_t(gt, Scalar::q_power(1)),
                                        series_scale_t(c, Scalar(-1))),
                             series_scale_t(gt, Scalar::q_power(-1)));
    for (int k = 0; k <= bound && out.pass; ++k)
        out.require_equal(prod.coeff(k), k == 0 ? Element::one() : Element::zero(),
                          "coefficient of t^" + std::to_string(k));
    return out;
}

// 0 = sum_{i=0}^n (-1)^i [2n-i]_q C_i * Gtilde_{n-i}
inline CheckOutcome cg_alternating_sum(CheckContext& ctx, int bound) {
    CheckOutcome out;
    for (int n = 0; n <= bound && out.pass; ++n) {
        Element sum;
        for (int i = 0; i <= n; ++i) {
            Element term = shuffle_mul(ctx.C(i), ctx.Gt(n - i));
            term *= q_int(2 * n - i);
            if (i % 2 != 0) term = -term;
            sum += term;
        }
        out.require_zero(sum, "n=" + std::to_string(n));
    }
    return out;
}

inline CheckOutcome paired_recursions(CheckContext& ctx, int bound) {
    CheckOutcome out;
    for (int n = 1; n <= bound && out.pass; ++n) {
        out.require_equal(catalan_via_recursion(n), ctx.C(n), "C_" + std::to_string(n) + " via recursion");
        out.require_equal(gtilde_via_recursion(n), ctx.Gt(n), "G~_" + std::to_string(n) + " via recursion");
    }
    return out;
}

// exp( -sum ((-1)^k [k]_q / k) xC_{k-1}y t^k ) = 1 + sum Gtilde_k t^k
inline CheckOutcome exp_gtilde_series(CheckContext& ctx, int bound) {
    CheckOutcome out;
    Series arg(bound);
    for (int k = 1; k <= bound; ++k) {
        Element e = (q_int(k) / Scalar(k)) * ctx.xCy(k - 1);
        if (k % 2 == 0) e = -e;  // -(-1)^k
        arg.set_coeff(k, std::move(e));
    }
    Series lhs = series_exp(arg);
    for (int k = 0; k <= bound && out.pass; ++k)
        out.require_equal(lhs.coeff(k), k == 0 ? Element::one() : ctx.Gt(k),
                          "coefficient of t^" + std::to_string(k));
    return out;
}

}  // namespace checks

// ---------------------------------------------------------------------------
// Appendix examples, frozen exactly as printed.
// ---------------------------------------------------------------------------

namespace checks {

inline CheckOutcome appendix_a1(CheckContext& ctx) {
    CheckOutcome out;
    const char* expected[4] = {
        "xy",
        "[2]_q*xxyy",
        "[2]_q^2*xxyxyy + [3]_q*[2]_q^2*xxxyyy",
        ("[2]_q^3*xxyxyxyy + [3]_q*[2]_q^3*xxxyyxyy + [3]_q*[2]_q^3*xxyxxyyy"
         " + [3]_q^2*[2]_q^3*xxxyxyyy + [4]_q*[3]_q^2*[2]_q^2*xxxxyyyy"),
    };
    for (int n = 0; n <= 3 && out.pass; ++n)
        out.require_equal(ctx.xCy(n), parse_element(expected[n]), "xC_" + std::to_string(n) + "y");
    return out;
}

inline CheckOutcome appendix_a2(CheckContext& ctx) {
    CheckOutcome out;
    auto S = [&](const std::string& t) { return parse_scalar(t); };
    auto star = [&](std::initializer_list<Element> fs) {
        Element r = Element::one();
        for (const Element& f : fs) r = shuffle_mul(r, f);
        return r;
    };
    Element c1 = ctx.C(1), c2 = ctx.C(2), c3 = ctx.C(3), c4 = ctx.C(4);
    Element m0 = ctx.xCy(0), m1 = ctx.xCy(1), m2 = ctx.xCy(2), m3 = ctx.xCy(3);

    // xC_n y out of the Catalan elements
    out.require_equal(m0, c1 / S("[2]_q"), "xC_0y");
    out.require_equal(m1, (Scalar(2) * c2 - star({c1, c1})) / S("[4]_q"), "xC_1y");
    out.require_equal(m2, (Scalar(3) * c3 - Scalar(3) * star({c2, c1}) + star({c1, c1, c1})) / S("[6]_q"), "xC_2y");
    out.require_equal(m3,
                      (Scalar(4) * c4 - Scalar(4) * star({c3, c1}) - Scalar(2) * star({c2, c2}) +
                       Scalar(4) * star({c2, c1, c1}) - star({c1, c1, c1, c1})) /
                          S("[8]_q"),
                      "xC_3y");
    // and back
    out.require_equal(c1, S("[2]_q") * m0, "C_1");
    out.require_equal(c2, (S("[4]_q") * m1 + S("[2]_q^2") * star({m0, m0})) / Scalar(2), "C_2");
    out.require_equal(c3,
                      (S("2*[6]_q") * m2 + S("3*[2]_q*[4]_q") * star({m1, m0}) + S("[2]_q^3") * star({m0, m0, m0})) /
                          Scalar(6),
                      "C_3");
    out.require_equal(c4,
                      (S("6*[8]_q") * m3 + S("8*[6]_q*[2]_q") * star({m2, m0}) + S("3*[4]_q^2") * star({m1, m1}) +
                       S("6*[4]_q*[2]_q^2") * star({m1, m0, m0}) + S("[2]_q^4") * star({m0, m0, m0, m0})) /
                          Scalar(24),
                      "C_4");
    return out;
}

inline CheckOutcome appendix_a3(CheckContext& ctx) {
    CheckOutcome out;
    auto S = [&](const std::string& t) { return parse_scalar(t); };
    auto star = [&](std::initializer_list<Element> fs) {
        Element r = Element::one();
        for (const Element& f : fs) r = shuffle_mul(r, f);
        return r;
    };
    Element c1 = ctx.C(1), c2 = ctx.C(2), c3 = ctx.C(3), c4 = ctx.C(4);
    Element g1 = ctx.Gt(1), g2 = ctx.Gt(2), g3 = ctx.Gt(3), g4 = ctx.Gt(4);

    // Catalan elements out of the alternating ones
    out.require_equal(c1, S("[2]_q") * g1, "C_1");
    out.require_equal(c2, (S("[2]_q*[3]_q") * star({g1, g1}) - S("[4]_q") * g2) / S("[2]_q"), "C_2");
    out.require_equal(c3,
                      (S("[2]_q*[6]_q") * g3 - S("[4]_q^2 + [2]_q^2*[5]_q") * star({g2, g1}) +
                       S("[2]_q*[3]_q*[4]_q") * star({g1, g1, g1})) /
                          S("[2]_q*[3]_q"),
                      "C_3");
    out.require_equal(c4,
                      (S("-[2]_q*[3]_q*[8]_q") * g4 +
                       S("[2]_q^2*[3]_q*[7]_q + [2]_q*[5]_q*[6]_q") * star({g3, g1}) +
                       S("[3]_q*[4]_q*[6]_q") * star({g2, g2}) +
                       S("-[2]_q*[3]_q^2*[6]_q - [2]_q^2*[5]_q^2 - [4]_q^2*[5]_q") * star({g2, g1, g1}) +
                       S("[2]_q*[3]_q*[4]_q*[5]_q") * star({g1, g1, g1, g1})) /
                          S("[2]_q*[3]_q*[4]_q"),
                      "C_4 table");
    // and back
    out.require_equal(g1, c1 / S("[2]_q"), "G~_1");
    out.require_equal(g2, (S("[3]_q") * star({c1, c1}) - S("[2]_q^2") * c2) / S("[2]_q*[4]_q"), "G~_2");
    out.require_equal(g3,
                      (S("[2]_q*[3]_q*[4]_q") * c3 - S("[4]_q^2 + [2]_q^2*[5]_q") * star({c2, c1}) +
                       S("[3]_q*[5]_q") * star({c1, c1, c1})) /
                          S("[2]_q*[4]_q*[6]_q"),
                      "G~_3");
    out.require_equal(g4,
                      (S("-[2]_q*[4]_q^2*[6]_q") * c4 +
                       S("[2]_q*[3]_q*[4]_q*[7]_q + [4]_q*[5]_q*[6]_q") * star({c3, c1}) +
                       S("[2]_q^2*[6]_q^2") * star({c2, c2}) +
                       S("-[2]_q^2*[5]_q*[7]_q - [3]_q*[6]_q^2 - [4]_q^2*[7]_q") * star({c2, c1, c1}) +
                       S("[3]_q*[5]_q*[7]_q") * star({c1, c1, c1, c1})) /
                          S("[2]_q*[4]_q*[6]_q*[8]_q"),
                      "G~_4 table");
    return out;
}

inline CheckOutcome appendix_a4(CheckContext& ctx) {
    CheckOutcome out;
    auto S = [&](const std::string& t) { return parse_scalar(t); };
    auto star = [&](std::initializer_list<Element> fs) {
        Element r = Element::one();
        for (const Element& f : fs) r = shuffle_mul(r, f);
        return r;
    };
    Element g1 = ctx.Gt(1), g2 = ctx.Gt(2), g3 = ctx.Gt(3), g4 = ctx.Gt(4);
    Element m0 = ctx.xCy(0), m1 = ctx.xCy(1), m2 = ctx.xCy(2), m3 = ctx.xCy(3);

    out.require_equal(m0, g1, "xC_0y");
    out.require_equal(m1, (star({g1, g1}) - Scalar(2) * g2) / S("[2]_q"), "xC_1y");
    out.require_equal(m2, (star({g1, g1, g1}) - Scalar(3) * star({g1, g2}) + Scalar(3) * g3) / S("[3]_q"), "xC_2y");
    out.require_equal(m3,
                      (star({g1, g1, g1, g1}) - Scalar(4) * star({g1, g1, g2}) + Scalar(2) * star({g2, g2}) +
                       Scalar(4) * star({g1, g3}) - Scalar(4) * g4) /
                          S("[4]_q"),
                      "xC_3y");

    out.require_equal(g1, m0, "G~_1");
    out.require_equal(g2, (star({m0, m0}) - S("[2]_q") * m1) / Scalar(2), "G~_2");
    out.require_equal(g3, (star({m0, m0, m0}) - S("3*[2]_q") * star({m0, m1}) + S("2*[3]_q") * m2) / Scalar(6),
                      "G~_3");
    out.require_equal(g4,
                      (star({m0, m0, m0, m0}) - S("6*[2]_q") * star({m0, m0, m1}) + S("3*[2]_q^2") * star({m1, m1}) +
                       S("8*[3]_q") * star({m0, m2}) - S("6*[4]_q") * m3) /
                          Scalar(24),
                      "G~_4");
    return out;
}

inline CheckOutcome pbw_check(CheckContext& ctx, PBWBasis basis, int bound) {
    CheckOutcome out;
    PBWCheckReport report = pbw_independence_check(basis, bound, ctx.q0());
    if (!report.pass) {
        out.pass = false;
        out.witness = report.witness;
        out.detail = report.message;
    } else {
        std::ostringstream os;
        os << "per-degree counts:";
        for (size_t n = 0; n < report.counts.size(); ++n) os << " " << report.counts[n];
        out.detail = os.str();
    }
    return out;
}

}  // namespace checks

// ---------------------------------------------------------------------------
// Registry and suite runner
// ---------------------------------------------------------------------------

struct RegisteredCheck {
    std::string id;
    std::function<int(int)> default_bound;  // from the global degree N
    std::function<CheckOutcome(CheckContext&, int)> run;
};

inline const std::vector<RegisteredCheck>& check_registry() {
    auto clamp = [](int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); };
    static const std::vector<RegisteredCheck> registry = {
        {"eq-6.3", [](int) { return 4; }, [](CheckContext& c, int) { return checks::q_serre(c, true); }},
        {"eq-6.4", [](int) { return 4; }, [](CheckContext& c, int) { return checks::q_serre(c, false); }},
        {"prop-6.7", [](int N) { return N; }, [](CheckContext& c, int b) { return checks::damiani_closed_forms(c, b); }},
        {"thm-7.1", [](int N) { return N; }, [](CheckContext& c, int b) { return checks::beck_closed_forms(c, b); }},
        {"lem-4.3", [clamp](int N) { return clamp(2 * N - 2, 2, 8); },
         [](CheckContext& c, int b) { return checks::delta_commutation(c, b); }},
        {"lem-4.4", [clamp](int N) { return clamp(N - 2, 0, 3); },
         [](CheckContext& c, int b) { return checks::mixed_q_bracket(c, b); }},
        {"lem-4.8", [clamp](int N) { return clamp(2 * N - 2, 2, 8); },
         [](CheckContext& c, int b) { return checks::beck_commutation(c, b); }},
        {"eq-4.6", [clamp](int N) { return clamp(N - 1, 1, 4); },
         [](CheckContext& c, int b) { return checks::beck_bracket_raising(c, b, true); }},
        {"eq-4.7", [clamp](int N) { return clamp(N - 1, 1, 4); },
         [](CheckContext& c, int b) { return checks::beck_bracket_raising(c, b, false); }},
        {"lem-7.2", [clamp](int N) { return clamp(N - 1, 1, 4); },
         [](CheckContext& c, int b) { return checks::xcy_in_U(c, b); }},
        {"lem-7.3", [clamp](int N) { return clamp(N - 1, 0, 4); },
         [](CheckContext& c, int b) { return checks::xcy_letter_brackets(c, b); }},
        {"cor-6.8", [clamp](int N) { return clamp(2 * N - 2, 2, 8); },
         [](CheckContext& c, int b) { return checks::catalan_commutation(c, b); }},
        {"cor-6.9", [clamp](int N) { return clamp(N - 1, 0, 4); },
         [](CheckContext& c, int b) { return checks::catalan_q_bracket(c, b); }},
        {"eq-8.1", [](int N) { return N; }, [](CheckContext& c, int b) { return checks::exp_catalan_series(c, b); }},
        {"cor-8.2", [](int N) { return N; }, [](CheckContext& c, int b) { return checks::ln_catalan_series(c, b); }},
        {"cor-8.4", [clamp](int N) { return clamp(2 * N - 4, 0, 6); },
         [](CheckContext& c, int b) { return checks::xcy_commutation(c, b); }},
        {"eq-8.2", [clamp](int N) { return clamp(N - 1, 0, 4); },
         [](CheckContext& c, int b) { return checks::xcy_bracket_raising(c, b, true); }},
        {"eq-8.3", [clamp](int N) { return clamp(N - 1, 0, 4); },
         [](CheckContext& c, int b) { return checks::xcy_bracket_raising(c, b, false); }},
        {"lem-9.3", [clamp](int N) { return clamp(2 * N - 2, 4, 8); },
         [](CheckContext& c, int b) { return checks::alternating_in_U(c, b); }},
        {"lem-9.4", [clamp](int N) { return clamp(2 * N - 2, 2, 8); },
         [](CheckContext& c, int b) { return checks::gtilde_commutation(c, b); }},
        {"eq-9.2", [](int N) { return N; }, [](CheckContext& c, int b) { return checks::ggc_identity(c, b); }},
        {"eq-9.3", [](int N) { return N; }, [](CheckContext& c, int b) { return checks::cg_alternating_sum(c, b); }},
        {"cor-9.7", [clamp](int N) { return clamp(N, 1, 5); },
         [](CheckContext& c, int b) { return checks::paired_recursions(c, b); }},
        {"eq-9.1", [](int N) { return N; }, [](CheckContext& c, int b) { return checks::exp_gtilde_series(c, b); }},
        {"appendix-A1", [](int) { return 3; }, [](CheckContext& c, int) { return checks::appendix_a1(c); }},
        {"appendix-A2", [](int) { return 4; }, [](CheckContext& c, int) { return checks::appendix_a2(c); }},
        {"appendix-A3", [](int) { return 4; }, [](CheckContext& c, int) { return checks::appendix_a3(c); }},
        {"appendix-A4", [](int) { return 4; }, [](CheckContext& c, int) { return checks::appendix_a4(c); }},
        {"pbw-damiani", [clamp](int N) { return clamp(2 * N - 2, 0, 8); },
         [](CheckContext& c, int b) { return checks::pbw_check(c, PBWBasis::damiani, b); }},
        {"pbw-beck", [clamp](int N) { return clamp(2 * N - 2, 0, 8); },
         [](CheckContext& c, int b) { return checks::pbw_check(c, PBWBasis::beck, b); }},
        {"pbw-xcy", [clamp](int N) { return clamp(2 * N - 2, 0, 8); },
         [](CheckContext& c, int b) { return checks::pbw_check(c, PBWBasis::xcy, b); }},
        {"pbw-alternating", [clamp](int N) { return clamp(2 * N - 2, 0, 8); },
         [](CheckContext& c, int b) { return checks::pbw_check(c, PBWBasis::alternating, b); }},
    };
    return registry;
}

inline std::vector<std::string> check_ids() {
    std::vector<std::string> ids;
    for (const auto& c : check_registry()) ids.push_back(c.id);
    return ids;
}

// Runs the registered checks (all of them, or the params.only subset) at the
// given bounds. Individual failures and exceptions never abort the suite.
inline VerificationReport run_suite(const SuiteParams& params,
                                    CheckContext::CatalanProvider provider = nullptr) {
    if (params.degree < 1) throw std::invalid_argument("run_suite: degree must be >= 1");
    if (params.q0 == 0 || params.q0 == 1 || params.q0 == -1)
        throw std::invalid_argument("run_suite: q0 must avoid {0, 1, -1}");
    VerificationReport report;
    report.params = params;
    CheckContext ctx(params.degree, params.q0, std::move(provider));
    for (const RegisteredCheck& rc : check_registry()) {
        if (!params.only.empty()) {
            bool selected = false;
            for (const auto& id : params.only) selected = selected || id == rc.id;
            if (!selected) continue;
        }
        IdentityCheck check;
        check.id = rc.id;
        auto ov = params.bound_overrides.find(rc.id);
        check.bound = ov != params.bound_overrides.end() ? ov->second : rc.default_bound(params.degree);
        auto start = std::chrono::steady_clock::now();
        try {
            CheckOutcome outcome = rc.run(ctx, check.bound);
            check.pass = outcome.pass;
            check.witness = std::move(outcome.witness);
            check.detail = std::move(outcome.detail);
        } catch (const std::exception& e) {
            check.pass = false;
            check.witness = Element::one();
            check.detail = std::string("exception: ") + e.what();
        }
        check.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report.checks.push_back(std::move(check));
    }
    return report;
}

// Single-identity entry points.
inline IdentityCheck run_single_check(const std::string& id, int bound_or_default, int degree,
                                      const Rational& q0 = Rational(2)) {
    SuiteParams p;
    p.degree = degree;
    p.q0 = q0;
    p.only = {id};
    if (bound_or_default >= 0) p.bound_overrides[id] = bound_or_default;
    VerificationReport r = run_suite(p);
    if (r.checks.empty()) throw std::invalid_argument("unknown check id: '" + id + "'");
    return r.checks.front();
}

inline IdentityCheck check_exp_C_identity(int N) { return run_single_check("eq-8.1", N, N); }
inline IdentityCheck check_exp_Gtilde_identity(int N) { return run_single_check("eq-9.1", N, N); }
inline IdentityCheck check_GGC_identity(int N) { return run_single_check("eq-9.2", N, N); }
inline IdentityCheck check_CG_alternating_sum(int N) { return run_single_check("eq-9.3", N, N); }

inline IdentityCheck check_appendix(char which) {
    if (which < '1' || which > '4') throw std::invalid_argument("check_appendix: expected A1..A4");
    return run_single_check(std::string("appendix-A") + which, -1, 4);
}

}  // namespace qshuffle

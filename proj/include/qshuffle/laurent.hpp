#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "numbers.hpp"

namespace qshuffle {

// Laurent polynomial in q with integer coefficients, stored sparsely as
// exponent -> coefficient. Invariant: no stored coefficient is zero.
class LaurentPoly {
public:
    using Terms = std::map<int, Int>;

    LaurentPoly() = default;
    explicit LaurentPoly(Int constant) {
        if (constant != 0) terms_.emplace(0, std::move(constant));
    }
    explicit LaurentPoly(int constant) : LaurentPoly(Int(constant)) {}

    static LaurentPoly monomial(int exp, Int coeff = Int(1)) {
        LaurentPoly p;
        if (coeff != 0) p.terms_.emplace(exp, std::move(coeff));
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }
    bool is_monomial() const { return terms_.size() == 1; }

    // Smallest/largest exponent; only meaningful on nonzero polynomials.
    int min_exp() const { return terms_.begin()->first; }
    int max_exp() const { return terms_.rbegin()->first; }

    Int coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(int exp, const Int& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(exp, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly& operator*=(const Int& k) {
        if (k == 0) {
            terms_.clear();
        } else {
            for (auto& [e, c] : terms_) c *= k;
        }
        return *this;
    }

    // Multiplication by q^k: pure exponent shift.
    LaurentPoly shifted(int k) const {
        if (k == 0) return *this;
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
        return r;
    }
    void shift_in_place(int k) {
        if (k == 0 || terms_.empty()) return;
        Terms moved;
        for (auto& [e, c] : terms_) moved.emplace(e + k, std::move(c));
        terms_ = std::move(moved);
    }

    LaurentPoly pow(unsigned n) const {
        LaurentPoly r(1), b = *this;
        while (n) {
            if (n & 1u) r *= b;
            if (n >>= 1u) b *= b;
        }
        return r;
    }

    bool operator==(const LaurentPoly& o) const = default;

    // gcd of the absolute coefficient values (0 for the zero polynomial).
    Int content() const {
        Int g = 0;
        for (const auto& [e, c] : terms_) {
            g = boost::multiprecision::gcd(g, c);
            if (g == 1) break;
        }
        return boost::multiprecision::abs(g);
    }

    Int leading_coeff() const { return terms_.empty() ? Int(0) : terms_.rbegin()->second; }

    Rational evaluate(const Rational& q0) const {
        Rational v = 0;
        for (const auto& [e, c] : terms_) v += Rational(c) * rational_pow(q0, e);
        return v;
    }

    // Sum of coefficients = evaluation at q = 1.
    Int eval_at_one() const {
        Int s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    // Rendering in decreasing exponent order, e.g. "q^2 - 2*q^-1 + 3".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Int c = it->second;
            if (first) {
                if (c < 0) {
                    os << '-';
                    c = -c;
                }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            int e = it->first;
            if (e == 0) {
                os << c.str();
            } else {
                if (c != 1) os << c.str() << '*';
                os << 'q';
                if (e != 1) os << '^' << e;
            }
        }
        return os.str();
    }

private:
    Terms terms_;
};

// Exact division in the Laurent ring; nullopt when b does not divide a.
// If a = b*c then the exponent range of c is pinned by those of a and b,
// which bounds the descent and guarantees termination.
inline std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return LaurentPoly();
    const int quot_min = a.min_exp() - b.min_exp();
    LaurentPoly rem = a, quot;
    const Int blead = b.leading_coeff();
    const int bdeg = b.max_exp();
    while (!rem.is_zero()) {
        Int lead = rem.leading_coeff();
        if (lead % blead != 0) return std::nullopt;
        int shift = rem.max_exp() - bdeg;
        if (shift < quot_min) return std::nullopt;
        Int factor = lead / blead;
        quot.add_term(shift, factor);
        LaurentPoly sub = b.shifted(shift);
        sub *= factor;
        rem -= sub;
    }
    return quot;
}

namespace detail {

inline LaurentPoly primitive_part(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    Int c = p.content();
    if (p.leading_coeff() < 0) c = -c;
    if (c == 1) return p;
    LaurentPoly r;
    for (const auto& [e, coef] : p.terms()) r.add_term(e, coef / c);
    return r;
}

// Primitive pseudo-remainder sequence over Z[q]; inputs must have min_exp 0.
inline LaurentPoly poly_part_gcd(LaurentPoly a, LaurentPoly b) {
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.is_zero()) {
        // pseudo-division: scale a by b's leading coefficient stepwise
        LaurentPoly rem = a;
        const Int blead = b.leading_coeff();
        const int bdeg = b.max_exp();
        while (!rem.is_zero() && rem.max_exp() >= bdeg) {
            Int lead = rem.leading_coeff();
            int shift = rem.max_exp() - bdeg;
            rem *= blead;
            LaurentPoly sub = b.shifted(shift);
            sub *= lead;
            rem -= sub;
        }
        a = b;
        b = primitive_part(rem);
        b.shift_in_place(b.is_zero() ? 0 : -b.min_exp());
    }
    return a;
}

}  // namespace detail

// gcd over Z[q] of the polynomial parts (powers of q are units and ignored);
// result has min_exp 0 and positive leading coefficient, content included.
inline LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    auto normalized = [](const LaurentPoly& p) {
        if (p.is_zero()) return p;
        LaurentPoly r = p.shifted(-p.min_exp());
        if (r.leading_coeff() < 0) r *= Int(-1);
        return r;
    };
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);
    LaurentPoly pa = a.shifted(-a.min_exp());
    LaurentPoly pb = b.shifted(-b.min_exp());
    Int cont = boost::multiprecision::gcd(pa.content(), pb.content());
    LaurentPoly g = detail::poly_part_gcd(pa, pb);
    g = detail::primitive_part(g);
    g.shift_in_place(-g.min_exp());
    g *= cont;
    return g;
}

}  // namespace qshuffle

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "laurent.hpp"

namespace qshuffle {

// Element of the rational function field in q, stored as num/den with a
// canonical form that makes equality a syntactic comparison:
//   * den is an ordinary polynomial (min exponent 0) with nonzero constant
//     term and positive leading coefficient; pure powers of q live in num
//   * gcd(polynomial part of num, den) = 1, shared integer content removed
//   * zero is num = 0, den = 1
class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(int v) : num_(v), den_(1) {}
    Scalar(Int v) : num_(std::move(v)), den_(1) {}
    Scalar(const Rational& v)
        : num_(Int(boost::multiprecision::numerator(v))),
          den_(Int(boost::multiprecision::denominator(v))) {}
    explicit Scalar(LaurentPoly num) : num_(std::move(num)), den_(1) {}
    Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
        reduce();
    }

    static Scalar q_power(int k) { return Scalar(LaurentPoly::monomial(k)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool operator==(const Scalar& o) const = default;

    Scalar operator-() const {
        Scalar r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Scalar& operator+=(const Scalar& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        if (den_ == o.den_) {
            num_ += o.num_;
            if (num_.is_zero()) {
                den_ = LaurentPoly(1);
            } else if (!den_.is_one()) {
                reduce();
            }
            return *this;
        }
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Scalar& operator-=(const Scalar& o) { return *this += -o; }

    Scalar& operator*=(const Scalar& o) {
        if (is_zero()) return *this;
        if (o.is_zero()) return *this = Scalar();
        num_ *= o.num_;
        if (den_.is_one() && o.den_.is_one()) return *this;
        den_ *= o.den_;
        reduce();
        return *this;
    }

    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        reduce();
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
        return Scalar(den_, num_);
    }

    Scalar pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar r(1), b = *this;
        unsigned n = static_cast<unsigned>(e);
        while (n) {
            if (n & 1u) r *= b;
            if (n >>= 1u) b *= b;
        }
        return r;
    }

    // Exact value at q = q0; fails loudly when the denominator vanishes.
    Rational evaluate(const Rational& q0) const {
        Rational d = den_.evaluate(q0);
        if (d == 0)
            throw std::domain_error("Scalar: denominator (" + den_.str() + ") vanishes at q0 = " +
                                    rational_str(q0));
        return num_.evaluate(q0) / d;
    }

    std::string str() const {
        if (den_.is_one()) return "(" + num_.str() + ")";
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        // push all powers of q into the numerator
        int dshift = den_.min_exp();
        if (dshift != 0) {
            den_.shift_in_place(-dshift);
            num_.shift_in_place(-dshift);
        }
        if (!den_.is_one()) {
            LaurentPoly g = laurent_gcd(num_, den_);
            if (!g.is_one()) {
                num_ = *divide_exact(num_, g);
                den_ = *divide_exact(den_, g);
            }
        }
        if (den_.leading_coeff() < 0) {
            num_ *= Int(-1);
            den_ *= Int(-1);
        }
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

// The q-integer (q^n - q^-n)/(q - q^-1) = q^{n-1} + q^{n-3} + ... + q^{1-n}.
inline Scalar q_int(int n) {
    if (n < 0) throw std::invalid_argument("q_int: negative index");
    LaurentPoly p;
    for (int e = n - 1; e >= 1 - n; e -= 2) p.add_term(e, 1);
    return Scalar(p);
}

// q - q^-1, the ubiquitous deformation factor.
inline Scalar q_minus_qinv() {
    LaurentPoly p;
    p.add_term(1, 1);
    p.add_term(-1, -1);
    return Scalar(p);
}

// Exact specialization at q = q0. The suite never evaluates at 0 or +-1,
// where the not-a-root-of-unity hypothesis would degenerate.
inline Rational specialize(const Scalar& s, const Rational& q0) {
    if (q0 == 0 || q0 == 1 || q0 == -1)
        throw std::invalid_argument("specialize: q0 must avoid {0, 1, -1}");
    return s.evaluate(q0);
}

}  // namespace qshuffle

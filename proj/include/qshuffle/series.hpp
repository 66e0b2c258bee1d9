#pragma once

#include <stdexcept>
#include <vector>

#include "shuffle.hpp"

namespace qshuffle {

// Power series in t truncated at a fixed order N, with Element coefficients.
// All products are taken in the q-shuffle algebra; coefficients beyond index
// N are never consulted or produced.
class Series {
public:
    explicit Series(int order) : order_(order), coeffs_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("Series: negative truncation order");
    }

    static Series one(int order) {
        Series s(order);
        s.coeffs_[0] = Element::one();
        return s;
    }

    int order() const { return order_; }
    const Element& coeff(int k) const { return coeffs_.at(static_cast<size_t>(k)); }
    void set_coeff(int k, Element e) { coeffs_.at(static_cast<size_t>(k)) = std::move(e); }

    Series& operator+=(const Series& o) {
        check_order(o);
        for (int k = 0; k <= order_; ++k) coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    Series& operator-=(const Series& o) {
        check_order(o);
        for (int k = 0; k <= order_; ++k) coeffs_[k] -= o.coeffs_[k];
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }

    Series& operator*=(const Scalar& s) {
        for (auto& c : coeffs_) c *= s;
        return *this;
    }
    friend Series operator*(Series a, const Scalar& s) { return a *= s; }
    friend Series operator*(const Scalar& s, Series a) { return a *= s; }

    bool operator==(const Series& o) const { return order_ == o.order_ && coeffs_ == o.coeffs_; }

    bool is_one() const {
        if (!(coeffs_[0] == Element::one())) return false;
        for (int k = 1; k <= order_; ++k)
            if (!coeffs_[k].is_zero()) return false;
        return true;
    }

private:
    void check_order(const Series& o) const {
        if (order_ != o.order_) throw std::invalid_argument("Series: truncation order mismatch");
    }

    int order_;
    std::vector<Element> coeffs_;
};

// Cauchy convolution c_k = sum_i a_i * b_{k-i}, products in the shuffle algebra.
inline Series series_mul(const Series& a, const Series& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series_mul: order mismatch");
    Series c(a.order());
    for (int k = 0; k <= a.order(); ++k) {
        Element ck;
        for (int i = 0; i <= k; ++i) {
            if (a.coeff(i).is_zero() || b.coeff(k - i).is_zero()) continue;
            ck += shuffle_mul(a.coeff(i), b.coeff(k - i));
        }
        c.set_coeff(k, std::move(ck));
    }
    return c;
}

// exp a(t) = sum_n (a(t))^n / n!, requires constant coefficient zero.
inline Series series_exp(const Series& a) {
    if (!a.coeff(0).is_zero())
        throw std::domain_error("series_exp: nonzero constant coefficient");
    Series result = Series::one(a.order());
    Series power = Series::one(a.order());
    Int fact = 1;
    for (int n = 1; n <= a.order(); ++n) {
        power = series_mul(power, a);
        fact *= n;
        result += power * Scalar(Rational(Int(1), fact));
    }
    return result;
}

// ln(1 + a(t)) = sum_n (-1)^n (a(t))^{n+1} / (n+1), a has constant coeff zero.
inline Series series_ln1p(const Series& a) {
    if (!a.coeff(0).is_zero())
        throw std::domain_error("series_ln1p: nonzero constant coefficient");
    Series result(a.order());
    Series power = Series::one(a.order());
    for (int n = 1; n <= a.order(); ++n) {
        power = series_mul(power, a);
        Rational c(Int(n % 2 == 0 ? -1 : 1), Int(n));
        result += power * Scalar(c);
    }
    return result;
}

// Substitution t -> c*t: coefficient a_k picks up c^k.
inline Series series_scale_t(const Series& a, const Scalar& c) {
    Series r(a.order());
    Scalar ck(1);
    for (int k = 0; k <= a.order(); ++k) {
        if (k > 0) ck *= c;
        Element e = a.coeff(k);
        e *= ck;
        r.set_coeff(k, std::move(e));
    }
    return r;
}

}  // namespace qshuffle

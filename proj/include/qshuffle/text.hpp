#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "element.hpp"

namespace qshuffle {

// A scalar written as  constant * q^qpower * (q - q^-1)^p_exp * prod [k]_q^e_k.
// Coefficients of the named elements in this library (Catalan, Damiani, Beck,
// alternating) all factor this way, which is how the human-readable output
// mirrors the usual bracket notation.
struct FactoredScalar {
    Rational constant = 1;
    int qpower = 0;
    int p_exp = 0;
    std::map<int, int, std::greater<int>> brackets;  // k -> exponent, k >= 2
};

namespace detail {

inline LaurentPoly bracket_poly(int k) {
    LaurentPoly p;
    for (int e = k - 1; e >= 1 - k; e -= 2) p.add_term(e, 1);
    return p;
}

inline LaurentPoly p_poly() {
    LaurentPoly p;
    p.add_term(1, 1);
    p.add_term(-1, -1);
    return p;
}

struct LaurentFactors {
    Int content;  // signed
    int qpower = 0;
    int p_exp = 0;
    std::map<int, int, std::greater<int>> brackets;
};

inline bool factor_primitive(const LaurentPoly& poly, LaurentFactors& out) {
    if (poly.is_monomial()) {
        out.qpower += poly.min_exp();
        return poly.leading_coeff() == 1;
    }
    int span = poly.max_exp() - poly.min_exp();
    for (int k = span / 2 + 1; k >= 2; --k) {
        auto quot = divide_exact(poly, bracket_poly(k));
        if (!quot) continue;
        LaurentFactors attempt = out;
        attempt.brackets[k] += 1;
        if (factor_primitive(*quot, attempt)) {
            out = std::move(attempt);
            return true;
        }
    }
    if (auto quot = divide_exact(poly, p_poly())) {
        LaurentFactors attempt = out;
        attempt.p_exp += 1;
        if (factor_primitive(*quot, attempt)) {
            out = std::move(attempt);
            return true;
        }
    }
    return false;
}

inline std::optional<LaurentFactors> factor_laurent(const LaurentPoly& poly) {
    if (poly.is_zero()) return std::nullopt;
    Int c = poly.content();
    if (poly.leading_coeff() < 0) c = -c;
    LaurentPoly prim;
    for (const auto& [e, coef] : poly.terms()) prim.add_term(e, coef / c);
    LaurentFactors f;
    f.content = c;
    if (!factor_primitive(prim, f)) return std::nullopt;
    return f;
}

}  // namespace detail

inline std::optional<FactoredScalar> factor_scalar(const Scalar& s) {
    if (s.is_zero()) return std::nullopt;
    auto fnum = detail::factor_laurent(s.num());
    if (!fnum) return std::nullopt;
    auto fden = detail::factor_laurent(s.den());
    if (!fden) return std::nullopt;
    FactoredScalar f;
    f.constant = Rational(fnum->content, fden->content);
    f.qpower = fnum->qpower - fden->qpower;
    f.p_exp = fnum->p_exp - fden->p_exp;
    f.brackets = fnum->brackets;
    for (const auto& [k, e] : fden->brackets) {
        f.brackets[k] -= e;
        if (f.brackets[k] == 0) f.brackets.erase(k);
    }
    return f;
}

enum class OutputFormat { text, json, latex };

inline OutputFormat parse_output_format(const std::string& s) {
    if (s == "text") return OutputFormat::text;
    if (s == "json") return OutputFormat::json;
    if (s == "latex") return OutputFormat::latex;
    throw std::invalid_argument("unknown output format: '" + s + "'");
}

namespace detail {

// Renders |s| in parser-friendly product form; the sign is returned
// separately so callers can fold it into '+'/'-' term joins.
inline std::pair<bool, std::string> scalar_text(const Scalar& s) {
    auto f = factor_scalar(s);
    if (!f) {
        // fall back to the raw canonical fraction
        std::string body = "(" + s.num().str() + ")";
        if (!s.den().is_one()) body += "/(" + s.den().str() + ")";
        return {false, body};
    }
    bool negative = f->constant < 0;
    Rational c = negative ? -f->constant : f->constant;
    std::vector<std::string> numer, denom;
    Int cn = boost::multiprecision::numerator(c), cd = boost::multiprecision::denominator(c);
    if (cn != 1) numer.push_back(cn.str());
    if (cd != 1) denom.push_back(cd.str());
    if (f->qpower != 0) numer.push_back("q^" + std::to_string(f->qpower));
    auto power_tag = [](const std::string& base, int e) {
        return e == 1 ? base : base + "^" + std::to_string(e);
    };
    if (f->p_exp > 0) numer.push_back(power_tag("(q - q^-1)", f->p_exp));
    if (f->p_exp < 0) denom.push_back(power_tag("(q - q^-1)", -f->p_exp));
    for (const auto& [k, e] : f->brackets) {
        std::string b = "[" + std::to_string(k) + "]_q";
        if (e > 0) numer.push_back(power_tag(b, e));
        if (e < 0) denom.push_back(power_tag(b, -e));
    }
    std::string out;
    if (numer.empty()) {
        out = "1";
    } else {
        for (size_t i = 0; i < numer.size(); ++i) out += (i ? "*" : "") + numer[i];
    }
    for (const std::string& d : denom) out += "/" + d;
    return {negative, out};
}

inline std::pair<bool, std::string> scalar_latex(const Scalar& s) {
    auto poly_latex = [](const LaurentPoly& p) {
        // like LaurentPoly::str but with braced exponents
        if (p.is_zero()) return std::string("0");
        std::ostringstream os;
        bool first = true;
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
            Int c = it->second;
            if (first) {
                if (c < 0) { os << '-'; c = -c; }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            if (it->first == 0) {
                os << c.str();
            } else {
                if (c != 1) os << c.str();
                os << "q^{" << it->first << "}";
            }
        }
        return os.str();
    };
    auto f = factor_scalar(s);
    if (!f) {
        std::string body = s.den().is_one()
                               ? "\\bigl(" + poly_latex(s.num()) + "\\bigr)"
                               : "\\frac{" + poly_latex(s.num()) + "}{" + poly_latex(s.den()) + "}";
        return {false, body};
    }
    bool negative = f->constant < 0;
    Rational c = negative ? -f->constant : f->constant;
    Int cn = boost::multiprecision::numerator(c), cd = boost::multiprecision::denominator(c);
    std::string out;
    if (cd != 1) {
        out += "\\tfrac{" + cn.str() + "}{" + cd.str() + "}";
    } else if (cn != 1) {
        out += cn.str();
    }
    auto exp_latex = [](int e) {
        std::string es = std::to_string(e);
        return es.size() == 1 ? "^" + es : "^{" + es + "}";
    };
    if (f->qpower != 0) {
        out += out.empty() ? "" : " ";
        out += "q^{" + std::to_string(f->qpower) + "}";
    }
    if (f->p_exp != 0) {
        out += out.empty() ? "" : " ";
        out += "(q - q^{-1})";
        if (f->p_exp != 1) out += exp_latex(f->p_exp);
    }
    for (const auto& [k, e] : f->brackets) {
        out += out.empty() ? "" : " ";
        out += "\\lbrack " + std::to_string(k) + "\\rbrack";
        if (e != 1) out += exp_latex(e);
        out += "_q";
    }
    if (out.empty()) out = "1";
    return {negative, out};
}

}  // namespace detail

// Element as readable text, terms in (length, lex) order, e.g.
// "[2]_q^2 xyxy + [3]_q*[2]_q^2 xxyy". Parsable by parse_element.
inline std::string render_text(const Element& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : e.sorted_terms()) {
        auto [neg, body] = detail::scalar_text(c);
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (body == "1") {
            os << w.str();
        } else {
            os << body << ' ' << w.str();
        }
    }
    return os.str();
}

inline std::string render_latex(const Element& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : e.sorted_terms()) {
        auto [neg, body] = detail::scalar_latex(c);
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (body == "1") {
            os << w.str();
        } else {
            os << body << "\\, " << w.str();
        }
    }
    return os.str();
}

// Canonical text for a bare Scalar (sign folded back in).
inline std::string render_scalar_text(const Scalar& s) {
    if (s.is_zero()) return "0";
    auto [neg, body] = detail::scalar_text(s);
    return neg ? "-" + body : body;
}

}  // namespace qshuffle

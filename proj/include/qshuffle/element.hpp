#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scalar.hpp"
#include "word.hpp"

namespace qshuffle {

// Sparse linear combination of words with Scalar coefficients. Zero
// coefficients are removed eagerly, so term-map equality is element equality.
// Deterministic (length, lex) ordering is imposed only at serialization time.
class Element {
public:
    using Terms = std::unordered_map<Word, Scalar, WordHash>;

    Element() = default;

    static Element zero() { return Element(); }
    static Element one() { return of_word(Word()); }
    static Element of_word(const Word& w, Scalar c = Scalar(1)) {
        Element e;
        e.add_term(w, c);
        return e;
    }
    static Element of_letter(Letter l) { return of_word(Word::single(l)); }

    const Terms& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Scalar() : it->second;
    }

    void add_term(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Element& operator+=(const Element& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }

    Element operator-() const {
        Element r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }

    Element& operator*=(const Scalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }
    friend Element operator*(Element e, const Scalar& s) { return e *= s; }
    friend Element operator*(const Scalar& s, Element e) { return e *= s; }
    friend Element operator/(Element e, const Scalar& s) {
        if (s.is_zero()) throw std::domain_error("Element: division by zero scalar");
        return e *= s.inverse();
    }

    bool operator==(const Element& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (const auto& [w, c] : terms_) {
            auto it = o.terms_.find(w);
            if (it == o.terms_.end() || !(it->second == c)) return false;
        }
        return true;
    }

    // n-homogeneous iff every stored word has length n; zero is vacuously
    // homogeneous of every degree and reports nullopt.
    std::optional<int> homogeneous_degree() const {
        if (terms_.empty()) return std::nullopt;
        int deg = static_cast<int>(terms_.begin()->first.length());
        for (const auto& [w, c] : terms_)
            if (static_cast<int>(w.length()) != deg) return std::nullopt;
        return deg;
    }
    bool is_homogeneous(int n) const {
        for (const auto& [w, c] : terms_)
            if (static_cast<int>(w.length()) != n) return false;
        return true;
    }

    std::vector<std::pair<Word, Scalar>> sorted_terms() const {
        std::vector<std::pair<Word, Scalar>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    }

private:
    Terms terms_;
};

// Bilinear extension of word concatenation (the free product).
inline Element free_mul(const Element& a, const Element& b) {
    Element r;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) r.add_term(wa.concat(wb), ca * cb);
    return r;
}

// The symmetric bilinear form making the standard word basis orthonormal.
inline Scalar bilinear_form(const Element& a, const Element& b) {
    const Element& small = a.term_count() <= b.term_count() ? a : b;
    const Element& large = a.term_count() <= b.term_count() ? b : a;
    Scalar r;
    for (const auto& [w, c] : small.terms()) {
        auto it = large.terms().find(w);
        if (it != large.terms().end()) r += c * it->second;
    }
    return r;
}

// Restriction to the degree-n homogeneous component.
inline Element grade_project(const Element& a, int n) {
    if (n < 0) throw std::invalid_argument("grade_project: negative degree");
    Element r;
    for (const auto& [w, c] : a.terms())
        if (static_cast<int>(w.length()) == n) r.add_term(w, c);
    return r;
}

// The two degree-4 generators of the ideal orthogonal to the image of the
// embedded algebra: J+ = xxxy - [3]xxyx + [3]xyxx - yxxx and its x<->y twin.
inline Element j_plus() {
    Element e;
    Scalar three = q_int(3);
    e.add_term(Word::from_string("xxxy"), Scalar(1));
    e.add_term(Word::from_string("xxyx"), -three);
    e.add_term(Word::from_string("xyxx"), three);
    e.add_term(Word::from_string("yxxx"), Scalar(-1));
    return e;
}

inline Element j_minus() {
    Element e;
    Scalar three = q_int(3);
    e.add_term(Word::from_string("yyyx"), Scalar(1));
    e.add_term(Word::from_string("yyxy"), -three);
    e.add_term(Word::from_string("yxyy"), three);
    e.add_term(Word::from_string("xyyy"), Scalar(-1));
    return e;
}

}  // namespace qshuffle

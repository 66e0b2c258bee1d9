#pragma once

#include <random>
#include <vector>

#include "qshuffle/qshuffle.hpp"

namespace qshuffle::testing {

inline LaurentPoly random_laurent(std::mt19937& rng, int max_terms = 4, int exp_range = 4, int coeff_range = 9) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(-exp_range, exp_range);
    std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
    LaurentPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p.add_term(exp(rng), Int(coeff(rng)));
    return p;
}

inline LaurentPoly random_nonzero_laurent(std::mt19937& rng, int max_terms = 4) {
    for (;;) {
        LaurentPoly p = random_laurent(rng, max_terms);
        if (!p.is_zero()) return p;
    }
}

inline Scalar random_scalar(std::mt19937& rng) {
    return Scalar(random_laurent(rng), random_nonzero_laurent(rng));
}

inline Scalar random_nonzero_scalar(std::mt19937& rng) {
    for (;;) {
        Scalar s = random_scalar(rng);
        if (!s.is_zero()) return s;
    }
}

inline Word random_word(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    Word w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) w = w.append(bit(rng) ? Letter::y : Letter::x);
    return w;
}

inline Word random_word_exact(std::mt19937& rng, int len) {
    std::uniform_int_distribution<int> bit(0, 1);
    Word w;
    for (int i = 0; i < len; ++i) w = w.append(bit(rng) ? Letter::y : Letter::x);
    return w;
}

// Sparse random element; small integer-ish coefficients keep products fast.
inline Element random_element(std::mt19937& rng, int max_terms, int max_word_len) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> qexp(-2, 2);
    Element e;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Scalar c = Scalar(Int(coeff(rng))) * Scalar::q_power(qexp(rng));
        e.add_term(random_word(rng, max_word_len), c);
    }
    return e;
}

// Homogeneous variant: every word of the same length.
inline Element random_homogeneous_element(std::mt19937& rng, int max_terms, int len) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> coeff(-5, 5);
    Element e;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) e.add_term(random_word_exact(rng, len), Scalar(Int(coeff(rng))));
    return e;
}

// Brute-force oracle: filter all 2^(2n) words of length 2n.
inline std::vector<Word> catalan_words_bruteforce(int n) {
    std::vector<Word> out;
    if (n == 0) {
        out.push_back(Word());
        return out;
    }
    uint32_t len = static_cast<uint32_t>(2 * n);
    for (uint64_t bits = 0; bits < (uint64_t(1) << len); ++bits) {
        Word w = Word::from_bits(bits, len);
        if (is_catalan(w)) out.push_back(w);
    }
    return out;
}

// Formal inverse of a truncated series with invertible constant term 1,
// by forward substitution: b_0 = 1, b_k = -sum_{i=1..k} a_i * b_{k-i}.
inline Series series_inverse_forward_substitution(const Series& a) {
    if (!(a.coeff(0) == Element::one()))
        throw std::invalid_argument("series inverse oracle wants constant term 1");
    Series b(a.order());
    b.set_coeff(0, Element::one());
    for (int k = 1; k <= a.order(); ++k) {
        Element acc;
        for (int i = 1; i <= k; ++i) acc += shuffle_mul(a.coeff(i), b.coeff(k - i));
        b.set_coeff(k, -acc);
    }
    return b;
}

}  // namespace qshuffle::testing

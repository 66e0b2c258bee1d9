#pragma once

#include <string>
#include <vector>

#include "shuffle.hpp"

namespace qshuffle {

// A word is Catalan when its bar partial sums stay nonnegative and end at 0.
inline bool is_catalan(const Word& w) {
    if (w.length() % 2 != 0) return false;
    int sum = 0;
    for (uint32_t i = 0; i < w.length(); ++i) {
        sum += bar(w.at(i));
        if (sum < 0) return false;
    }
    return sum == 0;
}

namespace detail {

inline void catalan_words_rec(Word prefix, int sum, int remaining, std::vector<Word>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    // x first keeps the emitted order lexicographic (x < y); x is legal while
    // enough letters remain to bring the partial sum back to zero
    if (sum + 1 <= remaining - 1)
        catalan_words_rec(prefix.append(Letter::x), sum + 1, remaining - 1, out);
    if (sum > 0) catalan_words_rec(prefix.append(Letter::y), sum - 1, remaining - 1, out);
}

}  // namespace detail

// All Catalan words of length 2n in lexicographic order; the count is the
// n-th Catalan number. Built by depth-first construction on the partial-sum
// counter, never by filtering all 2^(2n) words.
inline std::vector<Word> catalan_words(int n) {
    if (n < 0) throw std::invalid_argument("catalan_words: negative index");
    std::vector<Word> out;
    if (n == 0) {
        out.push_back(Word());
        return out;
    }
    detail::catalan_words_rec(Word(), 0, 2 * n, out);
    return out;
}

// Coefficient of a Catalan word u1..u_2n: the product of q-integers
// [1]_q [1+u1]_q [1+u1+u2]_q ... over all partial bar sums.
inline Scalar catalan_word_coefficient(const Word& w) {
    Scalar c(1);
    int sum = 0;
    for (uint32_t i = 0; i < w.length(); ++i) {
        sum += bar(w.at(i));
        c *= q_int(1 + sum);
    }
    return c;
}

// The n-th Catalan element C_n, a weighted sum over Catalan words of
// length 2n; lives in the 2n-homogeneous component.
inline Element catalan_element(int n) {
    if (n < 0) throw std::invalid_argument("catalan_element: negative index");
    Element e;
    for (const Word& w : catalan_words(n)) e.add_term(w, catalan_word_coefficient(w));
    return e;
}

// Free products x*C_n, C_n*y and x*C_n*y.
inline Element x_catalan(int n) { return free_mul(Element::of_letter(Letter::x), catalan_element(n)); }
inline Element catalan_y(int n) { return free_mul(catalan_element(n), Element::of_letter(Letter::y)); }
inline Element x_catalan_y(int n) {
    return free_mul(Element::of_letter(Letter::x), free_mul(catalan_element(n), Element::of_letter(Letter::y)));
}

// Alternating words: no two adjacent letters are equal.
//   W_0 = x, W_{-1} = xyx, W_{-2} = xyxyx, ...   (family Wminus, index i >= 0)
//   W_1 = y, W_2  = yxy,  W_3  = yxyxy,  ...     (family Wplus,  index k >= 1)
//   G_k = (yx)^k and Gtilde_k = (xy)^k with G_0 = Gtilde_0 = 1.
enum class AltFamily { Wminus, Wplus, G, Gtilde };

inline bool is_alternating(const Word& w) {
    if (w.empty()) return false;
    for (uint32_t i = 1; i < w.length(); ++i)
        if (w.at(i - 1) == w.at(i)) return false;
    return true;
}

inline Word alternating_word_value(AltFamily family, int k) {
    auto alternate = [](Letter start, int len) {
        Word w;
        Letter l = start;
        for (int i = 0; i < len; ++i) {
            w = w.append(l);
            l = (l == Letter::x) ? Letter::y : Letter::x;
        }
        return w;
    };
    switch (family) {
        case AltFamily::Wminus:
            if (k < 0) throw std::invalid_argument("alternating_word: W_{-i} needs i >= 0");
            return alternate(Letter::x, 2 * k + 1);
        case AltFamily::Wplus:
            if (k < 1) throw std::invalid_argument("alternating_word: W_k needs k >= 1");
            return alternate(Letter::y, 2 * k - 1);
        case AltFamily::G:
            if (k < 0) throw std::invalid_argument("alternating_word: G_k needs k >= 0");
            return alternate(Letter::y, 2 * k);
        case AltFamily::Gtilde:
            if (k < 0) throw std::invalid_argument("alternating_word: Gtilde_k needs k >= 0");
            return alternate(Letter::x, 2 * k);
    }
    throw std::invalid_argument("alternating_word: unknown family");
}

inline Element alternating_word(AltFamily family, int k) {
    return Element::of_word(alternating_word_value(family, k));
}

inline Element gtilde(int k) { return alternating_word(AltFamily::Gtilde, k); }

// The paired recursion relating {C_n} and {Gtilde_n}:
//   0 = sum_{i=0}^n (-1)^i [2n-i]_q C_i * Gtilde_{n-i}
// solved for the top C (using the alternating words directly) or for the
// top Gtilde (using the closed-form Catalan elements).
inline Element catalan_via_recursion(int n) {
    if (n < 0) throw std::invalid_argument("catalan_via_recursion: negative index");
    std::vector<Element> c;
    c.push_back(Element::one());
    for (int m = 1; m <= n; ++m) {
        Element sum;
        for (int i = 0; i < m; ++i) {
            Element term = shuffle_mul(c[static_cast<size_t>(i)], gtilde(m - i));
            term *= q_int(2 * m - i);
            if ((m - i) % 2 != 0) term = -term;
            sum += term;
        }
        sum *= -q_int(m).inverse();
        c.push_back(std::move(sum));
    }
    return c.back();
}

inline Element gtilde_via_recursion(int n) {
    if (n < 0) throw std::invalid_argument("gtilde_via_recursion: negative index");
    std::vector<Element> g;
    g.push_back(Element::one());
    for (int m = 1; m <= n; ++m) {
        Element sum;
        for (int i = 1; i <= m; ++i) {
            Element term = shuffle_mul(catalan_element(i), g[static_cast<size_t>(m - i)]);
            term *= q_int(2 * m - i);
            if (i % 2 != 0) term = -term;
            sum += term;
        }
        sum *= -q_int(2 * m).inverse();
        g.push_back(std::move(sum));
    }
    return g.back();
}

}  // namespace qshuffle

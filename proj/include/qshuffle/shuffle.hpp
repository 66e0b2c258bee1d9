#pragma once

#include <cstdlib>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "element.hpp"

namespace qshuffle {

// Pairing on letters: (x,x) = (y,y) = 2, (x,y) = (y,x) = -2.
inline int pairing(Letter a, Letter b) { return a == b ? 2 : -2; }

namespace detail {

// Word-level shuffle expansions carry pure q-power coefficients, so the
// kernel works over Laurent polynomials and converts to Scalars at the edge.
using WordPoly = std::unordered_map<Word, LaurentPoly, WordHash>;
using WordPolyPtr = std::shared_ptr<const WordPoly>;

struct WordPairKey {
    Word u, v;
    bool operator==(const WordPairKey&) const = default;
};
struct WordPairHash {
    size_t operator()(const WordPairKey& k) const {
        size_t h = k.u.hash();
        return h ^ (k.v.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    }
};

}  // namespace detail

// Memo cache for word-pair shuffle expansions. Bounded by the total number
// of cached terms (QSHUFFLE_CACHE_LIMIT overrides the default); oversized
// expansions are cheaper to recompute than to keep, so entries above a fixed
// per-entry size are never stored. Lookups and inserts are mutex-guarded:
// concurrent callers may duplicate work but never corrupt the cache.
class ShuffleCache {
public:
    static constexpr size_t default_term_limit = 1u << 20;
    static constexpr size_t max_entry_terms = 1u << 10;

    static ShuffleCache& instance() {
        static ShuffleCache cache;
        return cache;
    }

    detail::WordPolyPtr lookup(const Word& u, const Word& v) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find({u, v});
        return it == map_.end() ? nullptr : it->second;
    }

    void insert(const Word& u, const Word& v, const detail::WordPolyPtr& value) {
        size_t n = value->size();
        if (n > max_entry_terms) return;
        std::lock_guard<std::mutex> lock(mu_);
        if (stored_terms_ + n > term_limit_) return;
        auto [it, fresh] = map_.try_emplace({u, v}, value);
        if (fresh) stored_terms_ += n;
    }

    void clear() {
        std::lock_guard<std::mutex> lock(mu_);
        map_.clear();
        stored_terms_ = 0;
    }

    size_t entries() const {
        std::lock_guard<std::mutex> lock(mu_);
        return map_.size();
    }
    size_t stored_terms() const {
        std::lock_guard<std::mutex> lock(mu_);
        return stored_terms_;
    }
    void set_term_limit(size_t limit) {
        std::lock_guard<std::mutex> lock(mu_);
        term_limit_ = limit;
    }

private:
    ShuffleCache() {
        if (const char* env = std::getenv("QSHUFFLE_CACHE_LIMIT")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0') term_limit_ = static_cast<size_t>(v);
        }
    }

    mutable std::mutex mu_;
    std::unordered_map<detail::WordPairKey, detail::WordPolyPtr, detail::WordPairHash> map_;
    size_t term_limit_ = default_term_limit;
    size_t stored_terms_ = 0;
};

namespace detail {

inline WordPolyPtr word_poly_single(const Word& w) {
    auto p = std::make_shared<WordPoly>();
    p->emplace(w, LaurentPoly(1));
    return p;
}

// Left recursion:
//   u*v = u1((u2..ur)*v) + v1(u*(v2..vs)) q^{(u1,v1)+...+(ur,v1)}
// The exponent collapses to 2 * bar_sum(u) * bar(v1).
inline WordPolyPtr shuffle_words_impl(const Word& u, const Word& v) {
    if (u.empty()) return word_poly_single(v);
    if (v.empty()) return word_poly_single(u);
    auto& cache = ShuffleCache::instance();
    if (auto hit = cache.lookup(u, v)) return hit;

    WordPolyPtr left = shuffle_words_impl(u.tail(), v);
    WordPolyPtr right = shuffle_words_impl(u, v.tail());

    auto out = std::make_shared<WordPoly>();
    out->reserve(left->size() + right->size());
    Letter u1 = u.first(), v1 = v.first();
    for (const auto& [w, p] : *left) {
        auto [it, fresh] = out->try_emplace(w.prepended(u1), p);
        if (!fresh) {
            it->second += p;
            if (it->second.is_zero()) out->erase(it);
        }
    }
    int e = 2 * u.bar_sum() * bar(v1);
    for (const auto& [w, p] : *right) {
        LaurentPoly shifted = p.shifted(e);
        auto [it, fresh] = out->try_emplace(w.prepended(v1), std::move(shifted));
        if (!fresh) {
            it->second += p.shifted(e);
            if (it->second.is_zero()) out->erase(it);
        }
    }
    cache.insert(u, v, out);
    return out;
}

// Right recursion, kept as an independently coded oracle:
//   u*v = (u*(v1..v_{s-1}))vs + ((u1..u_{r-1})*v)ur q^{(ur,v1)+...+(ur,vs)}
// The exponent collapses to 2 * bar(ur) * bar_sum(v). No cache on purpose.
inline WordPoly shuffle_words_right_impl(const Word& u, const Word& v) {
    WordPoly out;
    if (u.empty() || v.empty()) {
        out.emplace(u.empty() ? v : u, LaurentPoly(1));
        return out;
    }
    Letter us = u.last(), vs = v.last();
    WordPoly a = shuffle_words_right_impl(u, v.drop_last());
    for (const auto& [w, p] : a) {
        auto [it, fresh] = out.try_emplace(w.concat(Word::single(vs)), p);
        if (!fresh) {
            it->second += p;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    int e = 2 * bar(us) * v.bar_sum();
    WordPoly b = shuffle_words_right_impl(u.drop_last(), v);
    for (const auto& [w, p] : b) {
        LaurentPoly shifted = p.shifted(e);
        auto [it, fresh] = out.try_emplace(w.concat(Word::single(us)), std::move(shifted));
        if (!fresh) {
            it->second += p.shifted(e);
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

}  // namespace detail

// q-shuffle product, bilinear extension of the word-level left recursion.
inline Element shuffle_mul(const Element& a, const Element& b) {
    Element r;
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            Scalar c = ca * cb;
            detail::WordPolyPtr expansion = detail::shuffle_words_impl(wa, wb);
            for (const auto& [w, p] : *expansion) r.add_term(w, c * Scalar(p));
        }
    }
    return r;
}

// Same product computed via the right recursion; cross-check oracle only.
inline Element shuffle_mul_right_recursion(const Element& a, const Element& b) {
    Element r;
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            Scalar c = ca * cb;
            detail::WordPoly expansion = detail::shuffle_words_right_impl(wa, wb);
            for (const auto& [w, p] : expansion) r.add_term(w, c * Scalar(p));
        }
    }
    return r;
}

inline Element shuffle_pow(const Element& a, unsigned n) {
    Element r = Element::one();
    for (unsigned i = 0; i < n; ++i) r = shuffle_mul(r, a);
    return r;
}

// [a, b] = a*b - b*a in the q-shuffle algebra.
inline Element shuffle_commutator(const Element& a, const Element& b) {
    return shuffle_mul(a, b) - shuffle_mul(b, a);
}

// [a, b]_q = q a*b - q^-1 b*a in the q-shuffle algebra.
inline Element shuffle_q_commutator(const Element& a, const Element& b) {
    return Scalar::q_power(1) * shuffle_mul(a, b) - Scalar::q_power(-1) * shuffle_mul(b, a);
}

}  // namespace qshuffle

#include <catch2/catch_amalgamated.hpp>
#include <thread>

#include "helpers.hpp"

using namespace qshuffle;

namespace {

Element wshuf(const char* a, const char* b) {
    return shuffle_mul(Element::of_word(Word::from_string(a)), Element::of_word(Word::from_string(b)));
}

Element catalan_element_for_test() {
    Element c2;
    c2.add_term("xyxy"_w, q_int(2).pow(2));
    c2.add_term("xxyy"_w, q_int(3) * q_int(2).pow(2));
    return c2;
}

}  // namespace

TEST_CASE("letter-level products") {
    Element expected;
    expected.add_term("xy"_w, Scalar(1));
    expected.add_term("yx"_w, Scalar::q_power(-2));
    CHECK(wshuf("x", "y") == expected);

    Element yy;
    yy.add_term("yy"_w, Scalar(1) + Scalar::q_power(2));
    CHECK(wshuf("y", "y") == yy);
}

TEST_CASE("letter against longer words") {
    Element expected;
    expected.add_term("xyyy"_w, Scalar(1));
    expected.add_term("yxyy"_w, Scalar::q_power(-2));
    expected.add_term("yyxy"_w, Scalar::q_power(-4));
    expected.add_term("yyyx"_w, Scalar::q_power(-6));
    CHECK(wshuf("x", "yyy") == expected);

    Element mirrored;
    mirrored.add_term("xyyy"_w, Scalar::q_power(-6));
    mirrored.add_term("yxyy"_w, Scalar::q_power(-4));
    mirrored.add_term("yyxy"_w, Scalar::q_power(-2));
    mirrored.add_term("yyyx"_w, Scalar(1));
    CHECK(shuffle_mul_right_recursion(Element::of_word("yyy"_w), Element::of_word("x"_w)) == mirrored);
    CHECK(wshuf("yyy", "x") == mirrored);
}

TEST_CASE("unit and zero") {
    Element a = Element::of_word("xyx"_w, q_int(2));
    CHECK(shuffle_mul(a, Element::one()) == a);
    CHECK(shuffle_mul(Element::one(), a) == a);
    CHECK(shuffle_mul(a, Element::zero()).is_zero());
}

TEST_CASE("both recursions agree") {
    // exhaustively on all word pairs with r + s <= 8
    for (int r = 0; r <= 8; ++r) {
        for (int s = 0; r + s <= 8; ++s) {
            for (uint64_t ub = 0; ub < (uint64_t(1) << r); ++ub) {
                for (uint64_t vb = 0; vb < (uint64_t(1) << s); ++vb) {
                    Element u = Element::of_word(Word::from_bits(ub, static_cast<uint32_t>(r)));
                    Element v = Element::of_word(Word::from_bits(vb, static_cast<uint32_t>(s)));
                    REQUIRE(shuffle_mul(u, v) == shuffle_mul_right_recursion(u, v));
                }
            }
        }
    }
    // and on 200 random pairs of length <= 6 each
    std::mt19937 rng(20240806);
    for (int i = 0; i < 200; ++i) {
        Element u = Element::of_word(testing::random_word(rng, 6));
        Element v = Element::of_word(testing::random_word(rng, 6));
        REQUIRE(shuffle_mul(u, v) == shuffle_mul_right_recursion(u, v));
    }
}

TEST_CASE("associativity on random triples") {
    std::mt19937 rng(20240807);
    for (int i = 0; i < 40; ++i) {
        Element a = testing::random_element(rng, 3, 4);
        Element b = testing::random_element(rng, 3, 4);
        Element c = testing::random_element(rng, 3, 4);
        REQUIRE(shuffle_mul(shuffle_mul(a, b), c) == shuffle_mul(a, shuffle_mul(b, c)));
    }
}

TEST_CASE("classical shuffle count at q = 1") {
    // the coefficient sum of u * v equals binomial(r+s, r)
    std::mt19937 rng(20240808);
    for (int r = 0; r <= 6; ++r) {
        for (int s = 0; s <= 6; ++s) {
            Word u = testing::random_word_exact(rng, r);
            Word v = testing::random_word_exact(rng, s);
            Element prod = shuffle_mul(Element::of_word(u), Element::of_word(v));
            Int total = 0;
            for (const auto& [w, c] : prod.terms()) {
                REQUIRE(c.den().is_one());
                total += c.num().eval_at_one();
            }
            REQUIRE(total == binomial(static_cast<unsigned>(r + s), static_cast<unsigned>(r)));
        }
    }
}

TEST_CASE("q-Serre relations hold in the shuffle algebra") {
    Element x = Element::of_letter(Letter::x);
    Element y = Element::of_letter(Letter::y);
    auto cube_bracket = [](const Element& a, const Element& b) {
        Element aa = shuffle_mul(a, a);
        Element aaa = shuffle_mul(aa, a);
        return shuffle_mul(aaa, b) - q_int(3) * shuffle_mul(shuffle_mul(aa, b), a) +
               q_int(3) * shuffle_mul(shuffle_mul(a, b), aa) - shuffle_mul(b, aaa);
    };
    CHECK(cube_bracket(x, y).is_zero());
    CHECK(cube_bracket(y, x).is_zero());
}

TEST_CASE("grading: products of homogeneous elements are homogeneous") {
    std::mt19937 rng(20240809);
    for (int i = 0; i < 40; ++i) {
        std::uniform_int_distribution<int> degree(0, 4);
        int m = degree(rng), n = degree(rng);
        Element a = testing::random_homogeneous_element(rng, 3, m);
        Element b = testing::random_homogeneous_element(rng, 3, n);
        Element prod = shuffle_mul(a, b);
        if (!prod.is_zero()) REQUIRE(prod.is_homogeneous(m + n));
    }
}

TEST_CASE("cache bookkeeping") {
    auto& cache = ShuffleCache::instance();
    cache.clear();
    CHECK(cache.entries() == 0);
    wshuf("xyx", "yxy");
    CHECK(cache.entries() > 0);
    CHECK(cache.stored_terms() > 0);
    size_t before = cache.entries();
    wshuf("xyx", "yxy");  // second run hits the cache
    CHECK(cache.entries() == before);
    cache.clear();
}

TEST_CASE("cache respects its term limit") {
    auto& cache = ShuffleCache::instance();
    cache.clear();
    cache.set_term_limit(10);
    Element a = wshuf("xyxy", "yxyx");
    Element b = wshuf("xyxy", "yxyx");  // recomputed or cached, same value
    CHECK(a == b);
    CHECK(cache.stored_terms() <= 10);
    cache.clear();
    cache.set_term_limit(ShuffleCache::default_term_limit);
}

TEST_CASE("concurrent products do not corrupt the cache") {
    auto& cache = ShuffleCache::instance();
    cache.clear();
    Element c2 = catalan_element_for_test();
    Element expected = shuffle_mul(c2, c2);
    cache.clear();
    std::vector<std::thread> workers;
    std::vector<Element> results(8);
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&, t] { results[static_cast<size_t>(t)] = shuffle_mul(c2, c2); });
    for (auto& w : workers) w.join();
    for (const auto& r : results) REQUIRE(r == expected);
    cache.clear();
}

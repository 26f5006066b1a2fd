#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cgt/freeprod.hpp"

#include <random>

using namespace cgt;

namespace {

const FactorSpec z2z2({2, 2});
const FactorSpec z2z2z2({2, 2, 2});
const FactorSpec z3z2({3, 2});
const FactorSpec zinfz2({0, 2});

// "abab..." over Z2 * Z2.
FPWord ab_word(int len, int first = 0) {
    std::vector<Syllable> s;
    for (int i = 0; i < len; ++i) s.push_back({(first + i) % 2, 1});
    return FPWord(z2z2, std::move(s));
}

FPWord random_word(std::mt19937_64& rng, const FactorSpec& spec, int len) {
    std::vector<Syllable> s;
    int prev = -1;
    for (int i = 0; i < len; ++i) {
        int f = static_cast<int>(rng() % spec.count());
        if (f == prev) f = (f + 1) % static_cast<int>(spec.count());
        int order = spec.orders[f];
        long long e = order == 0 ? static_cast<long long>(rng() % 7) - 3
                                 : 1 + static_cast<long long>(rng() % (order - 1));
        if (e == 0) e = 1;
        s.push_back({f, e});
        prev = f;
    }
    return FPWord(spec, std::move(s));
}

std::mt19937_64 seeds(999);

}  // namespace

TEST_CASE("word validation and reduction") {
    CHECK_THROWS(FactorSpec({2}));        // need two factors
    CHECK_THROWS(FactorSpec({2, 1}));     // order 1 is not allowed
    CHECK_THROWS(FactorSpec({2, -3}));

    CHECK_THROWS(FPWord(z2z2, {{2, 1}}));          // factor out of range
    CHECK_THROWS(FPWord(z2z2, {{0, 2}}));          // exponent reduces to zero
    CHECK_THROWS(FPWord(z2z2, {{0, 1}, {0, 1}}));  // adjacent same factor

    // Exponents are stored reduced mod the order.
    FPWord w(z3z2, {{0, 5}});
    CHECK(w.syllables()[0].exponent == 2);
    FPWord neg(z3z2, {{0, -1}});
    CHECK(neg.syllables()[0].exponent == 2);

    // Infinite factors keep arbitrary exponents.
    FPWord zw(zinfz2, {{0, -7}});
    CHECK(zw.syllables()[0].exponent == -7);
}

TEST_CASE("multiplication reduces at the seam") {
    FPWord a(z2z2, {{0, 1}});
    FPWord b(z2z2, {{1, 1}});
    CHECK(multiply(z2z2, a, a).empty());
    CHECK(multiply(z2z2, multiply(z2z2, a, b), multiply(z2z2, b, a)).empty());

    FPWord left(z3z2, {{0, 1}, {1, 1}});
    FPWord right(z3z2, {{1, 1}, {0, 2}});
    // a b b a^2 = a a^2 = a^3 = e: the cancellation cascades through.
    CHECK(multiply(z3z2, left, right).empty());

    // Deep cancellation: w * w^-1 = e for random words.
    for (int i = 0; i < 200; ++i) {
        std::mt19937_64 rng(seeds());
        const FactorSpec& spec = i % 2 == 0 ? z3z2 : zinfz2;
        FPWord w = random_word(rng, spec, static_cast<int>(rng() % 8));
        CHECK(multiply(spec, w, invert(spec, w)).empty());
        CHECK(multiply(spec, invert(spec, w), w).empty());
    }
}

TEST_CASE("group axioms on random triples") {
    for (int i = 0; i < 1000; ++i) {
        std::mt19937_64 rng(seeds());
        const FactorSpec& spec = i % 3 == 0 ? z2z2 : (i % 3 == 1 ? z3z2 : zinfz2);
        FPWord a = random_word(rng, spec, static_cast<int>(rng() % 6));
        FPWord b = random_word(rng, spec, static_cast<int>(rng() % 6));
        FPWord c = random_word(rng, spec, static_cast<int>(rng() % 6));
        CHECK(multiply(spec, multiply(spec, a, b), c) ==
              multiply(spec, a, multiply(spec, b, c)));
        CHECK(multiply(spec, a, FPWord()) == a);
        CHECK(multiply(spec, FPWord(), a) == a);
    }
}

TEST_CASE("palindromes") {
    CHECK(is_palindrome(FPWord()));
    CHECK(is_palindrome(FPWord(z2z2, {{0, 1}})));
    CHECK(is_palindrome(ab_word(3)));           // aba
    CHECK(!is_palindrome(ab_word(2)));          // ab
    CHECK(is_palindrome(FPWord(z3z2, {{0, 2}, {1, 1}, {0, 2}})));
    CHECK(!is_palindrome(FPWord(z3z2, {{0, 2}, {1, 1}, {0, 1}})));
}

TEST_CASE("normal form over Z2 * Z2") {
    CHECK(z2z2_normal_form(z2z2, FPWord()).shape == Z2Z2Shape::Empty);

    auto nf = z2z2_normal_form(z2z2, ab_word(4));  // abab = (ab)^2
    CHECK(nf.shape == Z2Z2Shape::AbPower);
    CHECK(nf.k == 2);

    auto nf2 = z2z2_normal_form(z2z2, ab_word(5));  // ababa = (ab)^2 a
    CHECK(nf2.shape == Z2Z2Shape::AbPowerA);
    CHECK(nf2.k == 2);

    auto nf3 = z2z2_normal_form(z2z2, ab_word(3, 1));  // bab
    CHECK(nf3.shape == Z2Z2Shape::BaPowerB);
    CHECK(nf3.k == 1);

    auto nf4 = z2z2_normal_form(z2z2, ab_word(2, 1));  // ba
    CHECK(nf4.shape == Z2Z2Shape::BaPower);
    CHECK(nf4.k == 1);

    CHECK_THROWS(z2z2_normal_form(z3z2, FPWord()));
}

TEST_CASE("z2z2_decompose: pinned examples") {
    auto empty = z2z2_decompose(z2z2, FPWord());
    CHECK(empty.factors.empty());

    auto single = z2z2_decompose(z2z2, FPWord(z2z2, {{1, 1}}));
    REQUIRE(single.factors.size() == 1);
    CHECK(single.factors[0].conjugator.empty());

    // aba = a b a^-1: one conjugate of the letter b.
    auto aba = z2z2_decompose(z2z2, ab_word(3));
    REQUIRE(aba.factors.size() == 1);
    CHECK(aba.factors[0].base == FPWord(z2z2, {{1, 1}}));
    CHECK(aba.factors[0].conjugator == FPWord(z2z2, {{0, 1}}));
    CHECK(verify_decomposition(z2z2, aba));

    // abab = (aba) * b: conjugate of a times conjugate of b.
    auto abab = z2z2_decompose(z2z2, ab_word(4));
    REQUIRE(abab.factors.size() == 2);
    CHECK(verify_decomposition(z2z2, abab));

    CHECK_THROWS(z2z2_decompose(z3z2, FPWord()));
}

TEST_CASE("z2z2_decompose: exhaustive through length 50") {
    // The only reduced words over Z2 * Z2 are the alternating ones: two
    // per length.
    int checked = 0;
    for (int len = 1; len <= 50; ++len)
        for (int first = 0; first < 2; ++first) {
            FPWord w = ab_word(len, first);
            auto d = z2z2_decompose(z2z2, w);
            CHECK(d.factors.size() <= 2);
            CHECK(verify_decomposition(z2z2, d));
            ++checked;
        }
    CHECK(checked == 100);
}

TEST_CASE("enumerate_words") {
    CHECK(enumerate_words(z2z2, 0).size() == 1);
    CHECK(enumerate_words(z2z2, 1).size() == 2);
    CHECK(enumerate_words(z2z2, 5).size() == 2);   // alternating only
    CHECK(enumerate_words(z2z2z2, 1).size() == 3);
    CHECK(enumerate_words(z2z2z2, 2).size() == 6);
    CHECK(enumerate_words(z3z2, 2).size() == 4);   // a b, a^2 b, b a, b a^2
    CHECK_THROWS(enumerate_words(zinfz2, 1));
}

TEST_CASE("palindrome closure holds for exponent-two free products") {
    CHECK(palindrome_closure_check(z2z2, 10, 6));
    CHECK(palindrome_closure_check(z2z2z2, 7, 5));
    CHECK_THROWS(palindrome_closure_check(z3z2, 3, 2));
}

TEST_CASE("palindrome closure fails beyond exponent two") {
    auto cex = palindrome_closure_counterexample(z3z2, 3, 2);
    REQUIRE(cex.has_value());
    auto [p, x] = *cex;
    CHECK(is_palindrome(p));
    CHECK(!is_palindrome(conjugate_word(z3z2, p, x)));
}

TEST_CASE("conjugation invariance of palindromes over Z2 * Z2") {
    for (int len = 1; len <= 12; ++len)
        for (int first = 0; first < 2; ++first) {
            FPWord w = ab_word(len, first);
            if (!is_palindrome(w)) continue;
            for (int cl = 1; cl <= 6; ++cl)
                for (int cf = 0; cf < 2; ++cf)
                    CHECK(is_palindrome(conjugate_word(z2z2, w, ab_word(cl, cf))));
        }
}

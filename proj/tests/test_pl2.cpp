#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cgt/pl2.hpp"

#include <random>

using namespace cgt;

namespace {

Dyadic d(long num, unsigned exp) { return Dyadic(Int(num), exp); }

PL2Map bump1() {
    return PL2Map::from_breakpoints({{d(0, 0), d(0, 0)},
                                     {d(1, 2), d(1, 2)},
                                     {d(1, 1), d(3, 3)},
                                     {d(5, 3), d(1, 1)},
                                     {d(3, 2), d(3, 2)},
                                     {d(1, 0), d(1, 0)}});
}

std::mt19937_64 seeds(777);

}  // namespace

TEST_CASE("standard generator evaluation") {
    auto [x0, x1] = standard_generators();
    CHECK(x0.evaluate(d(1, 1)) == d(1, 2));
    CHECK(x0.evaluate(Rational(Int(7), Int(8))) == Rational(Int(3), Int(4)));
    CHECK(PL2Map().evaluate(Rational(Int(5), Int(7))) == Rational(Int(5), Int(7)));
    CHECK(x1.evaluate(d(1, 2)) == d(1, 2));
    CHECK(x1.evaluate(d(3, 2)) == d(5, 3));
    CHECK_THROWS(x0.evaluate(Rational(2L)));
}

TEST_CASE("compose and invert basics") {
    auto [x0, x1] = standard_generators();
    CHECK(PL2Map().compose(x0) == x0);
    CHECK(x0.compose(x0.invert()) == PL2Map());
    CHECK(x0.compose(x0).evaluate(d(1, 1)) == d(1, 3));
    CHECK(x0.invert().breakpoints() ==
          std::vector<Breakpoint>{{d(0, 0), d(0, 0)},
                                  {d(1, 2), d(1, 1)},
                                  {d(1, 1), d(3, 2)},
                                  {d(1, 0), d(1, 0)}});
    CHECK(x1.invert().invert() == x1);
}

TEST_CASE("group axioms on random elements") {
    for (int i = 0; i < 60; ++i) {
        PL2Map f = random_fprime(seeds(), 2);
        PL2Map g = random_fprime(seeds(), 2);
        PL2Map h = random_fprime(seeds(), 2);
        CHECK(f.compose(g).compose(h) == f.compose(g.compose(h)));
        CHECK(f.compose(f.invert()) == PL2Map());
    }
}

TEST_CASE("evaluate distributes over composition") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        PL2Map f = random_fprime(seeds(), 2);
        PL2Map g = random_fprime(seeds(), 2);
        for (int j = 0; j < 10; ++j) {
            Dyadic x(Int(rng() % 129), 7);
            CHECK(f.compose(g).evaluate(x) == f.evaluate(g.evaluate(x)));
        }
    }
}

TEST_CASE("support") {
    CHECK(!PL2Map().support());
    auto sup = bump1().support();
    REQUIRE(sup);
    CHECK(sup->lo == d(1, 2));
    CHECK(sup->hi == d(3, 2));
    auto [x0, x1] = standard_generators();
    auto sup0 = x0.support();
    REQUIRE(sup0);
    CHECK(sup0->lo == d(0, 0));
    CHECK(sup0->hi == d(1, 0));
}

TEST_CASE("commutator subgroup membership") {
    auto [x0, x1] = standard_generators();
    CHECK(PL2Map().in_commutator_subgroup());
    CHECK(bump1().in_commutator_subgroup());
    CHECK(!x0.in_commutator_subgroup());
    PL2Map comm = x0.compose(x1).compose(x0.invert()).compose(x1.invert());
    CHECK(comm.in_commutator_subgroup());
    // closed under products and conjugation
    for (int i = 0; i < 30; ++i) {
        PL2Map f = random_fprime(seeds(), 2), g = random_fprime(seeds(), 2);
        CHECK(f.compose(g).in_commutator_subgroup());
        CHECK(x0.compose(f).compose(x0.invert()).in_commutator_subgroup());
    }
}

TEST_CASE("fixed_interval_analysis of bump1") {
    DisplacementData D = fixed_interval_analysis(bump1());
    CHECK(D.alpha0 == d(1, 2));
    CHECK(D.alpha1 == Rational(Int(3), Int(4)));
    CHECK(D.alpha == d(1, 1));
    CHECK(D.J.lo == d(3, 3));
    CHECK(D.J.hi == d(1, 1));

    DisplacementData Di = fixed_interval_analysis(bump1().invert());
    CHECK(Di.alpha0 == d(1, 2));
    CHECK(Di.alpha1 == Rational(Int(3), Int(4)));
    CHECK(Di.alpha == d(1, 1));
    CHECK(Di.J.lo == d(1, 1));
    CHECK(Di.J.hi == d(5, 3));

    CHECK_THROWS_WITH_AS(fixed_interval_analysis(PL2Map()), "nonidentity required",
                         std::invalid_argument);
}

TEST_CASE("fixed_interval_analysis invariants on random elements") {
    int done = 0;
    for (int i = 0; done < 100; ++i) {
        PL2Map f = random_fprime(seeds(), 3);
        if (f.is_identity()) continue;
        ++done;
        DisplacementData D = fixed_interval_analysis(f);
        // f fixes [0, alpha0] pointwise
        CHECK(f.evaluate(D.alpha0) == D.alpha0);
        Dyadic probe(D.alpha0.num(), D.alpha0.exp() + 1);
        CHECK(f.evaluate(probe) == probe);
        // no fixed point strictly between, sampled
        Rational lo = D.alpha0.to_rational(), hi = D.alpha1;
        for (int k = 1; k <= 7; ++k) {
            Rational x = lo + (hi - lo) * Rational(Int(k), Int(8));
            CHECK(f.evaluate(x) != x);
        }
        // alpha1 is fixed
        CHECK(f.evaluate(D.alpha1) == D.alpha1);
        // displacement for all m <= 8
        for (int m = 1; m <= 8; ++m) CHECK(displaces_check(f, D.J, m));
    }
}

TEST_CASE("displaces_check examples") {
    DyadicInterval J(d(3, 3), d(1, 1));
    CHECK(displaces_check(bump1(), J, 1));
    CHECK(displaces_check(bump1(), J, 5));
    CHECK(!displaces_check(PL2Map(), J, 1));
}

TEST_CASE("pl2_interval_map produces valid fragments") {
    auto frag = pl2_interval_map(d(0, 0), d(1, 0), d(0, 0), d(1, 0));
    CHECK(frag == std::vector<Breakpoint>{{d(0, 0), d(0, 0)}, {d(1, 0), d(1, 0)}});
    frag = pl2_interval_map(d(0, 0), d(1, 1), d(0, 0), d(1, 2));
    CHECK(frag == std::vector<Breakpoint>{{d(0, 0), d(0, 0)}, {d(1, 1), d(1, 2)}});
    // endpoints and monotone power-of-2 slopes on an uneven pair
    frag = pl2_interval_map(d(1, 2), d(3, 2), d(3, 3), d(7, 4));
    CHECK(frag.front() == Breakpoint{d(1, 2), d(3, 3)});
    CHECK(frag.back() == Breakpoint{d(3, 2), d(7, 4)});
    for (std::size_t i = 0; i + 1 < frag.size(); ++i) {
        CHECK(frag[i].first < frag[i + 1].first);
        CHECK(frag[i].second < frag[i + 1].second);
        Rational slope = (frag[i + 1].second - frag[i].second).to_rational() /
                         (frag[i + 1].first - frag[i].first).to_rational();
        Int n = slope.num(), q = slope.den();
        CHECK(((n & (n - 1)) == 0));
        CHECK(((q & (q - 1)) == 0));
    }
    CHECK_THROWS(pl2_interval_map(d(1, 1), d(1, 1), d(0, 0), d(1, 0)));
}

TEST_CASE("tuple_conjugator") {
    PL2Map rho = tuple_conjugator({d(1, 2), d(3, 2)}, {d(3, 3), d(7, 4)});
    CHECK(rho.in_commutator_subgroup());
    CHECK(rho.evaluate(d(1, 2)) == d(3, 3));
    CHECK(rho.evaluate(d(3, 2)) == d(7, 4));
    // fixing a tuple is allowed
    PL2Map fix = tuple_conjugator({d(1, 1)}, {d(1, 1)});
    CHECK(fix.in_commutator_subgroup());
    CHECK(fix.evaluate(d(1, 1)) == d(1, 1));
    CHECK_THROWS(tuple_conjugator({d(1, 1)}, {d(1, 1), d(3, 2)}));
    CHECK_THROWS(tuple_conjugator({d(3, 2), d(1, 1)}, {d(1, 2), d(1, 1)}));
    CHECK_THROWS(tuple_conjugator({d(0, 0)}, {d(1, 1)}));
}

TEST_CASE("move_support_into") {
    DyadicInterval J(d(3, 3), d(1, 1));
    CHECK(move_support_into({PL2Map()}, J) == PL2Map());
    // support already inside a wide interval: conjugate still lands inside
    DyadicInterval wide(d(1, 4), d(15, 4));
    {
        PL2Map rho = move_support_into({bump1()}, wide);
        PL2Map conj = rho.compose(bump1()).compose(rho.invert());
        auto sup = conj.support();
        REQUIRE(sup);
        CHECK(wide.lo < sup->lo);
        CHECK(sup->hi < wide.hi);
    }
    for (int i = 0; i < 25; ++i) {
        PL2Map g1 = random_fprime(seeds(), 2), g2 = random_fprime(seeds(), 2);
        PL2Map rho = move_support_into({g1, g2}, J);
        CHECK(rho.in_commutator_subgroup());
        for (const auto& g : {g1, g2}) {
            PL2Map conj = rho.compose(g).compose(rho.invert());
            auto sup = conj.support();
            if (!sup) continue;
            CHECK(J.lo < sup->lo);
            CHECK(sup->hi < J.hi);
        }
    }
}

TEST_CASE("random_fprime is deterministic and lands in the commutator subgroup") {
    CHECK(random_fprime(42, 3) == random_fprime(42, 3));
    int nonidentity = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        PL2Map f = random_fprime(s, 3);
        CHECK(f.in_commutator_subgroup());
        if (!f.is_identity()) ++nonidentity;
    }
    CHECK(nonidentity >= 90);
}

TEST_CASE("breakpoint validation rejects bad maps") {
    CHECK_THROWS(PL2Map::from_breakpoints({{d(0, 0), d(0, 0)}}));
    CHECK_THROWS(PL2Map::from_breakpoints({{d(1, 2), d(1, 2)}, {d(1, 0), d(1, 0)}}));
    CHECK_THROWS(PL2Map::from_breakpoints(
        {{d(0, 0), d(0, 0)}, {d(1, 1), d(3, 3)}, {d(1, 0), d(1, 0)}}));  // slope 3/4... not pow2
    // non-minimal list rejected unless minimize requested
    std::vector<Breakpoint> redundant{{d(0, 0), d(0, 0)}, {d(1, 1), d(1, 1)}, {d(1, 0), d(1, 0)}};
    CHECK_THROWS(PL2Map::from_breakpoints(redundant));
    CHECK(PL2Map::from_breakpoints(redundant, true) == PL2Map());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cgt/certificate.hpp"
#include "cgt/finite.hpp"
#include "cgt/sixconj.hpp"

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

// Random permutation of {0..size-1} inside a degree-d carrier.
Perm random_block_perm(std::mt19937_64& rng, int degree, int block) {
    std::vector<int> im(block);
    for (int i = 0; i < block; ++i) im[i] = i;
    std::shuffle(im.begin(), im.end(), rng);
    im.resize(degree);
    for (int i = block; i < degree; ++i) im[i] = i;
    return Perm(std::move(im));
}

// Cyclic shift by `block` on degree block*(m+1): displaces the first
// block off itself m times.
Perm shift_perm(int degree, int block) {
    std::vector<int> im(degree);
    for (int i = 0; i < degree; ++i) im[i] = (i + block) % degree;
    return Perm(std::move(im));
}

std::mt19937_64 seeds(4242);

}  // namespace

TEST_CASE("two f-commutators: permutation example") {
    PermGroupOps G{9};
    Perm a = Perm::parse_cycles("(0 1)", 9);
    Perm b = Perm::parse_cycles("(0 1 2)", 9);
    Perm f = Perm::parse_cycles("(0 3 6)(1 4 7)(2 5 8)", 9);
    auto [x, y] = two_f_commutators(G, a, b, f);
    CHECK(x.sign == -1);
    CHECK(y.sign == +1);
    CHECK(G.eq(G.mul(value(G, x, f), value(G, y, f)), commutator(G, a, b)));
}

TEST_CASE("two f-commutators: abelian ambient group") {
    PermGroupOps G{5};
    Perm c = Perm::parse_cycles("(0 1 2 3 4)", 5);
    Perm a = c * c, b = c * c * c, f = c;
    auto [x, y] = two_f_commutators(G, a, b, f);
    CHECK(G.eq(G.mul(value(G, x, f), value(G, y, f)), G.id()));
    CHECK(G.eq(commutator(G, a, b), G.id()));
}

TEST_CASE("two f-commutators: precondition is enforced") {
    PermGroupOps G{4};
    Perm a = Perm::parse_cycles("(0 1)", 4);
    Perm b = Perm::parse_cycles("(1 2)", 4);
    Perm f = Perm::parse_cycles("(2 3)", 4);
    // f b f^-1 = (1 3) does not commute with (0 1).
    CHECK_THROWS_AS(two_f_commutators(G, a, b, f), std::invalid_argument);
}

TEST_CASE("two f-commutators: displaced permutation campaign") {
    int cases = 0;
    while (cases < 130) {
        std::mt19937_64 rng(seeds());
        int block = 2 + static_cast<int>(rng() % 3);
        int degree = block * 2;
        PermGroupOps G{degree};
        Perm a = random_block_perm(rng, degree, block);
        Perm b = random_block_perm(rng, degree, block);
        Perm f = shift_perm(degree, block);
        auto [x, y] = two_f_commutators(G, a, b, f);
        CHECK(G.eq(G.mul(value(G, x, f), value(G, y, f)), commutator(G, a, b)));
        ++cases;
    }
}

TEST_CASE("two f-commutators in F with supports moved into J") {
    PL2Map f = bump1();
    Pl2Group G;
    auto D = fixed_interval_analysis(f);
    for (int i = 0; i < 12; ++i) {
        PL2Map a = random_fprime(seeds(), 2);
        PL2Map b = random_fprime(seeds(), 2);
        PL2Map rho = move_support_into({a, b}, D.J);
        PL2Map ar = conjugate(G, a, rho), br = conjugate(G, b, rho);
        auto [x, y] = two_f_commutators(G, ar, br, f);
        CHECK(G.eq(G.mul(value(G, x, f), value(G, y, f)), commutator(G, ar, br)));
    }
}

TEST_CASE("telescope: empty list") {
    PermGroupOps G{6};
    CommutatorList<Perm> cs;
    Perm f = Perm::parse_cycles("(0 1 2 3 4 5)", 6);
    auto t = telescope(G, cs, f);
    CHECK(t.g_part.is_identity());
    CHECK(t.a_prime.is_identity());
    CHECK(t.b_prime.is_identity());
}

TEST_CASE("telescope: m = 1 needs no displacement") {
    for (int i = 0; i < 50; ++i) {
        std::mt19937_64 rng(seeds());
        PermGroupOps G{5};
        CommutatorList<Perm> cs;
        cs.pairs.emplace_back(random_block_perm(rng, 5, 5), random_block_perm(rng, 5, 5));
        Perm f = random_block_perm(rng, 5, 5);
        auto t = telescope(G, cs, f);
        Perm lhs = value(G, cs);
        Perm rhs = G.mul(commutator(G, t.g_part, f), commutator(G, t.a_prime, t.b_prime));
        CHECK(G.eq(lhs, rhs));
        CHECK(G.eq(t.g_part, value(G, cs)));  // m=1: g is the whole product
    }
}

TEST_CASE("telescope: m = 3 blocks in S12 displaced by a shift") {
    std::mt19937_64 rng(2026);
    PermGroupOps G{12};
    Perm f = shift_perm(12, 3);
    CommutatorList<Perm> cs;
    for (int i = 0; i < 3; ++i)
        cs.pairs.emplace_back(random_block_perm(rng, 12, 3), random_block_perm(rng, 12, 3));
    auto t = telescope(G, cs, f);
    Perm lhs = value(G, cs);
    CHECK(G.eq(lhs, G.mul(commutator(G, t.g_part, f), commutator(G, t.a_prime, t.b_prime))));
    auto [c1, c2] = commutator_length_two(G, cs, f);
    CHECK(G.eq(lhs, G.mul(c1, c2)));
}

TEST_CASE("telescope: displaced permutation campaign") {
    for (int i = 0; i < 100; ++i) {
        std::mt19937_64 rng(seeds());
        int block = 2 + static_cast<int>(rng() % 3);
        int m = 2 + static_cast<int>(rng() % 3);
        int degree = block * (m + 1);
        PermGroupOps G{degree};
        Perm f = shift_perm(degree, block);
        CommutatorList<Perm> cs;
        for (int k = 0; k < m; ++k)
            cs.pairs.emplace_back(random_block_perm(rng, degree, block),
                                  random_block_perm(rng, degree, block));
        auto t = telescope(G, cs, f);
        CHECK(G.eq(value(G, cs),
                   G.mul(commutator(G, t.g_part, f), commutator(G, t.a_prime, t.b_prime))));
    }
}

TEST_CASE("telescope: commutation precondition is enforced") {
    PermGroupOps G{4};
    CommutatorList<Perm> cs;
    cs.pairs.emplace_back(Perm::parse_cycles("(0 1)", 4), Perm::parse_cycles("(0 1 2)", 4));
    cs.pairs.emplace_back(Perm::parse_cycles("(1 2)", 4), Perm::parse_cycles("(2 3)", 4));
    Perm f = Perm::parse_cycles("(0 1 2 3)", 4);
    CHECK_THROWS_AS(telescope(G, cs, f), std::invalid_argument);
}

TEST_CASE("telescope: m = 2 Thompson scenario") {
    PL2Map f = bump1();
    Pl2Group G;
    auto D = fixed_interval_analysis(f);
    REQUIRE(displaces_check(f, D.J, 2));
    for (int i = 0; i < 5; ++i) {
        CommutatorList<PL2Map> cs;
        std::vector<PL2Map> entries;
        for (int k = 0; k < 2; ++k) {
            entries.push_back(random_fprime(seeds(), 2));
            entries.push_back(random_fprime(seeds(), 2));
        }
        PL2Map rho = move_support_into(entries, D.J);
        for (int k = 0; k < 2; ++k)
            cs.pairs.emplace_back(conjugate(G, entries[2 * k], rho),
                                  conjugate(G, entries[2 * k + 1], rho));
        auto [c1, c2] = commutator_length_two(G, cs, f);
        CHECK(G.eq(value(G, cs), G.mul(c1, c2)));
    }
}

TEST_CASE("fcommutator expansion") {
    PermGroupOps G{9};
    Perm f = Perm::parse_cycles("(0 3 6)(1 4 7)(2 5 8)", 9);

    FCommutatorWitness<Perm> trivial{G.id(), G.id(), +1};
    auto fs = fcommutator_to_conjugates(G, trivial);
    REQUIRE(fs.size() == 2);
    ConjugateCertificate<Perm> c{f, G.id(), fs};
    CHECK(verify_certificate(G, c));

    for (int i = 0; i < 40; ++i) {
        std::mt19937_64 rng(seeds());
        FCommutatorWitness<Perm> w{random_block_perm(rng, 9, 9), random_block_perm(rng, 9, 9),
                                   rng() % 2 == 0 ? +1 : -1};
        ConjugateCertificate<Perm> cert{f, value(G, w, f), fcommutator_to_conjugates(G, w)};
        CHECK(verify_certificate(G, cert));
    }
}

TEST_CASE("fcommutator expansion for random F witnesses") {
    Pl2Group G;
    PL2Map f = bump1();
    for (int i = 0; i < 8; ++i) {
        FCommutatorWitness<PL2Map> w{random_fprime(seeds(), 2), random_fprime(seeds(), 2),
                                     i % 2 == 0 ? +1 : -1};
        ConjugateCertificate<PL2Map> cert{f, value(G, w, f), fcommutator_to_conjugates(G, w)};
        CHECK(verify_certificate(G, cert));
    }
}

TEST_CASE("verify_certificate basics and mutation") {
    Pl2Group G;
    PL2Map f = bump1();

    ConjugateCertificate<PL2Map> empty{f, G.id(), {}};
    CHECK(verify_certificate(G, empty));

    ConjugateCertificate<PL2Map> single{f, f, {{G.id(), +1}}};
    CHECK(verify_certificate(G, single));

    CommutatorList<PL2Map> cs;
    cs.pairs.emplace_back(random_fprime(11, 2), random_fprime(12, 2));
    auto cert = six_conjugates(cs, f);
    REQUIRE(verify_certificate(G, cert));
    REQUIRE(!cert.factors.empty());

    auto tampered = cert;
    tampered.factors[0].sign = -tampered.factors[0].sign;
    CHECK(!verify_certificate(G, tampered));

    auto tampered2 = cert;
    tampered2.factors.back().conjugator =
        tampered2.factors.back().conjugator.compose(standard_generators().first);
    CHECK(!verify_certificate(G, tampered2));
}

TEST_CASE("certificates are conjugation-invariant") {
    Pl2Group G;
    PL2Map f = bump1();
    CommutatorList<PL2Map> cs;
    cs.pairs.emplace_back(random_fprime(21, 2), random_fprime(22, 2));
    auto cert = six_conjugates(cs, f);
    REQUIRE(verify_certificate(G, cert));
    for (int i = 0; i < 5; ++i) {
        PL2Map w = random_fprime(seeds(), 2);
        auto moved = cert;
        moved.base = conjugate(G, cert.base, w);
        moved.target = conjugate(G, cert.target, w);
        for (auto& fac : moved.factors) fac.conjugator = conjugate(G, fac.conjugator, w);
        CHECK(verify_certificate(G, moved));
    }
}

TEST_CASE("six_conjugates: trivial and single-commutator cases") {
    Pl2Group G;
    PL2Map f = bump1();

    auto empty = six_conjugates(CommutatorList<PL2Map>{}, f);
    CHECK(empty.factors.empty());
    CHECK(empty.target == PL2Map());
    CHECK(verify_certificate(G, empty));

    for (std::uint64_t s = 1; s <= 6; ++s) {
        CommutatorList<PL2Map> cs;
        cs.pairs.emplace_back(random_fprime(100 + s, 2), random_fprime(200 + s, 2));
        auto cert = six_conjugates(cs, f);
        CHECK(cert.factors.size() <= 6);
        CHECK(cert.base == f);
        CHECK(cert.target == value(G, cs));
        CHECK(verify_certificate(G, cert));
    }
}

TEST_CASE("six_conjugates: longer commutator words and random f") {
    Pl2Group G;
    for (int i = 0; i < 10; ++i) {
        PL2Map f;
        std::uint64_t s = seeds();
        while (f.is_identity()) f = random_fprime(s++, 2);
        CommutatorList<PL2Map> cs;
        int m = 1 + static_cast<int>(seeds() % 3);
        for (int k = 0; k < m; ++k)
            cs.pairs.emplace_back(random_fprime(seeds(), 2), random_fprime(seeds(), 2));
        auto cert = six_conjugates(cs, f);
        CHECK(cert.factors.size() <= 6);
        CHECK(cert.target == value(G, cs));
        CHECK(verify_certificate(G, cert));
    }
}

TEST_CASE("six_conjugates rejects bad inputs") {
    CommutatorList<PL2Map> cs;
    auto [x0, x1] = standard_generators();
    CHECK_THROWS(six_conjugates(cs, PL2Map()));  // identity f
    CHECK_THROWS(six_conjugates(cs, x0));        // f outside the commutator subgroup
    CommutatorList<PL2Map> bad;
    bad.pairs.emplace_back(x0, random_fprime(5, 2));
    CHECK_THROWS(six_conjugates(bad, bump1()));  // entry outside the commutator subgroup
}

#pragma once

// Generic f-commutator machinery over any exact group: commutator lists,
// witnesses, conjugate certificates, the telescoping rewriting and the
// two-f-commutator identity. Works uniformly for PL2 maps, permutations,
// integer matrices and free-product words through a tiny group-ops
// context (multiply, invert, identity, equality — all exact).

#include <concepts>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cgt {

template <class G>
concept GroupOps = requires(const G& g, const typename G::Element& a,
                            const typename G::Element& b) {
    { g.mul(a, b) } -> std::same_as<typename G::Element>;
    { g.inv(a) } -> std::same_as<typename G::Element>;
    { g.id() } -> std::same_as<typename G::Element>;
    { g.eq(a, b) } -> std::same_as<bool>;
};

// [x,y] = x y x^-1 y^-1.
template <GroupOps G>
typename G::Element commutator(const G& g, const typename G::Element& x,
                               const typename G::Element& y) {
    return g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y)));
}

// h g h^-1.
template <GroupOps G>
typename G::Element conjugate(const G& g, const typename G::Element& x,
                              const typename G::Element& h) {
    return g.mul(g.mul(h, x), g.inv(h));
}

// Product of commutators [a_i, b_i], evaluated left to right.
template <class E>
struct CommutatorList {
    std::vector<std::pair<E, E>> pairs;
};

template <GroupOps G>
typename G::Element value(const G& g, const CommutatorList<typename G::Element>& cs) {
    typename G::Element acc = g.id();
    for (const auto& [a, b] : cs.pairs) acc = g.mul(acc, commutator(g, a, b));
    return acc;
}

// u [f,w]^sign u^-1 for the ambient element f.
template <class E>
struct FCommutatorWitness {
    E conjugator;
    E inner;
    int sign;  // +1 or -1
};

template <GroupOps G>
typename G::Element value(const G& g, const FCommutatorWitness<typename G::Element>& w,
                          const typename G::Element& f) {
    typename G::Element c = commutator(g, f, w.inner);
    if (w.sign < 0) c = g.inv(c);
    return conjugate(g, c, w.conjugator);
}

// Claim: prod_i u_i f^{eps_i} u_i^-1 = target. Re-verifiable by exact
// multiplication; the factor count is the width claim.
template <class E>
struct ConjugateCertificate {
    static constexpr int kFormatVersion = 1;

    E base;
    E target;
    struct Factor {
        E conjugator;
        int sign;  // +1 or -1
    };
    std::vector<Factor> factors;
};

template <GroupOps G>
bool verify_certificate(const G& g, const ConjugateCertificate<typename G::Element>& c) {
    typename G::Element acc = g.id();
    typename G::Element binv = g.inv(c.base);
    for (const auto& fac : c.factors) {
        if (fac.sign != 1 && fac.sign != -1) return false;
        acc = g.mul(acc, conjugate(g, fac.sign > 0 ? c.base : binv, fac.conjugator));
    }
    return g.eq(acc, c.target);
}

// [a,b] = a [f,b]^-1 a^-1 * [f,b], valid whenever a commutes with f b f^-1.
template <GroupOps G>
std::pair<FCommutatorWitness<typename G::Element>, FCommutatorWitness<typename G::Element>>
two_f_commutators(const G& g, const typename G::Element& a, const typename G::Element& b,
                  const typename G::Element& f) {
    typename G::Element fbf = conjugate(g, b, f);
    if (!g.eq(g.mul(a, fbf), g.mul(fbf, a)))
        throw std::invalid_argument("two_f_commutators: a does not commute with f b f^-1");
    FCommutatorWitness<typename G::Element> x{a, b, -1};
    FCommutatorWitness<typename G::Element> y{g.id(), b, +1};
    return {x, y};
}

template <class E>
struct TelescopeResult {
    E g_part;   // [g_part, f] is the f-commutator side
    E a_prime;  // [a_prime, b_prime] is the plain commutator side
    E b_prime;
};

namespace detail {

// Exact pairwise check that conjugates of the entries by distinct powers
// of f commute (the displacement hypothesis). O((m^2) (2m)^2) products;
// the lists involved are tiny.
template <GroupOps G>
void check_blocks_commute(const G& g, const CommutatorList<typename G::Element>& cs,
                          const typename G::Element& f) {
    using E = typename G::Element;
    std::size_t m = cs.pairs.size();
    std::vector<E> entries;
    for (const auto& [a, b] : cs.pairs) {
        entries.push_back(a);
        entries.push_back(b);
    }
    std::vector<std::vector<E>> blocks;
    E fp = g.id();
    for (std::size_t k = 0; k <= m; ++k) {
        std::vector<E> blk;
        for (const auto& e : entries) blk.push_back(conjugate(g, e, fp));
        blocks.push_back(std::move(blk));
        fp = g.mul(fp, f);
    }
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            for (const auto& x : blocks[i])
                for (const auto& y : blocks[j])
                    if (!g.eq(g.mul(x, y), g.mul(y, x)))
                        throw std::invalid_argument(
                            "telescope: displaced blocks do not commute");
}

}  // namespace detail

// Rewrites a product of m commutators as [g,f] * [A',B']:
// with h_i = c_{i+1}...c_m, g = prod_{i=0}^{m-1} f^i h_i f^-i,
// A' = prod_j f^j a_j f^-j, B' = prod_j f^j b_j f^-j.
// For m <= 1 the identity is unconditional; for m >= 2 it needs the
// displacement hypothesis, which is checked exactly.
template <GroupOps G>
TelescopeResult<typename G::Element> telescope(const G& g,
                                               const CommutatorList<typename G::Element>& cs,
                                               const typename G::Element& f) {
    using E = typename G::Element;
    std::size_t m = cs.pairs.size();
    if (m >= 2) detail::check_blocks_commute(g, cs, f);
    std::vector<E> c;
    for (const auto& [a, b] : cs.pairs) c.push_back(commutator(g, a, b));
    // h[i] = c_{i+1} ... c_m
    std::vector<E> h(m + 1, g.id());
    for (std::size_t i = m; i-- > 0;) h[i] = g.mul(c[i], h[i + 1]);
    E gpart = g.id(), aprime = g.id(), bprime = g.id();
    E fp = g.id();
    for (std::size_t i = 0; i < m; ++i) {
        gpart = g.mul(gpart, conjugate(g, h[i], fp));
        fp = g.mul(fp, f);
        aprime = g.mul(aprime, conjugate(g, cs.pairs[i].first, fp));
        bprime = g.mul(bprime, conjugate(g, cs.pairs[i].second, fp));
    }
    return {gpart, aprime, bprime};
}

// The same rewriting, returned as the two commutator factors whose
// product is value(cs).
template <GroupOps G>
std::pair<typename G::Element, typename G::Element> commutator_length_two(
    const G& g, const CommutatorList<typename G::Element>& cs, const typename G::Element& f) {
    auto t = telescope(g, cs, f);
    return {commutator(g, t.g_part, f), commutator(g, t.a_prime, t.b_prime)};
}

// Expands u [f,w]^s u^-1 into two certificate factors over base f, using
// [f,w] = f * (w f^-1 w^-1).
template <GroupOps G>
std::vector<typename ConjugateCertificate<typename G::Element>::Factor>
fcommutator_to_conjugates(const G& g, const FCommutatorWitness<typename G::Element>& w) {
    using Factor = typename ConjugateCertificate<typename G::Element>::Factor;
    if (w.sign > 0)
        return {Factor{w.conjugator, +1}, Factor{g.mul(w.conjugator, w.inner), -1}};
    return {Factor{g.mul(w.conjugator, w.inner), +1}, Factor{w.conjugator, -1}};
}

}  // namespace cgt

#include "cgt/sixconj.hpp"

namespace cgt {

ConjugateCertificate<PL2Map> six_conjugates(const CommutatorList<PL2Map>& h_cs,
                                            const PL2Map& f) {
    Pl2Group G;
    if (f.is_identity()) throw std::invalid_argument("nonidentity required");
    if (!f.in_commutator_subgroup())
        throw std::invalid_argument("commutator-subgroup element required");
    for (const auto& [a, b] : h_cs.pairs)
        if (!a.in_commutator_subgroup() || !b.in_commutator_subgroup())
            throw std::invalid_argument("commutator entries must lie in the commutator subgroup");

    PL2Map target = value(G, h_cs);
    ConjugateCertificate<PL2Map> cert{f, target, {}};
    if (h_cs.pairs.empty()) {
        if (!verify_certificate(G, cert)) throw std::logic_error("empty certificate invalid");
        return cert;
    }

    DisplacementData D = fixed_interval_analysis(f);

    // Move every entry into the displaced interval J.
    std::vector<PL2Map> entries;
    for (const auto& [a, b] : h_cs.pairs) {
        entries.push_back(a);
        entries.push_back(b);
    }
    PL2Map rho = move_support_into(entries, D.J);
    CommutatorList<PL2Map> moved;
    for (const auto& [a, b] : h_cs.pairs)
        moved.pairs.emplace_back(conjugate(G, a, rho), conjugate(G, b, rho));

    // rho h rho^-1 = [g, f] * [A', B'].
    auto tel = telescope(G, moved, f);

    // Pull [A', B'] back into J so the two-f-commutator identity applies.
    PL2Map c = move_support_into({tel.a_prime, tel.b_prime}, D.J);
    PL2Map a2 = conjugate(G, tel.a_prime, c);
    PL2Map b2 = conjugate(G, tel.b_prime, c);
    auto [wx, wy] = two_f_commutators(G, a2, b2, f);

    PL2Map cinv = c.invert();
    FCommutatorWitness<PL2Map> w1{G.id(), tel.g_part, -1};  // [g,f] = [f,g]^-1
    FCommutatorWitness<PL2Map> w2{G.mul(cinv, wx.conjugator), wx.inner, wx.sign};
    FCommutatorWitness<PL2Map> w3{G.mul(cinv, wy.conjugator), wy.inner, wy.sign};

    PL2Map rhoinv = rho.invert();
    for (const auto& w : {w1, w2, w3})
        for (auto fac : fcommutator_to_conjugates(G, w))
            cert.factors.push_back({G.mul(rhoinv, fac.conjugator), fac.sign});

    if (!verify_certificate(G, cert))
        throw std::logic_error("six_conjugates produced an invalid certificate");
    return cert;
}

}  // namespace cgt

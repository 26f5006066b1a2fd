#pragma once

// The six-conjugate decomposition pipeline: any product of commutators of
// commutator-subgroup elements is rewritten as a product of at most six
// conjugates of f^{+-1}, for any fixed nonidentity f in the commutator
// subgroup. Every certificate is re-verified by exact multiplication
// before being returned.

#include "cgt/certificate.hpp"
#include "cgt/pl2.hpp"

namespace cgt {

// Group-ops context for PL2 maps; mul(f,g) applies g first.
struct Pl2Group {
    using Element = PL2Map;
    PL2Map mul(const PL2Map& a, const PL2Map& b) const { return a.compose(b); }
    PL2Map inv(const PL2Map& a) const { return a.invert(); }
    PL2Map id() const { return PL2Map(); }
    bool eq(const PL2Map& a, const PL2Map& b) const { return a == b; }
};

ConjugateCertificate<PL2Map> six_conjugates(const CommutatorList<PL2Map>& h_cs,
                                            const PL2Map& f);

}  // namespace cgt

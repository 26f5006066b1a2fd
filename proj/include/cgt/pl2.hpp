#pragma once

// Exact arithmetic in the group of piecewise-linear increasing
// self-homeomorphisms of [0,1] with dyadic breakpoints and power-of-2
// slopes, together with the fixed-point / displacement machinery and
// constructive dyadic-transitivity conjugators used by the
// conjugate-decomposition pipeline.

#include "cgt/dyadic.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cgt {

struct DyadicInterval {
    Dyadic lo;
    Dyadic hi;

    DyadicInterval(Dyadic l, Dyadic h);
    friend bool operator==(const DyadicInterval& a, const DyadicInterval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

using Breakpoint = std::pair<Dyadic, Dyadic>;

class PL2Map {
public:
    // Identity map.
    PL2Map();

    // Validates all invariants: endpoints (0,0) and (1,1), strictly
    // increasing coordinates, power-of-2 slopes, minimality (unless
    // minimize is set, in which case redundant breakpoints are dropped
    // first). Throws std::invalid_argument naming the violated invariant.
    static PL2Map from_breakpoints(std::vector<Breakpoint> bps, bool minimize = false);

    const std::vector<Breakpoint>& breakpoints() const { return bp_; }
    bool is_identity() const { return bp_.size() == 2; }

    // Slope exponent of the segment starting at breakpoint i.
    int slope_log2(std::size_t i) const;

    Rational evaluate(const Rational& x) const;
    Dyadic evaluate(const Dyadic& x) const;

    // (*this) after g: x -> this(g(x)).
    PL2Map compose(const PL2Map& g) const;
    PL2Map invert() const;

    // Minimal closed interval containing {x : f(x) != x}; empty iff identity.
    std::optional<DyadicInterval> support() const;

    // True iff the map is the identity on a neighbourhood of 0 and of 1.
    bool in_commutator_subgroup() const;

    // Structural equality (breakpoint lists are kept minimal).
    friend bool operator==(const PL2Map& a, const PL2Map& b) { return a.bp_ == b.bp_; }
    friend bool operator!=(const PL2Map& a, const PL2Map& b) { return !(a == b); }

private:
    std::vector<Breakpoint> bp_;
    void minimize();
    void validate() const;
};

// First maximal fixed prefix [0, alpha0], first fixed point alpha1 after it,
// a dyadic alpha strictly between, and the displaced interval J with
// endpoints alpha and f(alpha).
struct DisplacementData {
    Dyadic alpha0;
    Rational alpha1;
    Dyadic alpha;
    DyadicInterval J;
};

// Requires a nonidentity element of the commutator subgroup.
DisplacementData fixed_interval_analysis(const PL2Map& f);

// True iff the closed images f^i(J), 0 <= i <= m, are pairwise disjoint
// as open intervals (shared endpoints allowed).
bool displaces_check(const PL2Map& f, const DyadicInterval& J, int m);

// Increasing PL fragment [p,q] -> [r,s] with dyadic breakpoints and
// power-of-2 slopes; endpoints map p -> r, q -> s.
std::vector<Breakpoint> pl2_interval_map(const Dyadic& p, const Dyadic& q,
                                         const Dyadic& r, const Dyadic& s);

// An element of the commutator subgroup taking xs[i] to ys[i] for every i.
// Both tuples strictly increasing inside (0,1).
PL2Map tuple_conjugator(const std::vector<Dyadic>& xs, const std::vector<Dyadic>& ys);

// A commutator-subgroup element rho with support(rho g rho^-1) inside J
// for every g in gs.
PL2Map move_support_into(const std::vector<PL2Map>& gs, const DyadicInterval& J);

// The standard pair (x0, x1) generating the whole group.
std::pair<PL2Map, PL2Map> standard_generators();

// Deterministic pseudo-random commutator-subgroup element: a product of
// at most `complexity` conjugated commutators of short words in x0, x1.
PL2Map random_fprime(std::uint64_t seed, int complexity);

}  // namespace cgt

#pragma once

// Finite permutation-group engine: closures, conjugacy-class-closed sets,
// exact widths by ball growth, the subgroup-generation lemma for cosets
// meeting a ball, the extension width bound, and the norm / metric /
// chain constructions they induce.

#include "cgt/perm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cgt {

// Group-ops context over permutations of a fixed degree.
struct PermGroupOps {
    using Element = Perm;
    int degree = 0;
    Perm mul(const Perm& a, const Perm& b) const { return a * b; }
    Perm inv(const Perm& a) const { return a.inverse(); }
    Perm id() const { return Perm::identity(degree); }
    bool eq(const Perm& a, const Perm& b) const { return a == b; }
};

// Sorted, duplicate-free element list.
using ElementSet = std::vector<Perm>;

ElementSet make_set(std::vector<Perm> elems);
bool set_contains(const ElementSet& s, const Perm& p);
bool is_symmetric(const ElementSet& s);

class FiniteGroup {
public:
    static constexpr std::size_t kSizeGuard = 1'000'000;

    // Product closure of the generators; throws when the guard is exceeded.
    static FiniteGroup closure(int degree, std::vector<Perm> generators,
                               std::size_t guard = kSizeGuard);

    int degree() const { return degree_; }
    std::size_t size() const { return elements_.size(); }
    const ElementSet& elements() const { return elements_; }
    const std::vector<Perm>& generators() const { return generators_; }
    Perm identity() const { return Perm::identity(degree_); }

    bool contains(const Perm& p) const { return set_contains(elements_, p); }
    // Index into elements(); throws when absent.
    std::size_t index_of(const Perm& p) const;

    bool is_subgroup(const FiniteGroup& h) const;  // h <= *this as sets
    bool is_normal(const FiniteGroup& h) const;

private:
    int degree_ = 0;
    ElementSet elements_;
    std::vector<Perm> generators_;
};

// Union of the conjugacy classes of S and S^-1: the smallest symmetric
// conjugation-invariant superset of S.
ElementSet class_closure(const FiniteGroup& G, const ElementSet& S);
bool is_class_closed(const FiniteGroup& G, const ElementSet& S);

// Products of at most n elements of U (the identity included).
ElementSet ball(const FiniteGroup& G, const ElementSet& U, int n);

struct WidthReport {
    int width = 0;
    std::vector<std::size_t> ball_sizes;  // |B_0|, |B_1|, ... up to stabilization
    std::vector<int> lengths;             // indexed like G.elements()
};

// Exact width of G with respect to S union S^-1; throws when S does not
// generate G.
WidthReport width(const FiniteGroup& G, const ElementSet& S);

// Width bound through finitely many generating conjugacy classes:
// with N the width over the class union and p the largest S-length of a
// class representative, checks wid(G,S) <= p N.
bool trivlemma_bound_check(const FiniteGroup& G, const std::vector<ElementSet>& classes,
                           const ElementSet& S);

// When every coset Hg meets the n-ball of the symmetric set U, the
// elements of H of U-length at most 2n+1 generate H. Throws when the
// coset hypothesis fails.
bool bergman_lemma_check(const FiniteGroup& G, const FiniteGroup& H, const ElementSet& U,
                         int n);

struct ExtensionBoundReport {
    int quotient_width = 0;       // n = wid(G/H, f(U))
    int subgroup_width = 0;       // m = wid(H, H cap U^{2n+1})
    int group_width = 0;          // wid(G, U)
    bool bound_holds = false;     // wid(G,U) <= n + (2n+1) m
    bool intersection_class_closed_in_h = false;
};

// Quotient of G by the normal subgroup H, materialized as a permutation
// group on the cosets; also returns the induced image of each element of
// `lift` (in the same order).
FiniteGroup quotient_group(const FiniteGroup& G, const FiniteGroup& H,
                           const std::vector<Perm>& lift, std::vector<Perm>& images);

ExtensionBoundReport extension_bound_check(const FiniteGroup& G, const FiniteGroup& H,
                                           const ElementSet& U);

// Conjugation-invariant norm values, indexed like G.elements().
struct NormTable {
    const FiniteGroup* group = nullptr;
    std::vector<long long> values;

    long long at(const Perm& p) const { return values[group->index_of(p)]; }
};

// Witness text when one of the four norm axioms fails; empty otherwise.
std::optional<std::string> audit_norm_axioms(const NormTable& L);

NormTable word_norm(const FiniteGroup& G, const ElementSet& S);

// Increasing chain of normal subgroups N_0 = {1} <= ... <= N_r = G.
struct SubgroupChain {
    std::vector<FiniteGroup> members;
};

void validate_chain(const FiniteGroup& G, const SubgroupChain& chain);

// L(g) = least k with g in N_k.
NormTable chain_norm(const FiniteGroup& G, const SubgroupChain& chain);

// d(a,b) = L(a b^-1), indexed like G.elements() on both axes.
std::vector<std::vector<long long>> induced_metric(const NormTable& L);
std::optional<std::string> audit_metric(const NormTable& L,
                                        const std::vector<std::vector<long long>>& d);

// Action of G by isometries on finitely many points.
struct IsometricAction {
    int num_points = 0;
    std::vector<std::vector<long long>> dist;  // metric on points
    std::vector<std::vector<int>> act;         // act[element index][point]
};

struct ActionChainResult {
    // membership masks of U_0 subset ... subset U_m = G, indexed like G.elements()
    std::vector<std::vector<char>> chain;
    int terminal_index = 0;       // least m with U_m = G
    long long orbit_diameter = 0; // diameter of the basepoint orbit, <= 2m
};

// U_n = {g : d(a, ga) <= n}. Verifies the isometry and conjugation
// conditions and the three chain properties; throws with a witness when
// a condition fails.
ActionChainResult chain_from_action(const FiniteGroup& G, const IsometricAction& action,
                                    int basepoint);

// The left action of G on itself with the metric induced by L.
IsometricAction left_action_on_self(const FiniteGroup& G, const NormTable& L);

}  // namespace cgt

#include "cgt/finite.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cgt {

ElementSet make_set(std::vector<Perm> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return elems;
}

bool set_contains(const ElementSet& s, const Perm& p) {
    return std::binary_search(s.begin(), s.end(), p);
}

bool is_symmetric(const ElementSet& s) {
    for (const auto& p : s)
        if (!set_contains(s, p.inverse())) return false;
    return true;
}

FiniteGroup FiniteGroup::closure(int degree, std::vector<Perm> generators,
                                 std::size_t guard) {
    for (const auto& g : generators)
        if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    FiniteGroup G;
    G.degree_ = degree;
    G.generators_ = generators;
    ElementSet elems{Perm::identity(degree)};
    std::deque<Perm> frontier(elems.begin(), elems.end());
    while (!frontier.empty()) {
        Perm p = frontier.front();
        frontier.pop_front();
        for (const auto& g : generators) {
            for (const Perm& q : {p * g, p * g.inverse()}) {
                if (!set_contains(elems, q)) {
                    elems.insert(std::lower_bound(elems.begin(), elems.end(), q), q);
                    if (elems.size() > guard)
                        throw std::invalid_argument("group size guard exceeded");
                    frontier.push_back(q);
                }
            }
        }
    }
    G.elements_ = std::move(elems);
    return G;
}

std::size_t FiniteGroup::index_of(const Perm& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p)
        throw std::invalid_argument("element not in group");
    return static_cast<std::size_t>(it - elements_.begin());
}

bool FiniteGroup::is_subgroup(const FiniteGroup& h) const {
    if (h.degree_ != degree_) return false;
    for (const auto& p : h.elements_)
        if (!contains(p)) return false;
    return true;
}

bool FiniteGroup::is_normal(const FiniteGroup& h) const {
    if (!is_subgroup(h)) return false;
    for (const auto& g : elements_)
        for (const auto& x : h.elements_)
            if (!h.contains(g * x * g.inverse())) return false;
    return true;
}

ElementSet class_closure(const FiniteGroup& G, const ElementSet& S) {
    std::vector<Perm> out;
    for (const auto& s : S) {
        if (!G.contains(s)) throw std::invalid_argument("set element not in group");
        for (const auto& g : G.elements()) {
            out.push_back(g * s * g.inverse());
            out.push_back(g * s.inverse() * g.inverse());
        }
    }
    return make_set(std::move(out));
}

bool is_class_closed(const FiniteGroup& G, const ElementSet& S) {
    for (const auto& s : S)
        for (const auto& g : G.elements())
            if (!set_contains(S, g * s * g.inverse())) return false;
    return true;
}

namespace {

// Lengths of every reachable element with respect to S union S^-1,
// plus the ball-size profile. Unreached elements get -1.
std::pair<std::vector<int>, std::vector<std::size_t>> bfs_lengths(const FiniteGroup& G,
                                                                  const ElementSet& S) {
    std::vector<Perm> gens;
    for (const auto& s : S) {
        gens.push_back(s);
        gens.push_back(s.inverse());
    }
    std::vector<int> len(G.size(), -1);
    len[G.index_of(G.identity())] = 0;
    std::vector<std::size_t> ball_sizes{1};
    std::deque<Perm> frontier{G.identity()};
    int level = 0;
    std::size_t reached = 1;
    while (!frontier.empty()) {
        ++level;
        std::deque<Perm> next;
        for (const auto& p : frontier) {
            for (const auto& g : gens) {
                Perm q = p * g;
                std::size_t i = G.index_of(q);
                if (len[i] < 0) {
                    len[i] = level;
                    ++reached;
                    next.push_back(q);
                }
            }
        }
        if (!next.empty()) ball_sizes.push_back(reached);
        frontier = std::move(next);
    }
    return {len, ball_sizes};
}

}  // namespace

ElementSet ball(const FiniteGroup& G, const ElementSet& U, int n) {
    auto [len, sizes] = bfs_lengths(G, U);
    std::vector<Perm> out;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (len[i] >= 0 && len[i] <= n) out.push_back(G.elements()[i]);
    return make_set(std::move(out));
}

WidthReport width(const FiniteGroup& G, const ElementSet& S) {
    auto [len, sizes] = bfs_lengths(G, S);
    WidthReport r;
    for (int l : len) {
        if (l < 0) throw std::invalid_argument("set does not generate the group");
        r.width = std::max(r.width, l);
    }
    r.ball_sizes = std::move(sizes);
    r.lengths = std::move(len);
    return r;
}

bool trivlemma_bound_check(const FiniteGroup& G, const std::vector<ElementSet>& classes,
                           const ElementSet& S) {
    std::vector<Perm> all;
    for (const auto& c : classes) all.insert(all.end(), c.begin(), c.end());
    WidthReport class_report = width(G, make_set(all));
    WidthReport s_report = width(G, S);
    int p = 0;
    for (const auto& c : classes) {
        if (c.empty()) throw std::invalid_argument("empty conjugacy class");
        p = std::max(p, s_report.lengths[G.index_of(c.front())]);
    }
    return s_report.width <= p * class_report.width;
}

bool bergman_lemma_check(const FiniteGroup& G, const FiniteGroup& H, const ElementSet& U,
                         int n) {
    if (!is_symmetric(U)) throw std::invalid_argument("set is not symmetric");
    if (!G.is_subgroup(H)) throw std::invalid_argument("not a subgroup");
    if (FiniteGroup::closure(G.degree(), U).size() != G.size())
        throw std::invalid_argument("hypothesis fails: set does not generate the group");
    ElementSet Bn = ball(G, U, n);
    // Every coset Hg must meet the n-ball.
    std::vector<char> met(G.size(), 0);
    for (const auto& b : Bn)
        for (const auto& h : H.elements()) met[G.index_of(h * b)] = 1;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (!met[i]) throw std::invalid_argument("hypothesis fails: a coset misses the ball");
    ElementSet big = ball(G, U, 2 * n + 1);
    std::vector<Perm> inter;
    for (const auto& b : big)
        if (H.contains(b)) inter.push_back(b);
    FiniteGroup gen = FiniteGroup::closure(G.degree(), inter);
    return gen.size() == H.size() && H.is_subgroup(gen);
}

FiniteGroup quotient_group(const FiniteGroup& G, const FiniteGroup& H,
                           const std::vector<Perm>& lift, std::vector<Perm>& images) {
    // Cosets gH, labelled by their minimal member.
    std::vector<Perm> reps;
    std::vector<int> coset_of(G.size(), -1);
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (coset_of[i] >= 0) continue;
        const Perm& g = G.elements()[i];
        Perm rep = g;
        std::vector<std::size_t> members;
        for (const auto& h : H.elements()) {
            Perm x = g * h;
            members.push_back(G.index_of(x));
            if (x < rep) rep = x;
        }
        int label = static_cast<int>(reps.size());
        reps.push_back(rep);
        for (std::size_t m : members) coset_of[m] = label;
    }
    int r = static_cast<int>(reps.size());
    auto induced = [&](const Perm& g) {
        std::vector<int> im(r);
        for (int c = 0; c < r; ++c) im[c] = coset_of[G.index_of(g * reps[c])];
        return Perm(std::move(im));
    };
    images.clear();
    for (const auto& g : lift) images.push_back(induced(g));
    std::vector<Perm> qgens;
    for (const auto& g : G.generators()) qgens.push_back(induced(g));
    return FiniteGroup::closure(r, qgens);
}

ExtensionBoundReport extension_bound_check(const FiniteGroup& G, const FiniteGroup& H,
                                           const ElementSet& U) {
    if (!G.is_normal(H)) throw std::invalid_argument("subgroup is not normal");
    ExtensionBoundReport r;
    std::vector<Perm> fU;
    FiniteGroup Q = quotient_group(G, H, std::vector<Perm>(U.begin(), U.end()), fU);
    r.quotient_width = width(Q, make_set(fU)).width;
    int n = r.quotient_width;
    ElementSet big = ball(G, U, 2 * n + 1);
    std::vector<Perm> inter;
    for (const auto& b : big)
        if (H.contains(b)) inter.push_back(b);
    ElementSet interset = make_set(inter);
    // Conjugation-invariance of the intersection inside H.
    r.intersection_class_closed_in_h = true;
    for (const auto& h : H.elements())
        for (const auto& x : interset)
            if (!set_contains(interset, h * x * h.inverse())) {
                r.intersection_class_closed_in_h = false;
            }
    FiniteGroup Hgrp = FiniteGroup::closure(G.degree(), inter);
    if (Hgrp.size() != H.size())
        throw std::invalid_argument("intersection does not generate the subgroup");
    // Width of H with respect to the intersection, computed inside H.
    auto [hlen, hsizes] = bfs_lengths(Hgrp, interset);
    for (int l : hlen) r.subgroup_width = std::max(r.subgroup_width, l);
    r.group_width = width(G, U).width;
    r.bound_holds = r.group_width <= n + (2 * n + 1) * r.subgroup_width;
    return r;
}

std::optional<std::string> audit_norm_axioms(const NormTable& L) {
    const FiniteGroup& G = *L.group;
    for (std::size_t i = 0; i < G.size(); ++i) {
        const Perm& g = G.elements()[i];
        if ((L.values[i] == 0) != g.is_identity())
            return "L(g)=0 iff g=1 fails at " + g.cycle_string();
        if (L.values[i] < 0) return "negative norm at " + g.cycle_string();
        if (L.at(g.inverse()) != L.values[i])
            return "L(g^-1)=L(g) fails at " + g.cycle_string();
    }
    for (const auto& g : G.elements())
        for (const auto& h : G.elements()) {
            if (L.at(g * h) > L.at(g) + L.at(h))
                return "subadditivity fails at " + g.cycle_string() + ", " + h.cycle_string();
            if (L.at(h * g * h.inverse()) != L.at(g))
                return "conjugation invariance fails at " + g.cycle_string() + ", " +
                       h.cycle_string();
        }
    return std::nullopt;
}

NormTable word_norm(const FiniteGroup& G, const ElementSet& S) {
    WidthReport r = width(G, S);
    NormTable t;
    t.group = &G;
    t.values.assign(r.lengths.begin(), r.lengths.end());
    return t;
}

void validate_chain(const FiniteGroup& G, const SubgroupChain& chain) {
    if (chain.members.empty()) throw std::invalid_argument("empty chain");
    if (chain.members.front().size() != 1)
        throw std::invalid_argument("chain must start at the trivial subgroup");
    if (chain.members.back().size() != G.size())
        throw std::invalid_argument("chain must end at the whole group");
    for (std::size_t i = 0; i < chain.members.size(); ++i) {
        if (!G.is_normal(chain.members[i]))
            throw std::invalid_argument("chain member is not normal");
        if (i > 0 && !chain.members[i].is_subgroup(chain.members[i - 1]))
            throw std::invalid_argument("chain is not increasing");
    }
}

NormTable chain_norm(const FiniteGroup& G, const SubgroupChain& chain) {
    validate_chain(G, chain);
    NormTable t;
    t.group = &G;
    t.values.assign(G.size(), -1);
    for (std::size_t i = 0; i < G.size(); ++i) {
        const Perm& g = G.elements()[i];
        for (std::size_t k = 0; k < chain.members.size(); ++k) {
            if (chain.members[k].contains(g)) {
                t.values[i] = static_cast<long long>(k);
                break;
            }
        }
    }
    return t;
}

std::vector<std::vector<long long>> induced_metric(const NormTable& L) {
    if (audit_norm_axioms(L)) throw std::invalid_argument("input norm violates an axiom");
    const FiniteGroup& G = *L.group;
    std::vector<std::vector<long long>> d(G.size(), std::vector<long long>(G.size(), 0));
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = 0; j < G.size(); ++j)
            d[i][j] = L.at(G.elements()[i] * G.elements()[j].inverse());
    return d;
}

std::optional<std::string> audit_metric(const NormTable& L,
                                        const std::vector<std::vector<long long>>& d) {
    const FiniteGroup& G = *L.group;
    std::size_t n = G.size();
    auto idx = [&](const Perm& p) { return G.index_of(p); };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if ((d[a][b] == 0) != (a == b)) return "separation fails";
            if (d[a][b] != d[b][a]) return "symmetry fails";
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (d[a][b] > d[a][c] + d[c][b]) return "triangle inequality fails";
    for (const auto& g : G.elements())
        for (const auto& a : G.elements())
            for (const auto& b : G.elements())
                if (d[idx(g * a)][idx(g * b)] != d[idx(a)][idx(b)])
                    return "left invariance fails";
    for (const auto& a : G.elements())
        for (const auto& g : G.elements())
            for (const auto& h : G.elements())
                if (d[idx(a)][idx(g * h * g.inverse() * a)] != d[idx(a)][idx(h * a)])
                    return "conjugation condition fails";
    return std::nullopt;
}

ActionChainResult chain_from_action(const FiniteGroup& G, const IsometricAction& action,
                                    int basepoint) {
    std::size_t n = G.size();
    int P = action.num_points;
    if (basepoint < 0 || basepoint >= P) throw std::invalid_argument("bad basepoint");
    if (action.act.size() != n) throw std::invalid_argument("action table size mismatch");
    auto a_of = [&](std::size_t gi, int pt) { return action.act[gi][pt]; };
    // Isometry check.
    for (std::size_t gi = 0; gi < n; ++gi)
        for (int p = 0; p < P; ++p)
            for (int q = 0; q < P; ++q)
                if (action.dist[a_of(gi, p)][a_of(gi, q)] != action.dist[p][q])
                    throw std::invalid_argument("action is not by isometries");
    // Conjugation condition d(a, g h g^-1 a) = d(a, h a), with witness.
    for (const auto& g : G.elements())
        for (const auto& h : G.elements()) {
            std::size_t ci = G.index_of(g * h * g.inverse());
            std::size_t hi = G.index_of(h);
            if (action.dist[basepoint][a_of(ci, basepoint)] !=
                action.dist[basepoint][a_of(hi, basepoint)]) {
                std::ostringstream msg;
                msg << "conjugation condition fails at g=" << g.cycle_string()
                    << " h=" << h.cycle_string() << " a=" << basepoint;
                throw std::invalid_argument(msg.str());
            }
        }
    long long maxd = 0;
    std::vector<long long> move(n);
    for (std::size_t gi = 0; gi < n; ++gi) {
        move[gi] = action.dist[basepoint][a_of(gi, basepoint)];
        maxd = std::max(maxd, move[gi]);
    }
    // The three chain properties: U_n = U_n^-1, conjugation invariance,
    // and U_n U_n inside U_{2n} (equivalently, move is symmetric,
    // class-invariant, and subadditive).
    for (std::size_t gi = 0; gi < n; ++gi)
        if (move[G.index_of(G.elements()[gi].inverse())] != move[gi])
            throw std::invalid_argument("chain sets are not symmetric");
    for (std::size_t gi = 0; gi < n; ++gi)
        for (std::size_t hj = 0; hj < n; ++hj)
            if (move[G.index_of(G.elements()[gi] * G.elements()[hj])] >
                move[gi] + move[hj])
                throw std::invalid_argument("U_n U_n escapes U_2n");
    ActionChainResult r;
    for (long long lvl = 0;; ++lvl) {
        std::vector<char> mask(n, 0);
        std::size_t count = 0;
        for (std::size_t gi = 0; gi < n; ++gi)
            if (move[gi] <= lvl) {
                mask[gi] = 1;
                ++count;
            }
        r.chain.push_back(std::move(mask));
        if (count == n) {
            r.terminal_index = static_cast<int>(lvl);
            break;
        }
    }
    // Orbit diameter of the basepoint.
    long long diam = 0;
    for (std::size_t gi = 0; gi < n; ++gi)
        for (std::size_t hj = 0; hj < n; ++hj)
            diam = std::max(diam, action.dist[a_of(gi, basepoint)][a_of(hj, basepoint)]);
    r.orbit_diameter = diam;
    return r;
}

IsometricAction left_action_on_self(const FiniteGroup& G, const NormTable& L) {
    IsometricAction a;
    a.num_points = static_cast<int>(G.size());
    a.dist = induced_metric(L);
    a.act.resize(G.size());
    for (std::size_t gi = 0; gi < G.size(); ++gi) {
        a.act[gi].resize(G.size());
        for (std::size_t x = 0; x < G.size(); ++x)
            a.act[gi][x] = static_cast<int>(G.index_of(G.elements()[gi] * G.elements()[x]));
    }
    return a;
}

}  // namespace cgt

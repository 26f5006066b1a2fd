#include "cgt/pl2.hpp"

#include <algorithm>
#include <random>

namespace cgt {

namespace {

const Dyadic kZero(0);
const Dyadic kOne(1);

bool int_is_pow2(const Int& v) { return v > 0 && (v & (v - 1)) == 0; }

int log2_exact(const Int& v) {
    int e = 0;
    Int a = v;
    while (a > 1) {
        a >>= 1;
        ++e;
    }
    return e;
}

// log2 of dy/dx when it is a power of two; throws otherwise.
int slope_exponent(const Dyadic& dx, const Dyadic& dy) {
    Rational r = dy.to_rational() / dx.to_rational();
    if (!int_is_pow2(r.num()) || !int_is_pow2(r.den()))
        throw std::invalid_argument("segment slope is not a power of 2");
    return log2_exact(r.num()) - log2_exact(r.den());
}

bool segment_is_identity(const Breakpoint& a, const Breakpoint& b) {
    return a.first == a.second && b.first == b.second;
}

}  // namespace

DyadicInterval::DyadicInterval(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h)) {
    if (!(kZero <= lo && lo < hi && hi <= kOne))
        throw std::invalid_argument("interval endpoints must satisfy 0 <= lo < hi <= 1");
}

PL2Map::PL2Map() : bp_{{kZero, kZero}, {kOne, kOne}} {}

PL2Map PL2Map::from_breakpoints(std::vector<Breakpoint> bps, bool minimize) {
    PL2Map f;
    f.bp_ = std::move(bps);
    if (minimize) f.minimize();
    f.validate();
    return f;
}

void PL2Map::validate() const {
    if (bp_.size() < 2) throw std::invalid_argument("breakpoint list too short");
    if (bp_.front() != Breakpoint{kZero, kZero})
        throw std::invalid_argument("first breakpoint must be (0,0)");
    if (bp_.back() != Breakpoint{kOne, kOne})
        throw std::invalid_argument("last breakpoint must be (1,1)");
    for (std::size_t i = 0; i + 1 < bp_.size(); ++i) {
        if (!(bp_[i].first < bp_[i + 1].first))
            throw std::invalid_argument("x-coordinates must be strictly increasing");
        if (!(bp_[i].second < bp_[i + 1].second))
            throw std::invalid_argument("y-coordinates must be strictly increasing");
        slope_log2(i);  // throws if not a power of 2
    }
    for (std::size_t i = 0; i + 2 < bp_.size(); ++i)
        if (slope_log2(i) == slope_log2(i + 1))
            throw std::invalid_argument("breakpoint list is not minimal");
}

void PL2Map::minimize() {
    if (bp_.size() < 3) return;
    std::vector<Breakpoint> out;
    out.push_back(bp_.front());
    for (std::size_t i = 1; i + 1 < bp_.size(); ++i) {
        const Breakpoint& prev = out.back();
        int s1 = slope_exponent(bp_[i].first - prev.first, bp_[i].second - prev.second);
        int s2 = slope_exponent(bp_[i + 1].first - bp_[i].first,
                                bp_[i + 1].second - bp_[i].second);
        if (s1 != s2) out.push_back(bp_[i]);
    }
    out.push_back(bp_.back());
    bp_ = std::move(out);
}

int PL2Map::slope_log2(std::size_t i) const {
    return slope_exponent(bp_[i + 1].first - bp_[i].first,
                          bp_[i + 1].second - bp_[i].second);
}

Rational PL2Map::evaluate(const Rational& x) const {
    if (x < Rational(0) || Rational(1) < x)
        throw std::invalid_argument("evaluation point outside [0,1]");
    std::size_t i = 0;
    while (i + 2 < bp_.size() && bp_[i + 1].first.to_rational() <= x) ++i;
    return bp_[i].second.to_rational() +
           pow2(slope_log2(i)) * (x - bp_[i].first.to_rational());
}

Dyadic PL2Map::evaluate(const Dyadic& x) const {
    if (x < kZero || kOne < x)
        throw std::invalid_argument("evaluation point outside [0,1]");
    std::size_t i = 0;
    while (i + 2 < bp_.size() && bp_[i + 1].first <= x) ++i;
    int k = slope_log2(i);
    Dyadic d = x - bp_[i].first;
    Dyadic scaled = k >= 0 ? Dyadic(d.num() << k, d.exp()) : Dyadic(d.num(), d.exp() + (-k));
    return bp_[i].second + scaled;
}

PL2Map PL2Map::compose(const PL2Map& g) const {
    PL2Map ginv = g.invert();
    std::vector<Dyadic> xs;
    for (const auto& bp : g.bp_) xs.push_back(bp.first);
    for (const auto& bp : bp_) xs.push_back(ginv.evaluate(bp.first));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Breakpoint> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.emplace_back(x, evaluate(g.evaluate(x)));
    return from_breakpoints(std::move(out), true);
}

PL2Map PL2Map::invert() const {
    std::vector<Breakpoint> out;
    out.reserve(bp_.size());
    for (const auto& bp : bp_) out.emplace_back(bp.second, bp.first);
    return from_breakpoints(std::move(out));
}

std::optional<DyadicInterval> PL2Map::support() const {
    std::size_t first = bp_.size(), last = 0;
    for (std::size_t i = 0; i + 1 < bp_.size(); ++i) {
        if (!segment_is_identity(bp_[i], bp_[i + 1])) {
            if (first == bp_.size()) first = i;
            last = i;
        }
    }
    if (first == bp_.size()) return std::nullopt;
    return DyadicInterval(bp_[first].first, bp_[last + 1].first);
}

bool PL2Map::in_commutator_subgroup() const {
    if (is_identity()) return true;
    return segment_is_identity(bp_[0], bp_[1]) &&
           segment_is_identity(bp_[bp_.size() - 2], bp_.back());
}

DisplacementData fixed_interval_analysis(const PL2Map& f) {
    if (f.is_identity()) throw std::invalid_argument("nonidentity required");
    if (!f.in_commutator_subgroup())
        throw std::invalid_argument("commutator-subgroup element required");
    const auto& bp = f.breakpoints();
    // Maximal initial fixed run ends at the left endpoint of the first
    // non-identity segment.
    std::size_t i0 = 0;
    while (segment_is_identity(bp[i0], bp[i0 + 1])) ++i0;
    Dyadic alpha0 = bp[i0].first;
    // Least fixed point after alpha0: either a later breakpoint on y = x
    // or the fixed point of a sloped segment, scanned left to right.
    std::optional<Rational> alpha1;
    for (std::size_t s = i0; s + 1 < bp.size() && !alpha1; ++s) {
        if (s > i0 && bp[s].second == bp[s].first) {
            alpha1 = bp[s].first.to_rational();
            break;
        }
        int k = f.slope_log2(s);
        if (k != 0) {
            Rational x = linear_fixed_point(k, bp[s].first, bp[s].second);
            if (bp[s].first.to_rational() < x && x < bp[s + 1].first.to_rational())
                alpha1 = x;
        }
    }
    if (!alpha1) throw std::logic_error("no fixed point after alpha0");  // unreachable
    Dyadic alpha = dyadic_strictly_between(alpha0.to_rational(), *alpha1);
    Dyadic falpha = f.evaluate(alpha);
    if (falpha == alpha) throw std::logic_error("alpha unexpectedly fixed");  // unreachable
    DyadicInterval J(std::min(alpha, falpha), std::max(alpha, falpha));
    return DisplacementData{alpha0, *alpha1, alpha, J};
}

bool displaces_check(const PL2Map& f, const DyadicInterval& J, int m) {
    std::vector<std::pair<Dyadic, Dyadic>> images;
    Dyadic lo = J.lo, hi = J.hi;
    for (int i = 0; i <= m; ++i) {
        images.emplace_back(lo, hi);
        lo = f.evaluate(lo);
        hi = f.evaluate(hi);
    }
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j)
            if (!(images[i].second <= images[j].first ||
                  images[j].second <= images[i].first))
                return false;
    return true;
}

namespace {

// Lengths of a decomposition of the dyadic length d > 0 into powers of two
// (its binary expansion, largest first).
std::vector<Dyadic> pow2_pieces(const Dyadic& d) {
    std::vector<Dyadic> out;
    Int num = d.num();
    for (int bit = log2_exact(num); bit >= 0; --bit)
        if (((num >> bit) & 1) != 0) out.emplace_back(Int(1) << bit, d.exp());
    return out;
}

void split_largest(std::vector<Dyadic>& pieces) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < pieces.size(); ++i)
        if (pieces[k] < pieces[i]) k = i;
    Dyadic half(pieces[k].num(), pieces[k].exp() + 1);
    pieces[k] = half;
    pieces.insert(pieces.begin() + k + 1, half);
}

}  // namespace

std::vector<Breakpoint> pl2_interval_map(const Dyadic& p, const Dyadic& q,
                                         const Dyadic& r, const Dyadic& s) {
    if (!(p < q) || !(r < s)) throw std::invalid_argument("degenerate interval");
    std::vector<Dyadic> a = pow2_pieces(q - p);
    std::vector<Dyadic> b = pow2_pieces(s - r);
    while (a.size() < b.size()) split_largest(a);
    while (b.size() < a.size()) split_largest(b);
    std::vector<Breakpoint> out;
    Dyadic x = p, y = r;
    out.emplace_back(x, y);
    for (std::size_t i = 0; i < a.size(); ++i) {
        x = x + a[i];
        y = y + b[i];
        out.emplace_back(x, y);
    }
    return out;
}

PL2Map tuple_conjugator(const std::vector<Dyadic>& xs, const std::vector<Dyadic>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("tuple lengths differ");
    if (xs.empty()) return PL2Map();
    auto check = [](const std::vector<Dyadic>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!(kZero < v[i] && v[i] < kOne))
                throw std::invalid_argument("tuple points must lie in (0,1)");
            if (i > 0 && !(v[i - 1] < v[i]))
                throw std::invalid_argument("tuple must be strictly increasing");
        }
    };
    check(xs);
    check(ys);
    // Guard points fixed by the output, forcing it into the commutator
    // subgroup: the largest 1/2^k below both minima and the mirror point
    // above both maxima.
    Dyadic lo_min = std::min(xs.front(), ys.front());
    Dyadic hi_max = std::max(xs.back(), ys.back());
    unsigned k = 1;
    while (!(Dyadic(Int(1), k) < lo_min)) ++k;
    Dyadic u(Int(1), k);
    k = 1;
    while (!(hi_max < kOne - Dyadic(Int(1), k))) ++k;
    Dyadic v = kOne - Dyadic(Int(1), k);

    std::vector<Dyadic> px{kZero, u};
    std::vector<Dyadic> py{kZero, u};
    px.insert(px.end(), xs.begin(), xs.end());
    py.insert(py.end(), ys.begin(), ys.end());
    px.push_back(v);
    py.push_back(v);
    px.push_back(kOne);
    py.push_back(kOne);

    std::vector<Breakpoint> out;
    for (std::size_t i = 0; i + 1 < px.size(); ++i) {
        auto frag = pl2_interval_map(px[i], px[i + 1], py[i], py[i + 1]);
        if (!out.empty()) frag.erase(frag.begin());
        out.insert(out.end(), frag.begin(), frag.end());
    }
    return PL2Map::from_breakpoints(std::move(out), true);
}

PL2Map move_support_into(const std::vector<PL2Map>& gs, const DyadicInterval& J) {
    std::optional<Dyadic> beta, gamma;
    for (const auto& g : gs) {
        if (!g.in_commutator_subgroup())
            throw std::invalid_argument("commutator-subgroup elements required");
        auto sup = g.support();
        if (!sup) continue;
        if (!beta || sup->lo < *beta) beta = sup->lo;
        if (!gamma || *gamma < sup->hi) gamma = sup->hi;
    }
    if (!beta) return PL2Map();
    Dyadic t1 = dyadic_strictly_between(J.lo.to_rational(), J.hi.to_rational());
    Dyadic t2 = dyadic_strictly_between(t1.to_rational(), J.hi.to_rational());
    return tuple_conjugator({*beta, *gamma}, {t1, t2});
}

std::pair<PL2Map, PL2Map> standard_generators() {
    auto d = [](long num, unsigned exp) { return Dyadic(Int(num), exp); };
    PL2Map x0 = PL2Map::from_breakpoints(
        {{kZero, kZero}, {d(1, 1), d(1, 2)}, {d(3, 2), d(1, 1)}, {kOne, kOne}});
    PL2Map x1 = PL2Map::from_breakpoints({{kZero, kZero},
                                          {d(1, 1), d(1, 1)},
                                          {d(3, 2), d(5, 3)},
                                          {d(7, 3), d(3, 2)},
                                          {kOne, kOne}});
    return {x0, x1};
}

PL2Map random_fprime(std::uint64_t seed, int complexity) {
    if (complexity < 1) throw std::invalid_argument("complexity must be positive");
    std::mt19937_64 rng(seed);
    auto [x0, x1] = standard_generators();
    const PL2Map gens[4] = {x0, x1, x0.invert(), x1.invert()};
    auto word = [&]() {
        PL2Map w;
        int len = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < len; ++i) w = w.compose(gens[rng() % 4]);
        return w;
    };
    PL2Map acc;
    int terms = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(complexity));
    for (int t = 0; t < terms; ++t) {
        // Short words often commute; redraw a few times to avoid trivial terms.
        PL2Map comm;
        for (int attempt = 0; attempt < 8 && comm.is_identity(); ++attempt) {
            PL2Map a = word(), b = word();
            comm = a.compose(b).compose(a.invert()).compose(b.invert());
        }
        PL2Map c = word();
        acc = acc.compose(c.compose(comm).compose(c.invert()));
    }
    return acc;
}

}  // namespace cgt

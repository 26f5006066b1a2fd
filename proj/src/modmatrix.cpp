#include "cgt/modmatrix.hpp"

#include <deque>
#include <set>

namespace cgt {

namespace {

int mod(long long v, int p) {
    int r = static_cast<int>(v % p);
    return r < 0 ? r + p : r;
}

int inv_mod(int a, int p) {
    // p is prime and small; brute force is fine.
    for (int x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw std::invalid_argument("no inverse");
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

ModMatrix ModMatrix::identity(int n, int p) {
    std::vector<int> e(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = 1;
    return ModMatrix(n, p, std::move(e));
}

ModMatrix::ModMatrix(int n, int p, std::vector<int> entries)
    : n_(n), p_(p), e_(std::move(entries)) {
    if (n < 1 || e_.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("bad matrix shape");
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
    for (int& v : e_) v = mod(v, p_);
}

ModMatrix ModMatrix::operator*(const ModMatrix& other) const {
    if (n_ != other.n_ || p_ != other.p_) throw std::invalid_argument("shape mismatch");
    ModMatrix r = identity(n_, p_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            long long acc = 0;
            for (int k = 0; k < n_; ++k) acc += static_cast<long long>(at(i, k)) * other.at(k, j);
            r.at(i, j) = mod(acc, p_);
        }
    return r;
}

int ModMatrix::determinant() const {
    ModMatrix a = *this;
    long long det = 1;
    for (int c = 0; c < n_; ++c) {
        int pivot = -1;
        for (int r = c; r < n_; ++r)
            if (a.at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != c) {
            for (int j = 0; j < n_; ++j) std::swap(a.at(pivot, j), a.at(c, j));
            det = -det;
        }
        det = det * a.at(c, c) % p_;
        int piv_inv = inv_mod(a.at(c, c), p_);
        for (int r = c + 1; r < n_; ++r) {
            int factor = mod(static_cast<long long>(a.at(r, c)) * piv_inv, p_);
            for (int j = c; j < n_; ++j)
                a.at(r, j) = mod(a.at(r, j) - static_cast<long long>(factor) * a.at(c, j), p_);
        }
    }
    return mod(det, p_);
}

bool is_transvection(const ModMatrix& M) {
    int n = M.dim(), p = M.prime();
    // M - I must have rank one; write it as v phi^T and require phi(v) = 0.
    std::vector<std::vector<int>> d(n, std::vector<int>(n));
    int pr = -1, pc = -1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            d[i][j] = mod(M.at(i, j) - (i == j ? 1 : 0), p);
            if (d[i][j] != 0 && pr < 0) {
                pr = i;
                pc = j;
            }
        }
    if (pr < 0) return false;  // identity
    int piv_inv = inv_mod(d[pr][pc], p);
    // v = column pc of d scaled so v[pr] = d[pr][pc]; phi = row pr scaled.
    std::vector<int> v(n), phi(n);
    for (int i = 0; i < n; ++i) v[i] = d[i][pc];
    for (int j = 0; j < n; ++j) phi[j] = mod(static_cast<long long>(d[pr][j]) * piv_inv, p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d[i][j] != mod(static_cast<long long>(v[i]) * phi[j], p)) return false;
    long long dot = 0;
    for (int i = 0; i < n; ++i) dot += static_cast<long long>(phi[i]) * v[i];
    return mod(dot, p) == 0;
}

std::vector<ModMatrix> field_transvection_factorize(const ModMatrix& M) {
    int n = M.dim(), p = M.prime();
    if (M.determinant() != 1) throw std::invalid_argument("determinant must be 1");
    ModMatrix a = M;
    std::vector<ModMatrix> ops;  // row operations applied in order
    auto apply = [&](int i, int j, int m) {
        m = mod(m, p);
        if (m == 0) return;
        for (int c = 0; c < n; ++c)
            a.at(i, c) = mod(a.at(i, c) + static_cast<long long>(m) * a.at(j, c), p);
        ModMatrix t = ModMatrix::identity(n, p);
        t.at(i, j) = m;
        ops.push_back(t);
    };
    for (int c = 0; c < n - 1; ++c) {
        if (a.at(c, c) == 0) {
            int r = -1;
            for (int r2 = c; r2 < n; ++r2)
                if (a.at(r2, c) != 0) {
                    r = r2;
                    break;
                }
            if (r < 0) throw std::logic_error("singular despite det 1");
            apply(c, r, 1);
        }
        if (a.at(c, c) != 1) {
            // Make the pivot 1 using a helper row.
            int r = c + 1;
            if (a.at(r, c) == 0) apply(r, c, 1);
            apply(c, r, mod(static_cast<long long>(1 - a.at(c, c)) * inv_mod(a.at(r, c), p), p));
        }
        for (int r = c + 1; r < n; ++r) apply(r, c, -a.at(r, c));
    }
    // Last diagonal entry equals det = 1; clear above the diagonal.
    if (a.at(n - 1, n - 1) != 1) throw std::logic_error("pivot normalization failed");
    for (int c = 1; c < n; ++c)
        for (int r = 0; r < c; ++r) apply(r, c, -a.at(r, c));
    if (a != ModMatrix::identity(n, p)) throw std::logic_error("reduction failed");
    // (ok...o1) M = I  =>  M = o1^-1 ... ok^-1.
    std::vector<ModMatrix> out;
    for (const auto& t : ops) {
        ModMatrix inv = t;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && inv.at(i, j) != 0) inv.at(i, j) = mod(-inv.at(i, j), p);
        out.push_back(inv);
    }
    return out;
}

std::vector<ModMatrix> all_transvections(int n, int p) {
    // Enumerate I + v phi^T over nonzero v, phi with phi(v) = 0, dedupe.
    std::set<ModMatrix> seen;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(p);
    for (std::uint64_t vi = 1; vi < total; ++vi)
        for (std::uint64_t fi = 1; fi < total; ++fi) {
            std::vector<int> v(n), phi(n);
            std::uint64_t x = vi, y = fi;
            for (int i = 0; i < n; ++i) {
                v[i] = static_cast<int>(x % p);
                phi[i] = static_cast<int>(y % p);
                x /= p;
                y /= p;
            }
            long long dot = 0;
            for (int i = 0; i < n; ++i) dot += static_cast<long long>(v[i]) * phi[i];
            if (mod(dot, p) != 0) continue;
            ModMatrix m = ModMatrix::identity(n, p);
            bool nontrivial = false;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    m.at(i, j) = mod(m.at(i, j) + static_cast<long long>(v[i]) * phi[j], p);
                    if (i != j ? m.at(i, j) != 0 : m.at(i, j) != 1) nontrivial = true;
                }
            if (nontrivial) seen.insert(m);
        }
    return {seen.begin(), seen.end()};
}

FpWidthReport bfs_width_fp(int n, int p) {
    // |SL_n(F_p)| = p^(n(n-1)/2) * prod_{i=2}^n (p^i - 1)
    long double order_est = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) order_est *= p;
    for (int i = 2; i <= n; ++i) {
        long double q = 1;
        for (int k = 0; k < i; ++k) q *= p;
        order_est *= (q - 1);
    }
    if (order_est > 1e6) throw std::invalid_argument("group order exceeds the 10^6 guard");

    std::vector<ModMatrix> gens = all_transvections(n, p);
    std::set<ModMatrix> seen{ModMatrix::identity(n, p)};
    std::deque<ModMatrix> frontier{ModMatrix::identity(n, p)};
    FpWidthReport r;
    r.ball_sizes.push_back(1);
    int level = 0;
    while (!frontier.empty()) {
        ++level;
        std::deque<ModMatrix> next;
        for (const auto& m : frontier)
            for (const auto& g : gens) {
                ModMatrix q = m * g;
                if (seen.insert(q).second) next.push_back(q);
            }
        if (!next.empty()) {
            r.ball_sizes.push_back(seen.size());
            r.width = level;
        }
        frontier = std::move(next);
    }
    r.group_order = seen.size();
    return r;
}

}  // namespace cgt

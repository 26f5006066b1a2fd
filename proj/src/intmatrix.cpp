#include "cgt/intmatrix.hpp"

#include <numeric>
#include <stdexcept>

namespace cgt {

IntMatrix IntMatrix::identity(int n) {
    std::vector<Int> e(static_cast<std::size_t>(n) * n, Int(0));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = 1;
    return IntMatrix(n, std::move(e));
}

IntMatrix::IntMatrix(int n, std::vector<Int> entries) : n_(n), e_(std::move(entries)) {
    if (n < 1 || e_.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("bad matrix shape");
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (n_ != other.n_) throw std::invalid_argument("dimension mismatch");
    IntMatrix r = identity(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            Int acc = 0;
            for (int k = 0; k < n_; ++k) acc += at(i, k) * other.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

namespace {

Int det_recursive(const IntMatrix& m, std::vector<int> cols, int row) {
    if (cols.size() == 1) return m.at(row, cols[0]);
    Int acc = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        std::vector<int> rest;
        for (std::size_t d = 0; d < cols.size(); ++d)
            if (d != c) rest.push_back(cols[d]);
        Int term = m.at(row, cols[c]) * det_recursive(m, rest, row + 1);
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

Int IntMatrix::determinant() const {
    std::vector<int> cols(n_);
    std::iota(cols.begin(), cols.end(), 0);
    return det_recursive(*this, cols, 0);
}

IntMatrix IntMatrix::inverse() const {
    Int det = determinant();
    if (det != 1 && det != -1)
        throw std::invalid_argument("matrix is not invertible over the integers");
    IntMatrix adj = identity(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            // Cofactor C_ji for the adjugate.
            std::vector<Int> sub;
            for (int r = 0; r < n_; ++r)
                for (int c = 0; c < n_; ++c)
                    if (r != j && c != i) sub.push_back(at(r, c));
            Int cof = n_ == 1 ? Int(1) : IntMatrix(n_ - 1, std::move(sub)).determinant();
            if ((i + j) % 2 != 0) cof = -cof;
            adj.at(i, j) = det == 1 ? cof : -cof;
        }
    return adj;
}

IntMatrix transvection(int n, int i, int j, const Int& m) {
    if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("index out of range");
    if (i == j) throw std::invalid_argument("transvection needs i != j");
    IntMatrix t = IntMatrix::identity(n);
    t.at(i - 1, j - 1) = m;
    return t;
}

bool commutator_identity_check(int n, int i, int j, int k, const Int& m) {
    if (n < 3) throw std::invalid_argument("n >= 3 required");
    if (i == j || j == k || i == k)
        throw std::invalid_argument("indices must be pairwise distinct");
    MatGroupOps G{n};
    IntMatrix lhs = transvection(n, i, j, m);
    IntMatrix rhs = commutator(G, transvection(n, i, k, Int(1)), transvection(n, k, j, m));
    return lhs == rhs;
}

namespace {

struct RowOpRecorder {
    IntMatrix a;
    std::vector<ElementaryFactor> ops;  // applied in order, as row_i += m * row_j

    void apply(int i, int j, const Int& m) {
        if (m == 0) return;
        for (int c = 0; c < a.dim(); ++c) a.at(i, c) += m * a.at(j, c);
        ops.push_back({i, j, m});
    }
};

}  // namespace

std::vector<ElementaryFactor> elementary_factorize(const IntMatrix& M) {
    int n = M.dim();
    if (n < 3) throw std::invalid_argument("n >= 3 required");
    if (M.determinant() != 1) throw std::invalid_argument("determinant must be 1");
    RowOpRecorder rec{M, {}};
    IntMatrix& a = rec.a;

    auto abs_int = [](const Int& v) { return v < 0 ? Int(-v) : v; };

    // Greedy pre-pass: apply any single row operation that strictly
    // shrinks the entrywise distance to the identity. Often reaches the
    // identity outright and keeps the factor list short; the structured
    // reduction below finishes whatever is left.
    auto row_cost = [&](int r) {
        Int c = 0;
        for (int j = 0; j < n; ++j) c += abs_int(a.at(r, j) - Int(r == j ? 1 : 0));
        return c;
    };
    for (;;) {
        Int best_gain = 0, best_m = 0;
        int best_i = -1, best_j = -1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                Int old_cost = row_cost(i);
                for (int c = 0; c < n; ++c) {
                    if (a.at(j, c) == 0) continue;
                    Int want = Int(i == c ? 1 : 0) - a.at(i, c);
                    for (Int m : {Int(want / a.at(j, c)), Int(want / a.at(j, c)) + 1,
                                  Int(want / a.at(j, c)) - 1}) {
                        if (m == 0) continue;
                        Int cost = 0;
                        for (int cc = 0; cc < n; ++cc)
                            cost += abs_int(a.at(i, cc) + m * a.at(j, cc) -
                                            Int(i == cc ? 1 : 0));
                        if (old_cost - cost > best_gain) {
                            best_gain = old_cost - cost;
                            best_i = i;
                            best_j = j;
                            best_m = m;
                        }
                    }
                }
            }
        if (best_i < 0) break;
        rec.apply(best_i, best_j, best_m);
    }

    // Clear columns 0..n-3, leaving a 2x2 bottom-right block.
    for (int c = 0; c <= n - 3; ++c) {
        // Euclid on the column entries in rows c..n-1; their gcd is 1.
        for (;;) {
            int nonzero = -1, second = -1;
            for (int r = c; r < n; ++r)
                if (a.at(r, c) != 0) {
                    if (nonzero < 0)
                        nonzero = r;
                    else if (second < 0 || abs_int(a.at(r, c)) < abs_int(a.at(second, c)))
                        second = r;
                }
            if (second < 0) break;
            // Reduce the largest-entry row by the smallest nonzero one.
            int big = nonzero;
            if (abs_int(a.at(big, c)) < abs_int(a.at(second, c))) std::swap(big, second);
            Int q = a.at(big, c) / a.at(second, c);
            if (q == 0) q = 1;
            rec.apply(big, second, -q);
        }
        int r1 = -1;
        for (int r = c; r < n; ++r)
            if (a.at(r, c) != 0) r1 = r;
        if (r1 < 0) throw std::logic_error("column collapsed to zero");
        if (a.at(r1, c) < 0) {
            // Flip the sign using a spare zero row in this column.
            int s = (r1 == c) ? c + 1 : c;
            rec.apply(s, r1, 1);
            rec.apply(r1, s, -2);
            rec.apply(s, r1, 1);
        }
        if (r1 != c) {
            rec.apply(c, r1, 1);
            rec.apply(r1, c, -1);
        }
        for (int r = c + 1; r < n; ++r) rec.apply(r, c, -a.at(r, c));
    }

    // Bottom 2x2 block at rows/cols p, q with determinant 1.
    int p = n - 2, q = n - 1;
    while (a.at(q, p) != 0) {
        if (a.at(p, p) == 0) {
            rec.apply(p, q, 1);
        } else if (abs_int(a.at(q, p)) >= abs_int(a.at(p, p))) {
            rec.apply(q, p, -(a.at(q, p) / a.at(p, p)));
        } else {
            rec.apply(p, q, -(a.at(p, p) / a.at(q, p)));
        }
    }
    if (a.at(p, p) == -1) {
        // Left-multiply the block by -I, a product of six transvections.
        rec.apply(p, q, 1);
        rec.apply(q, p, -1);
        rec.apply(p, q, 1);
        rec.apply(p, q, 1);
        rec.apply(q, p, -1);
        rec.apply(p, q, 1);
    }
    rec.apply(p, q, -a.at(p, q));

    // Now unitriangular: clear above the diagonal, left to right.
    for (int c = 1; c < n; ++c)
        for (int r = 0; r < c; ++r) rec.apply(r, c, -a.at(r, c));

    if (a != IntMatrix::identity(n)) throw std::logic_error("reduction did not reach identity");

    // ops applied in order o1..ok give (ok...o1) M = I, so
    // M = o1^-1 ... ok^-1 with each inverse negating m. 1-based output.
    std::vector<ElementaryFactor> out;
    out.reserve(rec.ops.size());
    for (const auto& op : rec.ops) out.push_back({op.i + 1, op.j + 1, -op.m});
    return out;
}

namespace {

// Signed monomial matrix P of determinant 1 with P t_12(1) P^-1 = t_ik(sign).
IntMatrix monomial_conjugator(int n, int i, int k, int sign) {
    std::vector<int> slot_image(n, 0);  // 1-based images
    slot_image[0] = i;
    slot_image[1] = k;
    int next = 1;
    for (int t = 2; t < n; ++t) {
        while (next == i || next == k) ++next;
        slot_image[t] = next++;
    }
    std::vector<int> signs(n, 1);
    signs[1] = sign;
    // Parity of the slot permutation.
    int inversions = 0;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (slot_image[x] > slot_image[y]) ++inversions;
    int det = (inversions % 2 == 0 ? 1 : -1) * sign;
    if (det < 0) signs[2] = -signs[2];  // n >= 3
    IntMatrix P(n, std::vector<Int>(static_cast<std::size_t>(n) * n, Int(0)));
    for (int t = 0; t < n; ++t) P.at(slot_image[t] - 1, t) = signs[t];
    return P;
}

}  // namespace

ConjugateCertificate<IntMatrix> transvection_as_T_conjugates(int n, int i, int j,
                                                             const Int& m) {
    if (n < 3) throw std::invalid_argument("n >= 3 required");
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        throw std::invalid_argument("bad indices");
    MatGroupOps G{n};
    ConjugateCertificate<IntMatrix> cert{transvection(n, 1, 2, Int(1)),
                                         transvection(n, i, j, m),
                                         {}};
    if (m == 0) return cert;
    if (m == 1 || m == -1) {
        cert.factors.push_back({monomial_conjugator(n, i, j, m > 0 ? 1 : -1), +1});
    } else {
        // t_ij(m) = t_ik(1) * (t_kj(m) t_ik(-1) t_kj(-m)) with k free.
        int k = 1;
        while (k == i || k == j) ++k;
        cert.factors.push_back({monomial_conjugator(n, i, k, 1), +1});
        cert.factors.push_back(
            {transvection(n, k, j, m) * monomial_conjugator(n, i, k, -1), +1});
    }
    if (!verify_certificate(G, cert))
        throw std::logic_error("transvection certificate failed verification");
    return cert;
}

ConjugateCertificate<IntMatrix> matrix_as_T_conjugates(const IntMatrix& M) {
    MatGroupOps G{M.dim()};
    auto factors = elementary_factorize(M);
    ConjugateCertificate<IntMatrix> cert{transvection(M.dim(), 1, 2, Int(1)), M, {}};
    for (const auto& f : factors) {
        auto part = transvection_as_T_conjugates(M.dim(), f.i, f.j, f.m);
        cert.factors.insert(cert.factors.end(), part.factors.begin(), part.factors.end());
    }
    if (!verify_certificate(G, cert))
        throw std::logic_error("matrix certificate failed verification");
    return cert;
}

}  // namespace cgt

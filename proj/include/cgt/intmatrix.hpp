#pragma once

// Exact integer matrices, elementary transvections, the commutator
// identity between them, Euclidean elementary factorization of
// determinant-one matrices (n >= 3), and certificates expressing any
// such matrix as a product of conjugates of the basic transvection.

#include "cgt/certificate.hpp"
#include "cgt/dyadic.hpp"  // for Int

#include <vector>

namespace cgt {

class IntMatrix {
public:
    IntMatrix() = default;
    static IntMatrix identity(int n);
    IntMatrix(int n, std::vector<Int> entries);  // row-major, n*n

    int dim() const { return n_; }
    const Int& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    Int& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    IntMatrix operator*(const IntMatrix& other) const;
    Int determinant() const;
    // Exact inverse via the adjugate; requires determinant +-1.
    IntMatrix inverse() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

private:
    int n_ = 0;
    std::vector<Int> e_;
};

struct MatGroupOps {
    using Element = IntMatrix;
    int n = 0;
    IntMatrix mul(const IntMatrix& a, const IntMatrix& b) const { return a * b; }
    IntMatrix inv(const IntMatrix& a) const { return a.inverse(); }
    IntMatrix id() const { return IntMatrix::identity(n); }
    bool eq(const IntMatrix& a, const IntMatrix& b) const { return a == b; }
};

// Identity plus m in entry (i, j); 1-based indices, i != j.
IntMatrix transvection(int n, int i, int j, const Int& m);

struct ElementaryFactor {
    int i = 0;
    int j = 0;
    Int m;
};

// Exact check of t_ij(m) = [t_ik(1), t_kj(m)] for pairwise-distinct
// indices (always true; exercised exhaustively in tests).
bool commutator_identity_check(int n, int i, int j, int k, const Int& m);

// M = product of the returned transvections, left to right. Requires
// determinant 1 and n >= 3. No bound on the factor count is promised.
std::vector<ElementaryFactor> elementary_factorize(const IntMatrix& M);

// Certificate over base t_12(1): one factor when m = +-1, two otherwise
// (via the commutator identity), zero when m = 0.
ConjugateCertificate<IntMatrix> transvection_as_T_conjugates(int n, int i, int j,
                                                             const Int& m);

// Concatenation of per-transvection certificates for the elementary
// factorization of M; at most 2x the elementary count many factors.
ConjugateCertificate<IntMatrix> matrix_as_T_conjugates(const IntMatrix& M);

}  // namespace cgt

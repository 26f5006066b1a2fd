#pragma once

// Matrices over prime fields: transvection factorization by Gaussian
// elimination and exhaustive ball-growth width of SL_n(F_p) with respect
// to the set of all transvections, at desk scale.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cgt {

class ModMatrix {
public:
    ModMatrix() = default;
    static ModMatrix identity(int n, int p);
    ModMatrix(int n, int p, std::vector<int> entries);  // reduced mod p

    int dim() const { return n_; }
    int prime() const { return p_; }
    int at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    int& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    ModMatrix operator*(const ModMatrix& other) const;
    int determinant() const;

    friend bool operator==(const ModMatrix& a, const ModMatrix& b) {
        return a.n_ == b.n_ && a.p_ == b.p_ && a.e_ == b.e_;
    }
    friend bool operator!=(const ModMatrix& a, const ModMatrix& b) { return !(a == b); }
    friend bool operator<(const ModMatrix& a, const ModMatrix& b) { return a.e_ < b.e_; }

private:
    int n_ = 0;
    int p_ = 0;
    std::vector<int> e_;
};

// True iff M = I + v phi^T with phi(v) = 0, v != 0, phi != 0 (a rank-one
// unipotent).
bool is_transvection(const ModMatrix& M);

// M as a product (left to right) of elementary transvections over F_p.
// Requires determinant 1. Count is reported, not claimed optimal.
std::vector<ModMatrix> field_transvection_factorize(const ModMatrix& M);

// All transvections in SL_n(F_p).
std::vector<ModMatrix> all_transvections(int n, int p);

struct FpWidthReport {
    int width = 0;
    std::uint64_t group_order = 0;
    std::vector<std::uint64_t> ball_sizes;
};

// Exhaustive ball growth of SL_n(F_p) over the set of all transvections.
// Guard: group order must not exceed 10^6.
FpWidthReport bfs_width_fp(int n, int p);

}  // namespace cgt

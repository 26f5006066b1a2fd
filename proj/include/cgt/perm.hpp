#pragma once

// Permutations of {0..d-1} as image arrays, with cycle-string parsing.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgt {

class Perm {
public:
    Perm() = default;
    static Perm identity(int degree);
    explicit Perm(std::vector<int> images);  // validates bijectivity

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    Perm operator*(const Perm& other) const;  // (*this) after other
    Perm inverse() const;
    bool is_identity() const;

    friend bool operator==(const Perm& a, const Perm& b) { return a.images_ == b.images_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) { return a.images_ < b.images_; }

    // "(0 1)(2 3)" or "()"; points not mentioned are fixed.
    static Perm parse_cycles(const std::string& s, int degree);
    std::string cycle_string() const;

private:
    std::vector<int> images_;
};

}  // namespace cgt

#pragma once

// Exact dyadic rationals a/2^k and general rationals p/q.
// All geometry of piecewise-linear maps in this library lives here;
// there is no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace cgt {

using Int = boost::multiprecision::cpp_int;

class Rational;

// num / 2^exp, normalized so that exp == 0 or num is odd.
class Dyadic {
public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(Int num, unsigned exp);
    explicit Dyadic(long v) : num_(v), exp_(0) {}

    const Int& num() const { return num_; }
    unsigned exp() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return exp_ == 0; }

    Rational to_rational() const;

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    Dyadic operator-() const;

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.num_ == b.num_ && a.exp_ == b.exp_;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b);
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return !(a < b); }

    // Lowest-terms text form "p/q" with q a power of two, or a bare integer.
    std::string str() const;
    static Dyadic parse(const std::string& s);

private:
    Int num_;
    unsigned exp_;
    void normalize();
};

// p/q in lowest terms, q > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int num, Int den);
    explicit Rational(long v) : num_(v), den_(1) {}

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    // Exact conversion; empty when the denominator is not a power of two.
    std::optional<Dyadic> to_dyadic() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const;
    static Rational parse(const std::string& s);

private:
    Int num_;
    Int den_;
};

// 2^k as an exact rational, k may be negative.
Rational pow2(int k);

// Fixed point of the line through (x0, y0) with slope 2^k, k != 0:
// solves 2^k (x - x0) + y0 = x.
Rational linear_fixed_point(int slope_log2, const Dyadic& x0, const Dyadic& y0);

// The dyadic in the open interval (lo, hi) with minimal exponent,
// and minimal numerator among those. Deterministic.
Dyadic dyadic_strictly_between(const Rational& lo, const Rational& hi);

}  // namespace cgt

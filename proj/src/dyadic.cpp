#include "cgt/dyadic.hpp"

#include <utility>

namespace cgt {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

bool is_power_of_two(const Int& v) {
    if (v <= 0) return false;
    return (v & (v - 1)) == 0;
}

// Largest e with 2^e dividing v, v != 0.
unsigned twoadic_valuation(const Int& v) {
    Int a = abs_int(v);
    unsigned e = 0;
    while ((a & 1) == 0) {
        a >>= 1;
        ++e;
    }
    return e;
}

Int parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer: " + s);
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("bad integer: " + s);
    return Int(s);
}

}  // namespace

Dyadic::Dyadic(Int num, unsigned exp) : num_(std::move(num)), exp_(exp) { normalize(); }

void Dyadic::normalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    while (exp_ > 0 && (num_ & 1) == 0) {
        num_ >>= 1;
        --exp_;
    }
}

Rational Dyadic::to_rational() const { return Rational(num_, Int(1) << exp_); }

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    unsigned e = std::max(a.exp_, b.exp_);
    return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
}

Dyadic Dyadic::operator-() const {
    Dyadic r;
    r.num_ = -num_;
    r.exp_ = exp_;
    return r;
}

bool operator<(const Dyadic& a, const Dyadic& b) {
    unsigned e = std::max(a.exp_, b.exp_);
    return (a.num_ << (e - a.exp_)) < (b.num_ << (e - b.exp_));
}

std::string Dyadic::str() const {
    if (exp_ == 0) return num_.str();
    return num_.str() + "/" + (Int(1) << exp_).str();
}

Dyadic Dyadic::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Dyadic(parse_int(s), 0);
    Int p = parse_int(s.substr(0, slash));
    Int q = parse_int(s.substr(slash + 1));
    if (!is_power_of_two(q))
        throw std::invalid_argument("dyadic denominator must be a power of two: " + s);
    unsigned e = twoadic_valuation(q);
    if (e > 0 && p != 0 && (p & 1) == 0)
        throw std::invalid_argument("dyadic not in lowest terms: " + s);
    return Dyadic(p, e);
}

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(abs_int(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

std::optional<Dyadic> Rational::to_dyadic() const {
    if (!is_power_of_two(den_)) return std::nullopt;
    return Dyadic(num_, twoadic_valuation(den_));
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
}

std::string Rational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s), Int(1));
    Int p = parse_int(s.substr(0, slash));
    Int q = parse_int(s.substr(slash + 1));
    if (q <= 0) throw std::invalid_argument("denominator must be positive: " + s);
    if (boost::multiprecision::gcd(abs_int(p), q) != 1)
        throw std::invalid_argument("rational not in lowest terms: " + s);
    return Rational(p, q);
}

Rational pow2(int k) {
    if (k >= 0) return Rational(Int(1) << k, Int(1));
    return Rational(Int(1), Int(1) << (-k));
}

Rational linear_fixed_point(int slope_log2, const Dyadic& x0, const Dyadic& y0) {
    if (slope_log2 == 0) throw std::invalid_argument("slope 1 has no isolated fixed point");
    // x = (y0 - 2^k x0) / (1 - 2^k)
    Rational s = pow2(slope_log2);
    return (y0.to_rational() - s * x0.to_rational()) / (Rational(1) - s);
}

Dyadic dyadic_strictly_between(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw std::invalid_argument("dyadic_strictly_between: lo >= hi");
    for (unsigned e = 0;; ++e) {
        // Smallest m with m/2^e > lo.
        Int scale = Int(1) << e;
        Int m;
        Int num = lo.num() * scale;
        // floor(num/den) + 1
        Int q = num / lo.den();
        if (num < 0 && q * lo.den() != num) --q;
        m = q + 1;
        for (; Rational(m, scale) < hi; ++m) {
            if (e == 0 || (m & 1) != 0) {
                if (lo < Rational(m, scale)) return Dyadic(m, e);
            }
        }
    }
}

}  // namespace cgt

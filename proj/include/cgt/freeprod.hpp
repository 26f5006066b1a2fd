#pragma once

// Reduced words in free products of cyclic groups, palindrome machinery,
// and the constructive two-conjugate decomposition over Z2 * Z2.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cgt {

// Orders of the cyclic factors; 0 stands for the infinite cyclic group.
struct FactorSpec {
    std::vector<int> orders;

    explicit FactorSpec(std::vector<int> ords);
    std::size_t count() const { return orders.size(); }
    bool all_order_two() const;
    friend bool operator==(const FactorSpec& a, const FactorSpec& b) {
        return a.orders == b.orders;
    }
};

struct Syllable {
    int factor = 0;
    long long exponent = 0;  // nonzero; in 1..order-1 for finite factors

    friend bool operator==(const Syllable& a, const Syllable& b) {
        return a.factor == b.factor && a.exponent == b.exponent;
    }
};

// Reduced word: adjacent syllables lie in distinct factors.
class FPWord {
public:
    FPWord() = default;  // empty word
    FPWord(const FactorSpec& spec, std::vector<Syllable> syllables);  // reduces

    const std::vector<Syllable>& syllables() const { return syl_; }
    std::size_t length() const { return syl_.size(); }
    bool empty() const { return syl_.empty(); }

    friend bool operator==(const FPWord& a, const FPWord& b) { return a.syl_ == b.syl_; }
    friend bool operator!=(const FPWord& a, const FPWord& b) { return !(a == b); }

private:
    std::vector<Syllable> syl_;
};

FPWord multiply(const FactorSpec& spec, const FPWord& a, const FPWord& b);
FPWord invert(const FactorSpec& spec, const FPWord& w);
// x w x^-1, reduced.
FPWord conjugate_word(const FactorSpec& spec, const FPWord& w, const FPWord& x);

bool is_palindrome(const FPWord& w);

// Group-ops context for certificate machinery over free-product words.
struct FPGroupOps {
    using Element = FPWord;
    FactorSpec spec;
    FPWord mul(const FPWord& a, const FPWord& b) const { return multiply(spec, a, b); }
    FPWord inv(const FPWord& a) const { return invert(spec, a); }
    FPWord id() const { return FPWord(); }
    bool eq(const FPWord& a, const FPWord& b) const { return a == b; }
};

// Shapes of reduced words over Z2 * Z2 (factors a = 0, b = 1).
enum class Z2Z2Shape { Empty, AbPower, AbPowerA, BaPower, BaPowerB };

struct Z2Z2NormalForm {
    Z2Z2Shape shape = Z2Z2Shape::Empty;
    long long k = 0;  // (xy)^k or (xy)^k x
};

Z2Z2NormalForm z2z2_normal_form(const FactorSpec& spec, const FPWord& w);

// w = product of the factors u_i s_i u_i^-1 with s_i a single letter.
struct Z2Z2Decomposition {
    struct Factor {
        FPWord conjugator;
        FPWord base;  // the one-letter word a or b
    };
    FPWord target;
    std::vector<Factor> factors;  // at most two
};

Z2Z2Decomposition z2z2_decompose(const FactorSpec& spec, const FPWord& w);
bool verify_decomposition(const FactorSpec& spec, const Z2Z2Decomposition& d);

// Exhaustive check that every conjugate (conjugator length <= conj_len) of
// every palindrome of length <= word_len is again a palindrome. Requires
// every factor to have order two.
bool palindrome_closure_check(const FactorSpec& spec, int word_len, int conj_len);

// Search for a conjugate of a palindrome that is not one; empty when the
// bound finds no counterexample.
std::optional<std::pair<FPWord, FPWord>> palindrome_closure_counterexample(
    const FactorSpec& spec, int word_len, int conj_len);

// All reduced words of syllable length exactly len (finite factors only).
std::vector<FPWord> enumerate_words(const FactorSpec& spec, int len);

}  // namespace cgt

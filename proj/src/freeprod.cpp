#include "cgt/freeprod.hpp"

namespace cgt {

namespace {

long long reduce_exponent(const FactorSpec& spec, int factor, long long e) {
    int order = spec.orders[factor];
    if (order == 0) return e;
    e %= order;
    if (e < 0) e += order;
    return e;
}

}  // namespace

FactorSpec::FactorSpec(std::vector<int> ords) : orders(std::move(ords)) {
    if (orders.size() < 2) throw std::invalid_argument("need at least two factors");
    for (int o : orders)
        if (o == 1 || o < 0) throw std::invalid_argument("factor orders must be >= 2 (0 = infinite)");
}

bool FactorSpec::all_order_two() const {
    for (int o : orders)
        if (o != 2) return false;
    return true;
}

FPWord::FPWord(const FactorSpec& spec, std::vector<Syllable> syllables) {
    for (auto& s : syllables) {
        if (s.factor < 0 || static_cast<std::size_t>(s.factor) >= spec.count())
            throw std::invalid_argument("factor index out of range");
        s.exponent = reduce_exponent(spec, s.factor, s.exponent);
        if (s.exponent == 0) throw std::invalid_argument("zero syllable in word");
        if (!syl_.empty() && syl_.back().factor == s.factor)
            throw std::invalid_argument("adjacent syllables share a factor");
        syl_.push_back(s);
    }
}

FPWord multiply(const FactorSpec& spec, const FPWord& a, const FPWord& b) {
    std::vector<Syllable> out = a.syllables();
    for (const auto& s : b.syllables()) {
        if (!out.empty() && out.back().factor == s.factor) {
            long long e = reduce_exponent(spec, s.factor, out.back().exponent + s.exponent);
            out.pop_back();
            if (e != 0) out.push_back({s.factor, e});
            continue;
        }
        out.push_back(s);
    }
    return FPWord(spec, std::move(out));
}

FPWord invert(const FactorSpec& spec, const FPWord& w) {
    std::vector<Syllable> out;
    for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it)
        out.push_back({it->factor, reduce_exponent(spec, it->factor, -it->exponent)});
    return FPWord(spec, std::move(out));
}

FPWord conjugate_word(const FactorSpec& spec, const FPWord& w, const FPWord& x) {
    return multiply(spec, multiply(spec, x, w), invert(spec, x));
}

bool is_palindrome(const FPWord& w) {
    const auto& s = w.syllables();
    for (std::size_t i = 0, j = s.size(); i < j; ++i, --j)
        if (!(s[i] == s[j - 1])) return false;
    return true;
}

Z2Z2NormalForm z2z2_normal_form(const FactorSpec& spec, const FPWord& w) {
    if (spec.count() != 2 || !spec.all_order_two())
        throw std::invalid_argument("normal form requires Z2 * Z2");
    Z2Z2NormalForm nf;
    if (w.empty()) return nf;
    int first = w.syllables().front().factor;
    bool odd = w.length() % 2 != 0;
    if (first == 0) {
        nf.shape = odd ? Z2Z2Shape::AbPowerA : Z2Z2Shape::AbPower;
    } else {
        nf.shape = odd ? Z2Z2Shape::BaPowerB : Z2Z2Shape::BaPower;
    }
    nf.k = static_cast<long long>(w.length()) / 2;
    return nf;
}

namespace {

// Peel the first letter repeatedly: x w x shrinks an odd alternating word
// by two. Returns (u, s) with w = u s u^-1 and s a single letter.
std::pair<FPWord, FPWord> peel_to_letter(const FactorSpec& spec, const FPWord& w) {
    if (w.length() == 1) return {FPWord(), w};
    FPWord letter(spec, {w.syllables().front()});
    FPWord shrunk = conjugate_word(spec, w, letter);
    auto [u, s] = peel_to_letter(spec, shrunk);
    return {multiply(spec, letter, u), s};
}

}  // namespace

Z2Z2Decomposition z2z2_decompose(const FactorSpec& spec, const FPWord& w) {
    if (spec.count() != 2 || !spec.all_order_two())
        throw std::invalid_argument("decomposition requires Z2 * Z2");
    Z2Z2Decomposition d;
    d.target = w;
    if (w.empty()) return d;
    if (w.length() % 2 == 1) {
        auto [u, s] = peel_to_letter(spec, w);
        d.factors.push_back({u, s});
    } else {
        // (xy)^k = (xy)^{k-1} x * y: an odd prefix and a final letter.
        std::vector<Syllable> prefix(w.syllables().begin(), w.syllables().end() - 1);
        FPWord head(spec, std::move(prefix));
        FPWord tail(spec, {w.syllables().back()});
        auto [u, s] = peel_to_letter(spec, head);
        d.factors.push_back({u, s});
        d.factors.push_back({FPWord(), tail});
    }
    if (!verify_decomposition(spec, d))
        throw std::logic_error("decomposition failed verification");
    return d;
}

bool verify_decomposition(const FactorSpec& spec, const Z2Z2Decomposition& d) {
    FPWord acc;
    for (const auto& f : d.factors) {
        if (f.base.length() != 1) return false;
        acc = multiply(spec, acc, conjugate_word(spec, f.base, f.conjugator));
    }
    return acc == d.target;
}

std::vector<FPWord> enumerate_words(const FactorSpec& spec, int len) {
    for (int o : spec.orders)
        if (o == 0) throw std::invalid_argument("enumeration needs finite factors");
    std::vector<std::vector<Syllable>> partial{{}};
    for (int step = 0; step < len; ++step) {
        std::vector<std::vector<Syllable>> next;
        for (const auto& w : partial)
            for (std::size_t f = 0; f < spec.count(); ++f) {
                if (!w.empty() && w.back().factor == static_cast<int>(f)) continue;
                for (int e = 1; e < spec.orders[f]; ++e) {
                    auto copy = w;
                    copy.push_back({static_cast<int>(f), e});
                    next.push_back(std::move(copy));
                }
            }
        partial = std::move(next);
    }
    std::vector<FPWord> out;
    out.reserve(partial.size());
    for (auto& w : partial) out.emplace_back(spec, std::move(w));
    return out;
}

std::optional<std::pair<FPWord, FPWord>> palindrome_closure_counterexample(
    const FactorSpec& spec, int word_len, int conj_len) {
    std::vector<FPWord> conjugators{FPWord()};
    for (int l = 1; l <= conj_len; ++l)
        for (auto& w : enumerate_words(spec, l)) conjugators.push_back(std::move(w));
    for (int l = 1; l <= word_len; ++l)
        for (const auto& p : enumerate_words(spec, l)) {
            if (!is_palindrome(p)) continue;
            for (const auto& x : conjugators)
                if (!is_palindrome(conjugate_word(spec, p, x)))
                    return std::make_pair(p, x);
        }
    return std::nullopt;
}

bool palindrome_closure_check(const FactorSpec& spec, int word_len, int conj_len) {
    if (!spec.all_order_two())
        throw std::invalid_argument("closure check requires exponent-two factors");
    return !palindrome_closure_counterexample(spec, word_len, conj_len).has_value();
}

}  // namespace cgt

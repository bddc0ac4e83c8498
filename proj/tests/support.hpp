#pragma once
// Test-only oracles and generators.  Nothing here calls into the code paths
// it is used to check.

#include "selfaffine/derivative.hpp"
#include "selfaffine/errors.hpp"
#include "selfaffine/numdigits.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace testing_support {

using selfaffine::BigInt;
using selfaffine::Rational;

struct Digits {
    std::vector<int> pre;
    std::vector<int> per;
};

/// Schoolbook long division, stopping at the first repeated remainder.
inline Digits long_division(const BigInt& num, const BigInt& den, int base) {
    std::map<BigInt, std::size_t> seen;
    std::vector<int> digits;
    BigInt r = num;
    while (!seen.count(r)) {
        seen[r] = digits.size();
        r *= base;
        digits.push_back(BigInt(r / den).convert_to<int>());
        r %= den;
    }
    const auto start = static_cast<std::ptrdiff_t>(seen[r]);
    return {{digits.begin(), digits.begin() + start}, {digits.begin() + start, digits.end()}};
}

/// Exact F_{N,a}(x) for rational a and eventually periodic x, from the
/// self-affine identity F(x) = y_{xi_1} + s(xi_1) F(sigma x) applied along the
/// preperiod and solved as a linear fixed point over the period.
inline Rational exact_F(int N, const Rational& a, const std::vector<int>& pre, const std::vector<int>& per) {
    const Rational b = ((N + 1) * a - 1) / N;
    auto y = [&](int i) { return i % 2 == 0 ? Rational(i / 2) * (a - b) : Rational(i / 2 + 1) * a - Rational(i / 2) * b; };
    auto slope = [&](int i) { return i % 2 == 0 ? a : Rational(-b); };
    // F(sigma^k x) over one period: F = P + S F.
    Rational P = 0, S = 1;
    for (int d : per) {
        P += S * y(d);
        S *= slope(d);
    }
    const Rational tail = P / (1 - S);
    Rational value = 0, scale = 1;
    for (int d : pre) {
        value += scale * y(d);
        scale *= slope(d);
    }
    return value + scale * tail;
}

inline std::vector<int> random_word(std::mt19937_64& rng, std::size_t len, int max_digit) {
    std::uniform_int_distribution<int> digit(0, max_digit);
    std::vector<int> w(len);
    for (auto& d : w) d = digit(rng);
    return w;
}

/// Random eventually periodic point of (0,1) in base 2N+1.
inline selfaffine::DigitSeq random_point(std::mt19937_64& rng, int N, std::size_t max_pre = 3, std::size_t max_per = 4) {
    std::uniform_int_distribution<std::size_t> pre_len(0, max_pre), per_len(1, max_per);
    for (;;) {
        try {
            selfaffine::DigitSeq d(N, random_word(rng, pre_len(rng), 2 * N), random_word(rng, per_len(rng), 2 * N));
            if (d.value() > 0) return d;
        } catch (const selfaffine::DomainError&) {
        }
    }
}

inline selfaffine::OmegaSeq random_omega(std::mt19937_64& rng, int N, std::size_t max_pre = 3, std::size_t max_per = 4) {
    std::uniform_int_distribution<std::size_t> pre_len(0, max_pre), per_len(1, max_per);
    return selfaffine::OmegaSeq(N, random_word(rng, pre_len(rng), N), random_word(rng, per_len(rng), N));
}

// Probe trend tests.  Heuristics for testing only.
inline bool plus_trend(const std::vector<selfaffine::ProbeRow>& rows) {
    const std::size_t n = rows.size();
    double early = -INFINITY;
    for (std::size_t i = 0; i < 3; ++i) early = std::max({early, rows[i].right, rows[i].left});
    for (std::size_t i = n - 3; i < n; ++i) {
        const double late = std::min(rows[i].right, rows[i].left);
        if (!(late > early && late > 100.0)) return false;
    }
    return true;
}

inline bool minus_trend(const std::vector<selfaffine::ProbeRow>& rows) {
    const std::size_t n = rows.size();
    double early = INFINITY;
    for (std::size_t i = 0; i < 3; ++i) early = std::min({early, rows[i].right, rows[i].left});
    for (std::size_t i = n - 3; i < n; ++i) {
        const double late = std::max(rows[i].right, rows[i].left);
        if (!(late < early && late < -100.0)) return false;
    }
    return true;
}

inline bool zero_trend(const std::vector<selfaffine::ProbeRow>& rows) {
    const std::size_t n = rows.size();
    for (std::size_t i = n - 3; i < n; ++i) {
        if (!(std::fabs(rows[i].right) < 1e-2 && std::fabs(rows[i].left) < 1e-2)) return false;
    }
    return true;
}

/// The probe agrees with a verdict when exactly the matching trend test passes
/// (none for NOT_DIFFERENTIABLE).
inline bool probe_consistent(selfaffine::DerivativeTag tag, const std::vector<selfaffine::ProbeRow>& rows) {
    using selfaffine::DerivativeTag;
    const bool plus = plus_trend(rows), minus = minus_trend(rows), zero = zero_trend(rows);
    switch (tag) {
    case DerivativeTag::PLUS_INFINITY: return plus && !minus && !zero;
    case DerivativeTag::MINUS_INFINITY: return minus && !plus && !zero;
    case DerivativeTag::ZERO: return zero && !plus && !minus;
    case DerivativeTag::NOT_DIFFERENTIABLE: return !plus && !minus && !zero;
    }
    return false;
}

} // namespace testing_support

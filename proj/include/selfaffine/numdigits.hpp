#pragma once

#include "selfaffine/exact.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace selfaffine {

/// Validated parameter pair (N, a) of F_{N,a}; b solves (N+1)a - Nb = 1.
struct Params {
    int N = 1;
    Real a;
    Real b;

    int base() const { return 2 * N + 1; }
};

/// Requires N >= 1 and 1/(N+1) < a < 1, otherwise throws DomainError.
Params make_params(int N, double a);
Params make_params(int N, const Real& a);

/*
 * A digit string d_1 d_2 ... that is eventually periodic:
 * preperiod p_1..p_k followed by the period c_1..c_L repeated forever.
 * Stored in reduced form: the period is primitive and the preperiod is as
 * short as possible, so two objects compare equal iff the sequences agree.
 */
class PeriodicWord {
public:
    PeriodicWord(std::vector<int> preperiod, std::vector<int> period);

    const std::vector<int>& preperiod() const { return preperiod_; }
    const std::vector<int>& period() const { return period_; }

    /// Digit at 1-based position i >= 1.
    int at(std::size_t i) const;
    /// First n digits.
    std::vector<int> prefix(std::size_t n) const;

    PeriodicWord shifted(std::size_t n) const;

    friend bool operator==(const PeriodicWord&, const PeriodicWord&) = default;

private:
    std::vector<int> preperiod_;
    std::vector<int> period_;
};

/// Base-(2N+1) expansion of a point x in [0,1); never ends in (2N)^inf.
class DigitSeq {
public:
    /// Validates digits, converts a trailing (2N)^inf tail to the expansion
    /// ending in zeros, and reduces.  Throws DomainError for out-of-range
    /// digits, an empty period, or the value 1.
    DigitSeq(int N, std::vector<int> preperiod, std::vector<int> period);

    int N() const { return N_; }
    int base() const { return 2 * N_ + 1; }
    const std::vector<int>& preperiod() const { return word_.preperiod(); }
    const std::vector<int>& period() const { return word_.period(); }
    const PeriodicWord& word() const { return word_; }
    int at(std::size_t i) const { return word_.at(i); }

    /// Exact value sum xi_i (2N+1)^-i.
    Rational value() const;
    /// True when x = j/(2N+1)^k for some k (period is the single digit 0).
    bool is_grid_point() const;
    /// sigma^n: the point (2N+1)^n x mod 1.
    DigitSeq shifted(std::size_t n) const;
    /// Digits of 1 - x (xi -> 2N - xi, re-canonicalized).  Requires x > 0.
    DigitSeq mirrored() const;

    /// "0.d1 d2 (p1 p2)".
    std::string to_string() const;
    static DigitSeq parse(std::string_view text, int N);

    friend bool operator==(const DigitSeq&, const DigitSeq&) = default;

private:
    int N_;
    PeriodicWord word_;
};

/// Eventually periodic sequence over the alphabet {0, ..., N}.
class OmegaSeq {
public:
    OmegaSeq(int N, std::vector<int> preperiod, std::vector<int> period);

    int N() const { return N_; }
    const std::vector<int>& preperiod() const { return word_.preperiod(); }
    const std::vector<int>& period() const { return word_.period(); }
    const PeriodicWord& word() const { return word_; }
    int at(std::size_t i) const { return word_.at(i); }

    /// "d1 d2 (p1 p2)".
    std::string to_string() const;
    static OmegaSeq parse(std::string_view text, int N);

    friend bool operator==(const OmegaSeq&, const OmegaSeq&) = default;

private:
    int N_;
    PeriodicWord word_;
};

OmegaSeq shift(const OmegaSeq& w, std::size_t n);
/// Digitwise d -> N - d.
OmegaSeq complement(const OmegaSeq& w);

/// Base-(2N+1) digits of 2*omega after the finite prefix v (the point Pi_{2N+1}(v . 2 omega)).
DigitSeq doubled_with_prefix(const std::vector<int>& prefix, const OmegaSeq& w);

/// Canonical expansion of numerator/denominator in base 2N+1 by long division.
/// Throws DomainError unless 0 < x < 1, ResourceError when the period exceeds max_period.
DigitSeq digits_of_rational(const Rational& x, int N, std::size_t max_period = 10'000'000);
DigitSeq digits_of_rational(const BigInt& numerator, const BigInt& denominator, int N);

/// i(n; x): number of odd digits among xi_1..xi_n.
std::size_t odd_count_prefix(const DigitSeq& d, std::size_t n);

/// M(x); std::nullopt when infinitely many digits are odd.
std::optional<std::size_t> odd_total(const DigitSeq& d);

/// liminf i(n;x)/n, which for an eventually periodic tail is the odd fraction of the period.
Rational odd_liminf_frequency(const DigitSeq& d);

} // namespace selfaffine

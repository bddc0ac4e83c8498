#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace selfaffine {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/*
 * Exact numbers of the form p + q*sqrt(d), p and q rational, d a square-free
 * integer >= 2 (d == 0 when the number is rational).  Closed under the field
 * operations as long as both operands share the same radicand; mixing two
 * different radicands throws std::domain_error.
 *
 * This covers every exact parameter the library cares about: rational a and
 * beta, and the generalized golden ratios G(N) and their reciprocals.
 */
class Surd {
public:
    Surd() = default;
    Surd(long value) : p_(value) {}
    Surd(Rational p) : p_(std::move(p)) {}
    Surd(Rational p, Rational q, long radicand);

    /// sqrt(n) for n >= 0, reduced to k*sqrt(m) with m square-free.
    static Surd sqrt_of(long n);

    const Rational& rational_part() const { return p_; }
    const Rational& irrational_part() const { return q_; }
    long radicand() const { return d_; }
    bool is_rational() const { return d_ == 0 || q_ == 0; }

    /// Exact sign: -1, 0 or +1.
    int sign() const;
    long double to_long_double() const;
    double to_double() const { return static_cast<double>(to_long_double()); }
    BigInt floor() const;
    BigInt ceil() const;

    Surd operator-() const;
    Surd& operator+=(const Surd& rhs);
    Surd& operator-=(const Surd& rhs);
    Surd& operator*=(const Surd& rhs);
    Surd& operator/=(const Surd& rhs);

    friend Surd operator+(Surd lhs, const Surd& rhs) { return lhs += rhs; }
    friend Surd operator-(Surd lhs, const Surd& rhs) { return lhs -= rhs; }
    friend Surd operator*(Surd lhs, const Surd& rhs) { return lhs *= rhs; }
    friend Surd operator/(Surd lhs, const Surd& rhs) { return lhs /= rhs; }

    friend bool operator==(const Surd& lhs, const Surd& rhs) { return (lhs - rhs).sign() == 0; }
    friend std::strong_ordering operator<=>(const Surd& lhs, const Surd& rhs) {
        return (lhs - rhs).sign() <=> 0;
    }

    std::string to_string() const;

private:
    long common_radicand(const Surd& rhs) const;
    void normalize();

    Rational p_{0};
    Rational q_{0};
    long d_ = 0;
};

Surd pow(Surd base, unsigned exponent);

/// A real parameter that is either known exactly or only as a double.
struct Real {
    double value = 0.0;
    std::optional<Surd> exact;

    Real() = default;
    explicit Real(double v) : value(v) {}
    explicit Real(Surd s) : value(s.to_double()), exact(std::move(s)) {}

    bool is_exact() const { return exact.has_value(); }
};

/// Parses "p/q", a decimal ("0.58", "-1.5e-3") or an integer into an exact rational.
/// Throws DomainError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Exact rational to long double (correct to the precision of long double).
long double to_long_double(const Rational& r);

std::string to_string(const Rational& r);

} // namespace selfaffine

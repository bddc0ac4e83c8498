#include "selfaffine/exact.hpp"
#include "selfaffine/errors.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace selfaffine {

namespace mp = boost::multiprecision;

Surd::Surd(Rational p, Rational q, long radicand) : p_(std::move(p)), q_(std::move(q)), d_(0) {
    if (radicand < 0) {
        throw std::domain_error("Surd: negative radicand");
    }
    if (q_ != 0) {
        Surd root = sqrt_of(radicand);
        p_ += q_ * root.p_;
        q_ *= root.q_;
        d_ = root.d_;
    }
    normalize();
}

Surd Surd::sqrt_of(long n) {
    if (n < 0) {
        throw std::domain_error("Surd::sqrt_of: negative argument");
    }
    long outside = 1;
    long inside = n;
    for (long f = 2; f * f <= inside; ++f) {
        while (inside % (f * f) == 0) {
            inside /= f * f;
            outside *= f;
        }
    }
    Surd s;
    if (inside == 1 || inside == 0) {
        s.p_ = inside == 0 ? 0 : outside;
        return s;
    }
    s.q_ = outside;
    s.d_ = inside;
    return s;
}

void Surd::normalize() {
    if (q_ == 0) {
        d_ = 0;
    }
}

long Surd::common_radicand(const Surd& rhs) const {
    if (is_rational()) {
        return rhs.is_rational() ? 0 : rhs.d_;
    }
    if (rhs.is_rational() || rhs.d_ == d_) {
        return d_;
    }
    throw std::domain_error("Surd: operands have different radicands");
}

int Surd::sign() const {
    const int sp = p_.sign();
    if (q_ == 0) {
        return sp;
    }
    const int sq = q_.sign();
    if (sp >= 0 && sq > 0) {
        return 1;
    }
    if (sp <= 0 && sq < 0) {
        return -1;
    }
    // p and q have opposite signs: compare p^2 with q^2 d.
    const Rational diff = p_ * p_ - q_ * q_ * d_;
    return sp > 0 ? diff.sign() : -diff.sign();
}

long double Surd::to_long_double() const {
    long double v = selfaffine::to_long_double(p_);
    if (q_ != 0) {
        v += selfaffine::to_long_double(q_) * std::sqrt(static_cast<long double>(d_));
    }
    return v;
}

BigInt Surd::floor() const {
    BigInt guess{static_cast<long long>(std::floor(to_long_double()))};
    while (Surd(Rational(guess)) > *this) {
        --guess;
    }
    while (Surd(Rational(guess + 1)) <= *this) {
        ++guess;
    }
    return guess;
}

BigInt Surd::ceil() const {
    BigInt f = floor();
    return Surd(Rational(f)) == *this ? f : f + 1;
}

Surd Surd::operator-() const {
    Surd r = *this;
    r.p_ = -r.p_;
    r.q_ = -r.q_;
    return r;
}

Surd& Surd::operator+=(const Surd& rhs) {
    d_ = common_radicand(rhs);
    p_ += rhs.p_;
    q_ += rhs.q_;
    normalize();
    return *this;
}

Surd& Surd::operator-=(const Surd& rhs) {
    d_ = common_radicand(rhs);
    p_ -= rhs.p_;
    q_ -= rhs.q_;
    normalize();
    return *this;
}

Surd& Surd::operator*=(const Surd& rhs) {
    const long d = common_radicand(rhs);
    Rational p = p_ * rhs.p_ + q_ * rhs.q_ * d;
    Rational q = p_ * rhs.q_ + q_ * rhs.p_;
    p_ = std::move(p);
    q_ = std::move(q);
    d_ = d;
    normalize();
    return *this;
}

Surd& Surd::operator/=(const Surd& rhs) {
    const long d = common_radicand(rhs);
    const Rational norm = rhs.p_ * rhs.p_ - rhs.q_ * rhs.q_ * d;
    if (norm == 0) {
        throw std::domain_error("Surd: division by zero");
    }
    Surd conj;
    conj.p_ = rhs.p_ / norm;
    conj.q_ = -rhs.q_ / norm;
    conj.d_ = d;
    conj.normalize();
    return *this *= conj;
}

std::string Surd::to_string() const {
    std::string s = selfaffine::to_string(p_);
    if (q_ != 0) {
        s += " + (" + selfaffine::to_string(q_) + ")*sqrt(" + std::to_string(d_) + ")";
    }
    return s;
}

Surd pow(Surd base, unsigned exponent) {
    Surd result(1L);
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

Rational parse_rational(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) {
        throw DomainError("empty number");
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Rational num = parse_rational(text.substr(0, slash));
        Rational den = parse_rational(text.substr(slash + 1));
        if (den == 0) {
            throw DomainError("zero denominator in '" + std::string(text) + "'");
        }
        return num / den;
    }

    std::string_view s = text;
    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string digits;
    long scale = 0;
    bool seen_point = false;
    bool any_digit = false;
    std::size_t i = 0;
    for (; i < s.size(); ++i) {
        const char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            any_digit = true;
            if (seen_point) ++scale;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    long exponent = 0;
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E') {
            throw DomainError("malformed number '" + std::string(text) + "'");
        }
        std::string exp_text(s.substr(i + 1));
        std::size_t used = 0;
        try {
            exponent = std::stol(exp_text, &used);
        } catch (const std::exception&) {
            throw DomainError("malformed exponent in '" + std::string(text) + "'");
        }
        if (used != exp_text.size()) {
            throw DomainError("malformed exponent in '" + std::string(text) + "'");
        }
    }
    if (!any_digit) {
        throw DomainError("malformed number '" + std::string(text) + "'");
    }
    // GMP reads a leading 0 as an octal prefix.
    const auto first = digits.find_first_not_of('0');
    BigInt numerator(first == std::string::npos ? std::string("0") : digits.substr(first));
    const long shift = exponent - scale;
    BigInt ten_power = mp::pow(BigInt(10), static_cast<unsigned>(shift < 0 ? -shift : shift));
    Rational value = shift >= 0 ? Rational(numerator * ten_power) : Rational(numerator, ten_power);
    return negative ? Rational(-value) : value;
}

long double to_long_double(const Rational& r) {
    if (r == 0) {
        return 0.0L;
    }
    BigInt num = mp::numerator(r);
    BigInt den = mp::denominator(r);
    const bool negative = num < 0;
    if (negative) num = -num;
    // Scale so the integer quotient carries ~96 significant bits.
    const long num_bits = static_cast<long>(mp::msb(num));
    const long den_bits = static_cast<long>(mp::msb(den));
    const long shift = 96 - (num_bits - den_bits);
    BigInt q = shift >= 0 ? BigInt((num << shift) / den) : BigInt(num / (den << -shift));
    // q < 2^98, so split into two exact 64-bit halves.
    const BigInt high = q >> 64;
    const BigInt low = q - (high << 64);
    long double v = std::ldexp(static_cast<long double>(high.convert_to<unsigned long long>()), 64) +
                    static_cast<long double>(low.convert_to<unsigned long long>());
    v = std::ldexp(v, static_cast<int>(-shift));
    return negative ? -v : v;
}

std::string to_string(const Rational& r) {
    if (mp::denominator(r) == 1) {
        return mp::numerator(r).str();
    }
    return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

} // namespace selfaffine

#include "selfaffine/derivative.hpp"
#include "selfaffine/errors.hpp"
#include "selfaffine/selfaffine.hpp"

#include <cmath>
#include <limits>

namespace selfaffine {

namespace {

constexpr long double kMargin = 1e-12L;

// Decides "all values > 0" for margins computed in floating point.  Throws
// only when the answer hinges on a value too close to 0 to resolve.
bool all_positive_inexact(const std::vector<long double>& values, const char* name) {
    bool ambiguous = false;
    for (long double v : values) {
        if (v <= -kMargin) return false;
        if (v < kMargin) ambiguous = true;
    }
    if (ambiguous) {
        throw PrecisionError(std::string("a margin ") + name + " is within 1e-12 of 0; supply a exactly");
    }
    return true;
}

template <typename T>
std::vector<T> tail_sums(const std::vector<int>& c, const T& a) {
    // S_r = sum_{j>=1} a^j c_{r+j-1 mod L}, so S_r = a (c_r + S_{r+1}).
    const std::size_t L = c.size();
    T numer = T(0L);
    T scale = T(1L);
    for (std::size_t j = 0; j < L; ++j) {
        scale = scale * a;
        numer = numer + scale * T(long(c[j]));
    }
    std::vector<T> S(L);
    S[0] = numer / (T(1L) - scale);
    for (std::size_t r = L - 1; r >= 1; --r) {
        S[r] = a * (T(long(c[r])) + S[(r + 1) % L]);
    }
    return S;
}

} // namespace

std::string to_string(DerivativeTag tag) {
    switch (tag) {
    case DerivativeTag::ZERO: return "ZERO";
    case DerivativeTag::PLUS_INFINITY: return "PLUS_INFINITY";
    case DerivativeTag::MINUS_INFINITY: return "MINUS_INFINITY";
    case DerivativeTag::NOT_DIFFERENTIABLE: return "NOT_DIFFERENTIABLE";
    }
    return "NOT_DIFFERENTIABLE";
}

InfiniteConditions check_infinite_conditions(const Params& p, const OmegaSeq& w) {
    if (w.N() != p.N) {
        throw DomainError("sequence alphabet does not match N");
    }
    const std::vector<int>& c = w.period();
    InfiniteConditions out;
    if (p.a.is_exact()) {
        const Surd& a = *p.a.exact;
        const Surd one(1L);
        const Surd complement_total = Surd(long(p.N)) * a / (one - a);
        out.cond7 = out.cond8 = true;
        for (const Surd& s : tail_sums<Surd>(c, a)) {
            const Surd t = one - s;
            const Surd t_bar = one - complement_total + s;
            out.cond7 = out.cond7 && t.sign() > 0;
            out.cond8 = out.cond8 && t_bar.sign() > 0;
            out.T.push_back(t.to_double());
            out.T_bar.push_back(t_bar.to_double());
        }
        return out;
    }
    const long double a = p.a.value;
    const long double complement_total = p.N * a / (1.0L - a);
    std::vector<long double> T, T_bar;
    for (long double s : tail_sums<long double>(c, a)) {
        T.push_back(1.0L - s);
        T_bar.push_back(1.0L - complement_total + s);
        out.T.push_back(static_cast<double>(T.back()));
        out.T_bar.push_back(static_cast<double>(T_bar.back()));
    }
    out.cond7 = all_positive_inexact(T, "T");
    out.cond8 = all_positive_inexact(T_bar, "T_bar");
    return out;
}

DerivativeClass classify_derivative(const Params& p, const DigitSeq& d) {
    if (d.N() != p.N) {
        throw DomainError("digit sequence base does not match N");
    }
    if (d.preperiod().empty() && d.is_grid_point()) {
        throw DomainError("x must lie in (0,1)");
    }
    std::size_t even = 0, odd = 0;
    for (int xi : d.period()) (xi % 2 == 0 ? even : odd)++;

    DerivativeClass out;
    out.M = odd_total(d);
    const int B = p.base();
    const long double log_gamma = even * std::log(static_cast<long double>(B) * p.a.value) +
                                  odd * std::log(static_cast<long double>(B) * p.b.value);
    out.gamma = log_gamma > std::log(std::numeric_limits<double>::max())
                    ? std::numeric_limits<double>::infinity()
                    : static_cast<double>(std::exp(log_gamma));

    if (odd > 0) {
        bool shrinking;
        if (std::fabs(log_gamma) > 1e-9L) {
            shrinking = log_gamma < 0;
        } else if (p.a.is_exact()) {
            const Surd gamma = pow(Surd(long(B)) * *p.a.exact, static_cast<unsigned>(even)) *
                               pow(Surd(long(B)) * *p.b.exact, static_cast<unsigned>(odd));
            shrinking = gamma < Surd(1L);
        } else if (std::fabs(std::expm1(log_gamma)) < kMargin) {
            throw PrecisionError("per-period growth is within 1e-12 of 1; supply a exactly");
        } else {
            shrinking = log_gamma < 0;
        }
        out.tag = shrinking ? DerivativeTag::ZERO : DerivativeTag::NOT_DIFFERENTIABLE;
        return out;
    }

    std::vector<int> omega;
    for (int xi : d.period()) omega.push_back(xi / 2);
    out.conditions = check_infinite_conditions(p, OmegaSeq(p.N, {}, omega));
    if (out.conditions->cond7 && out.conditions->cond8) {
        out.tag = (*out.M % 2 == 0) ? DerivativeTag::PLUS_INFINITY : DerivativeTag::MINUS_INFINITY;
    } else {
        out.tag = DerivativeTag::NOT_DIFFERENTIABLE;
    }
    return out;
}

std::vector<ProbeRow> finite_difference_probe(const Params& p, const Rational& x, unsigned levels) {
    if (x <= 0 || x >= 1) {
        throw DomainError("x must lie in (0,1)");
    }
    const DigitSeq zero(p.N, {}, {0});
    const DigitSeq dx = digits_of_rational(x, p.N);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<ProbeRow> rows;
    BigInt scale = 1;
    for (unsigned n = 1; n <= levels; ++n) {
        scale *= p.base();
        const Rational h(BigInt(1), scale);
        const long double inv_h = scale.convert_to<long double>();
        ProbeRow row;
        row.n = n;
        row.h = static_cast<double>(1.0L / inv_h);

        const Rational up = x + h;
        if (up < 1) {
            row.right = static_cast<double>(F_increment(p, dx, digits_of_rational(up, p.N)) * inv_h);
        } else if (up == 1) {
            // F(1) - F(x) = F(1-x) - F(0) by symmetry.
            row.right = static_cast<double>(F_increment(p, zero, dx.mirrored()) * inv_h);
        } else {
            row.right = nan;
        }

        const Rational down = x - h;
        if (down > 0) {
            row.left = static_cast<double>(F_increment(p, digits_of_rational(down, p.N), dx) * inv_h);
        } else if (down == 0) {
            row.left = static_cast<double>(F_increment(p, zero, dx) * inv_h);
        } else {
            row.left = nan;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace selfaffine

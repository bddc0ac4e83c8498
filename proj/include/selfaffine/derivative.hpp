#pragma once

#include "selfaffine/numdigits.hpp"

#include <optional>
#include <string>
#include <vector>

namespace selfaffine {

enum class DerivativeTag { ZERO, PLUS_INFINITY, MINUS_INFINITY, NOT_DIFFERENTIABLE };

std::string to_string(DerivativeTag tag);

/// Tail margins for the two infinite-derivative conditions, one entry per
/// residue class of the period: T = 1 - sum a^j w_{n+j} and
/// T_bar = 1 - sum a^j (N - w_{n+j}).
struct InfiniteConditions {
    bool cond7 = false;
    bool cond8 = false;
    std::vector<double> T;
    std::vector<double> T_bar;
};

/// Only the periodic tail of w matters.  Exact when p.a is exact; otherwise
/// throws PrecisionError if a margin lies within 1e-12 of 0.
InfiniteConditions check_infinite_conditions(const Params& p, const OmegaSeq& w);

struct DerivativeClass {
    DerivativeTag tag = DerivativeTag::NOT_DIFFERENTIABLE;
    /// Growth of |f_n'| over one period; +inf when it overflows a double.
    double gamma = 0.0;
    /// Number of odd digits; empty when infinite.
    std::optional<std::size_t> M;
    /// Present when the period is all even.
    std::optional<InfiniteConditions> conditions;
};

DerivativeClass classify_derivative(const Params& p, const DigitSeq& d);

struct ProbeRow {
    unsigned n = 0;
    double h = 0.0;
    /// (F(x+h) - F(x))/h and (F(x) - F(x-h))/h; NaN when x +- h leaves [0,1].
    double right = 0.0;
    double left = 0.0;
};

std::vector<ProbeRow> finite_difference_probe(const Params& p, const Rational& x, unsigned levels);

} // namespace selfaffine

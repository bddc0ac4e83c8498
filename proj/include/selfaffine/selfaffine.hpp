#pragma once

#include "selfaffine/numdigits.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace selfaffine {

/// Interpolation points (x_i, y_i), i = 0..2N+1, of the generating pattern.
struct GeneratorPattern {
    std::vector<double> xs;
    std::vector<double> ys;
};

GeneratorPattern generator_pattern(const Params& p);

/// n-th approximant f_n at x in [0,1]; f_0 is the identity.
double eval_fn(const Params& p, unsigned n, double x);

/// F_{N,a}(x) by the digit series, with absolute error at most tol.
double eval_F(const Params& p, const DigitSeq& d, double tol = 1e-12);
double eval_F(const Params& p, const Rational& x, double tol = 1e-12);

/// F(y) - F(x) computed without cancellation: a common digit prefix of
/// length k is factored out through F(x) = P_k + s_k F(sigma^k x).
long double F_increment(const Params& p, const DigitSeq& x, const DigitSeq& y, double tol = 1e-15);

/// Slope of f_n on the level-n cell containing x.  Throws GridPointError
/// when x is a grid point of level <= n.
double slope_fn(const Params& p, const DigitSeq& d, unsigned n);
/// Same slope in exact arithmetic; requires p.a to be exact.
Surd slope_fn_exact(const Params& p, const DigitSeq& d, unsigned n);

/// Values of f_depth (equal to F) at x_j = j/(2N+1)^depth, j = 0..(2N+1)^depth.
struct GraphSample {
    unsigned depth = 0;
    int N = 1;
    std::vector<std::pair<double, double>> points;
};

/// Throws ResourceError when (2N+1)^depth + 1 exceeds cap.
GraphSample sample_graph(const Params& p, unsigned depth, std::size_t cap = 10'000'000);

/// Closed-form box-counting dimension of the graph.
double box_dimension(const Params& p);

/// Least-squares slope of log(box count) against k log(2N+1), k = 1..depth,
/// using the column ranges of a graph sample.
double box_counting_estimate(const GraphSample& sample);

} // namespace selfaffine

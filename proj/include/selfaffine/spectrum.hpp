#pragma once

#include "selfaffine/betaexp.hpp"
#include "selfaffine/derivative.hpp"
#include "selfaffine/numdigits.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace selfaffine {

/// Root of (2N+1)^(2N+1) a^(N+1) ((N+1)a-1)^N = N^N in (a_min, 1), by bisection.
double a0_tilde(int N, double tol = 1e-12);
/// g_N(a) = (2N+1)^(2N+1) a^(N+1) ((N+1)a-1)^N / N^N, strictly increasing.
double g_normalized(int N, double a);
/// beta_c(N): root of Pi_beta(tau^(N)) = 1 on [G(N), N+1], by bisection.
double komornik_loreti(int N, double tol = 1e-12);
/// Pi_beta(tau^(N)), the series truncated once its tail is below tol.
double pi_thue_morse(int N, double beta, double tol = 1e-13);

struct Thresholds {
    int N = 1;
    double a_min = 0.0;
    double a0_tilde = 0.0;
    double a0_star = 0.0;
    double a_inf_hat = 0.0;
    double a_inf_star = 0.0;
    double beta_c = 0.0;
    double golden = 0.0;
};

Thresholds thresholds(int N, double tol = 1e-12);
/// (3N+1)/((N+1)(2N+1)) exactly.
Rational a0_star_exact(int N);

double phi(int N, double a);
double h_entropy(int N, double p);
double dim_frequency_set(int N, const std::vector<double>& probs);

enum class Regime { EMPTY, NULL_UNCOUNTABLE, FULL_MEASURE, COUNTABLE_RATIONAL, UNCOUNTABLE_DIM_ZERO, POSITIVE_DIM };

std::string to_string(Regime regime);

struct DimensionReport {
    int N = 1;
    double a = 0.0;
    Regime regime = Regime::EMPTY;
    /// Equal when the dimension is known in closed form.
    double lower = 0.0;
    double upper = 0.0;
    unsigned depth = 0;
    bool at_threshold = false;
    std::vector<Regime> neighbors;
};

DimensionReport dim_D0(int N, const Real& a);
DimensionReport dim_Dinf(int N, const Real& a, unsigned depth = 20);

struct DinfPoint {
    Rational x;
    DigitSeq digits;
    std::vector<int> prefix;
    OmegaSeq omega;
    DerivativeTag tag;
};

struct RejectedPoint {
    DinfPoint candidate;
    std::string reason;
};

struct DinfEnumeration {
    std::vector<DinfPoint> points;
    std::vector<RejectedPoint> rejected;
};

/// Points Pi_{2N+1}(v . 2 omega) with |v| <= max_prefix and omega purely
/// periodic with primitive period <= max_period, omega univoque in base 1/a.
/// Each candidate is checked with classify_derivative; failures go to
/// `rejected`.  Points are sorted by value.
DinfEnumeration enumerate_Dinf_points(int N, const Real& a, unsigned max_prefix, unsigned max_period);

struct AsymptoticRow {
    int N = 1;
    double a_min = 0.0;
    double a0_tilde = 0.0;
    double a0_star = 0.0;
    double a_inf_hat = 0.0;
    double a_inf_star = 0.0;
};

struct AsymptoticReport {
    /// N times each threshold.
    std::vector<AsymptoticRow> rows;
    AsymptoticRow limits;
    /// Last row minus limits.
    AsymptoticRow deltas;
};

AsymptoticReport asymptotic_check(const std::vector<int>& Ns);

/// (a, h_N(phi_N(a))) on an evenly spaced interior grid of (a_min, a0*).
std::vector<std::pair<double, double>> dimension_curve(int N, std::size_t points);

/// Resolves "a0tilde:N", "a0star:N", "amin:N", "kl:N", "gr:N", or a literal
/// number.  For kind == ParameterKind::A the references kl and gr denote
/// 1/beta_c(N) and 1/G(N); for ParameterKind::Beta they denote beta_c(N) and G(N).
enum class ParameterKind { A, Beta };
Real resolve_parameter(std::string_view text, ParameterKind kind);

} // namespace selfaffine

#include "selfaffine/spectrum.hpp"
#include "selfaffine/errors.hpp"

#include <cmath>
#include <map>

namespace selfaffine {

namespace {

constexpr int kBisectionSteps = 200;

void check_N(int N) {
    if (N < 1) {
        throw DomainError("N must be a positive integer");
    }
}

void check_a(int N, double a) {
    check_N(N);
    if (!(a * (N + 1) > 1.0) || !(a < 1.0)) {
        throw DomainError("a must lie in (1/(N+1), 1)");
    }
}

double log_g(int N, double a) {
    return -N * std::log(static_cast<double>(N)) + (2 * N + 1) * std::log(2.0 * N + 1.0) +
           (N + 1) * std::log(a) + N * std::log((N + 1) * a - 1.0);
}

/// a >= threshold, exactly when a is exact.
bool at_least(const Real& a, const Surd& threshold) {
    return a.is_exact() ? *a.exact >= threshold : a.value >= threshold.to_double();
}

} // namespace

double g_normalized(int N, double a) {
    check_a(N, a);
    return std::exp(log_g(N, a));
}

double a0_tilde(int N, double tol) {
    check_N(N);
    double lo = 1.0 / (N + 1);
    double hi = 1.0;
    if (!(log_g(N, hi) > 0.0)) {
        throw ConvergenceError("a0_tilde bisection is not bracketed");
    }
    // log g is cheap and smooth, so bisect down to adjacent doubles; tol only
    // bounds the accepted bracket.
    for (int i = 0; i < kBisectionSteps; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (log_g(N, mid) < 0.0 ? lo : hi) = mid;
    }
    if (hi - lo > tol) {
        throw ConvergenceError("a0_tilde bisection did not reach tol");
    }
    return 0.5 * (lo + hi);
}

double pi_thue_morse(int N, double beta, double tol) {
    check_N(N);
    const long double max_digit = (N % 2 == 0) ? N / 2 + 1 : (N + 1) / 2;
    const long double B = beta;
    std::size_t terms = 1;
    for (long double tail = max_digit / (B * (B - 1.0L)); tail >= tol / 10.0L; tail /= B) {
        ++terms;
    }
    return static_cast<double>(pi_beta_prefix(generalized_tm_prefix(N, terms), B));
}

double komornik_loreti(int N, double tol) {
    check_N(N);
    double lo = golden_ratio(N);
    double hi = N + 1.0;
    const double pi_tol = std::min(1e-13, tol * 0.1);
    if (!(pi_thue_morse(N, lo, pi_tol) > 1.0) || !(pi_thue_morse(N, hi, pi_tol) < 1.0)) {
        throw ConvergenceError("Komornik-Loreti bisection is not bracketed");
    }
    for (int i = 0; i < kBisectionSteps && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        (pi_thue_morse(N, mid, pi_tol) > 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

Rational a0_star_exact(int N) {
    check_N(N);
    return Rational(3 * N + 1, (N + 1) * (2 * N + 1));
}

Thresholds thresholds(int N, double tol) {
    if (!(tol > 0.0)) {
        throw DomainError("tol must be positive");
    }
    Thresholds t;
    t.N = N;
    t.a_min = 1.0 / (N + 1);
    t.a0_tilde = a0_tilde(N, tol);
    t.a0_star = to_long_double(a0_star_exact(N));
    t.beta_c = komornik_loreti(N, tol);
    t.a_inf_hat = 1.0 / t.beta_c;
    t.golden = golden_ratio(N);
    t.a_inf_star = (Surd(1L) / golden_ratio_exact(N)).to_double();
    return t;
}

double phi(int N, double a) {
    check_a(N, a);
    return std::log((2 * N + 1) * a) / (std::log(N * a) - std::log((N + 1) * a - 1.0));
}

double h_entropy(int N, double p) {
    check_N(N);
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("p must lie in (0,1)");
    }
    return -(p * std::log(p / N) + (1.0 - p) * std::log((1.0 - p) / (N + 1))) / std::log(2.0 * N + 1.0);
}

double dim_frequency_set(int N, const std::vector<double>& probs) {
    check_N(N);
    if (probs.size() != static_cast<std::size_t>(2 * N + 1)) {
        throw DomainError("expected 2N+1 probabilities");
    }
    double total = 0.0;
    double entropy = 0.0;
    for (double q : probs) {
        if (!(q >= 0.0)) {
            throw DomainError("probabilities must be nonnegative");
        }
        total += q;
        if (q > 0.0) entropy -= q * std::log(q);
    }
    if (std::fabs(total - 1.0) > 1e-12) {
        throw DomainError("probabilities must sum to 1");
    }
    return entropy / std::log(2.0 * N + 1.0);
}

std::string to_string(Regime regime) {
    switch (regime) {
    case Regime::EMPTY: return "EMPTY";
    case Regime::NULL_UNCOUNTABLE: return "NULL_UNCOUNTABLE";
    case Regime::FULL_MEASURE: return "FULL_MEASURE";
    case Regime::COUNTABLE_RATIONAL: return "COUNTABLE_RATIONAL";
    case Regime::UNCOUNTABLE_DIM_ZERO: return "UNCOUNTABLE_DIM_ZERO";
    case Regime::POSITIVE_DIM: return "POSITIVE_DIM";
    }
    return "EMPTY";
}

DimensionReport dim_D0(int N, const Real& a) {
    make_params(N, a);
    DimensionReport r;
    r.N = N;
    r.a = a.value;
    if (at_least(a, Surd(a0_star_exact(N)))) {
        r.regime = Regime::EMPTY;
        return r;
    }
    if (a.value < a0_tilde(N)) {
        r.regime = Regime::FULL_MEASURE;
        r.lower = r.upper = 1.0;
        return r;
    }
    r.lower = r.upper = h_entropy(N, phi(N, a.value));
    r.regime = Regime::NULL_UNCOUNTABLE;
    return r;
}

DimensionReport dim_Dinf(int N, const Real& a, unsigned depth) {
    make_params(N, a);
    DimensionReport r;
    r.N = N;
    r.a = a.value;
    if (at_least(a, Surd(1L) / golden_ratio_exact(N))) {
        r.regime = Regime::EMPTY;
        return r;
    }
    const double hat = 1.0 / komornik_loreti(N);
    if (std::fabs(a.value - hat) <= 1e-12) {
        r.regime = Regime::UNCOUNTABLE_DIM_ZERO;
        r.at_threshold = true;
        r.neighbors = {Regime::COUNTABLE_RATIONAL, Regime::POSITIVE_DIM};
        return r;
    }
    if (a.value > hat) {
        r.regime = Regime::COUNTABLE_RATIONAL;
        return r;
    }
    const Real beta = a.is_exact() ? Real(Surd(1L) / *a.exact) : Real(1.0 / a.value);
    const EntropyBounds eb = univoque_entropy_bounds(N, beta, depth);
    const double factor = std::log(beta.value) / std::log(2.0 * N + 1.0);
    r.regime = Regime::POSITIVE_DIM;
    r.depth = depth;
    r.lower = factor * eb.lower;
    r.upper = factor * eb.upper;
    return r;
}

namespace {

bool next_word(std::vector<int>& word, int max_digit) {
    for (std::size_t i = word.size(); i-- > 0;) {
        if (word[i] < max_digit) {
            ++word[i];
            return true;
        }
        word[i] = 0;
    }
    return false;
}

} // namespace

DinfEnumeration enumerate_Dinf_points(int N, const Real& a, unsigned max_prefix, unsigned max_period) {
    const Params p = make_params(N, a);
    const Real beta = a.is_exact() ? Real(Surd(1L) / *a.exact) : Real(1.0 / a.value);
    std::vector<OmegaSeq> omegas;
    DinfEnumeration out;
    for (unsigned L = 1; L <= max_period; ++L) {
        std::vector<int> word(L, 0);
        do {
            OmegaSeq w(N, {}, word);
            if (w.period().size() != L) continue;
            try {
                if (is_univoque(w, N, beta)) omegas.push_back(std::move(w));
            } catch (const PrecisionError&) {
                DinfPoint candidate{doubled_with_prefix({}, w).value(), doubled_with_prefix({}, w), {}, w,
                                    DerivativeTag::NOT_DIFFERENTIABLE};
                out.rejected.push_back({std::move(candidate), "univoque test ambiguous at working precision"});
            }
        } while (next_word(word, N));
    }

    std::map<Rational, DinfPoint> accepted;
    std::map<Rational, RejectedPoint> rejected;
    for (const OmegaSeq& w : omegas) {
        for (unsigned len = 0; len <= max_prefix; ++len) {
            std::vector<int> v(len, 0);
            do {
                DigitSeq digits = doubled_with_prefix(v, w);
                Rational x = digits.value();
                if (accepted.count(x) || rejected.count(x)) continue;
                DinfPoint point{x, digits, v, w, DerivativeTag::NOT_DIFFERENTIABLE};
                try {
                    point.tag = classify_derivative(p, digits).tag;
                } catch (const PrecisionError&) {
                    rejected.emplace(x, RejectedPoint{std::move(point), "classification ambiguous at working precision"});
                    continue;
                }
                if (point.tag == DerivativeTag::PLUS_INFINITY || point.tag == DerivativeTag::MINUS_INFINITY) {
                    accepted.emplace(x, std::move(point));
                } else {
                    const std::string reason = "classified as " + to_string(point.tag);
                    rejected.emplace(x, RejectedPoint{std::move(point), reason});
                }
            } while (next_word(v, 2 * N));
        }
    }
    for (auto& [x, point] : accepted) out.points.push_back(std::move(point));
    for (auto& [x, r] : rejected) out.rejected.push_back(std::move(r));
    return out;
}

AsymptoticReport asymptotic_check(const std::vector<int>& Ns) {
    AsymptoticReport report;
    for (int N : Ns) {
        const Thresholds t = thresholds(N);
        report.rows.push_back({N, N * t.a_min, N * t.a0_tilde, N * t.a0_star, N * t.a_inf_hat, N * t.a_inf_star});
    }
    report.limits = {0, 1.0, (1.0 + std::sqrt(2.0)) / 2.0, 1.5, 2.0, 2.0};
    if (!report.rows.empty()) {
        const AsymptoticRow& last = report.rows.back();
        report.deltas = {last.N,
                         last.a_min - report.limits.a_min,
                         last.a0_tilde - report.limits.a0_tilde,
                         last.a0_star - report.limits.a0_star,
                         last.a_inf_hat - report.limits.a_inf_hat,
                         last.a_inf_star - report.limits.a_inf_star};
    }
    return report;
}

std::vector<std::pair<double, double>> dimension_curve(int N, std::size_t points) {
    check_N(N);
    const double lo = 1.0 / (N + 1);
    const double hi = to_long_double(a0_star_exact(N));
    std::vector<std::pair<double, double>> curve;
    for (std::size_t i = 1; i <= points; ++i) {
        const double a = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points + 1);
        curve.emplace_back(a, h_entropy(N, phi(N, a)));
    }
    return curve;
}

Real resolve_parameter(std::string_view text, ParameterKind kind) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        return Real(Surd(parse_rational(text)));
    }
    const std::string name(text.substr(0, colon));
    const std::string n_text(text.substr(colon + 1));
    int N = 0;
    try {
        std::size_t used = 0;
        N = std::stoi(n_text, &used);
        if (used != n_text.size()) N = 0;
    } catch (const std::exception&) {
        N = 0;
    }
    if (N < 1) {
        throw DomainError("bad threshold reference '" + std::string(text) + "'");
    }
    // References name a threshold for a; as beta they denote its reciprocal.
    Real a;
    if (name == "a0tilde") {
        a = Real(a0_tilde(N));
    } else if (name == "a0star") {
        a = Real(Surd(a0_star_exact(N)));
    } else if (name == "amin") {
        a = Real(Surd(Rational(1, N + 1)));
    } else if (name == "kl") {
        if (kind == ParameterKind::Beta) return Real(komornik_loreti(N));
        a = Real(1.0 / komornik_loreti(N));
    } else if (name == "gr") {
        if (kind == ParameterKind::Beta) return Real(golden_ratio_exact(N));
        a = Real(Surd(1L) / golden_ratio_exact(N));
    } else {
        throw DomainError("unknown threshold reference '" + name + "'");
    }
    if (kind == ParameterKind::A) return a;
    return a.is_exact() ? Real(Surd(1L) / *a.exact) : Real(1.0 / a.value);
}

} // namespace selfaffine

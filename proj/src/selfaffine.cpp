#include "selfaffine/selfaffine.hpp"
#include "selfaffine/errors.hpp"

#include <algorithm>
#include <cmath>

namespace selfaffine {

namespace {

struct LongPattern {
    std::vector<long double> ys;
    long double a;
    long double b;
};

long double exact_or_value(const Real& r) {
    return r.is_exact() ? r.exact->to_long_double() : static_cast<long double>(r.value);
}

LongPattern long_pattern(const Params& p) {
    LongPattern lp;
    lp.a = exact_or_value(p.a);
    lp.b = exact_or_value(p.b);
    lp.ys.resize(static_cast<std::size_t>(2 * p.N + 2));
    for (int j = 0; j <= p.N; ++j) {
        lp.ys[static_cast<std::size_t>(2 * j)] = j * (lp.a - lp.b);
        lp.ys[static_cast<std::size_t>(2 * j + 1)] = (j + 1) * lp.a - j * lp.b;
    }
    return lp;
}

bool all_even(const DigitSeq& d) {
    auto even = [](int v) { return v % 2 == 0; };
    return std::all_of(d.preperiod().begin(), d.preperiod().end(), even) &&
           std::all_of(d.period().begin(), d.period().end(), even);
}

long double eval_F_long(const LongPattern& lp, int N, const DigitSeq& d, long double tol) {
    const long double a = lp.a;
    long double sum = 0.0L;
    if (all_even(d)) {
        // F(x) = (1/N) sum a^(n-1) (1-a) omega_n with omega = xi/2.
        long double scale = 1.0L;
        long double tail = 1.0L / (1.0L - a);
        for (std::size_t n = 1; tail * N > tol; ++n) {
            sum += scale * (d.at(n) / 2);
            scale *= a;
            tail *= a;
        }
        return sum * (1.0L - a) / N;
    }
    long double s = 1.0L;
    long double tail = 1.0L / (1.0L - a);
    for (std::size_t n = 1; tail > tol; ++n) {
        const int xi = d.at(n);
        sum += s * lp.ys[static_cast<std::size_t>(xi)];
        s *= (xi % 2 == 0) ? a : -lp.b;
        tail *= a;
    }
    return sum;
}

} // namespace

GeneratorPattern generator_pattern(const Params& p) {
    const LongPattern lp = long_pattern(p);
    GeneratorPattern g;
    const int B = p.base();
    for (int i = 0; i <= B; ++i) {
        g.xs.push_back(static_cast<double>(i) / B);
        g.ys.push_back(static_cast<double>(lp.ys[static_cast<std::size_t>(i)]));
    }
    return g;
}

double eval_fn(const Params& p, unsigned n, double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("x must lie in [0,1]");
    }
    const LongPattern lp = long_pattern(p);
    const int B = p.base();
    long double t = x;
    long double value = 0.0L;
    long double scale = 1.0L;
    for (unsigned level = 0; level < n; ++level) {
        const int i = std::min(static_cast<int>(std::floor(B * t)), 2 * p.N);
        const auto ui = static_cast<std::size_t>(i);
        value += scale * lp.ys[ui];
        scale *= lp.ys[ui + 1] - lp.ys[ui];
        t = std::clamp(B * t - i, 0.0L, 1.0L);
    }
    return static_cast<double>(value + scale * t);
}

double eval_F(const Params& p, const DigitSeq& d, double tol) {
    if (!(tol > 0.0)) {
        throw DomainError("tol must be positive");
    }
    if (d.N() != p.N) {
        throw DomainError("digit sequence base does not match N");
    }
    return static_cast<double>(eval_F_long(long_pattern(p), p.N, d, tol));
}

double eval_F(const Params& p, const Rational& x, double tol) {
    if (x == 0) return 0.0;
    if (x == 1) return 1.0;
    return eval_F(p, digits_of_rational(x, p.N), tol);
}

long double F_increment(const Params& p, const DigitSeq& x, const DigitSeq& y, double tol) {
    if (x == y) return 0.0L;
    const LongPattern lp = long_pattern(p);
    std::size_t k = 0;
    long double s = 1.0L;
    while (x.at(k + 1) == y.at(k + 1)) {
        const int xi = x.at(k + 1);
        s *= (xi % 2 == 0) ? lp.a : -lp.b;
        ++k;
    }
    const DigitSeq xs = x.shifted(k);
    const DigitSeq ys = y.shifted(k);
    return s * (eval_F_long(lp, p.N, ys, tol) - eval_F_long(lp, p.N, xs, tol));
}

namespace {

void check_slope_point(const DigitSeq& d, unsigned n) {
    if (d.is_grid_point() && d.preperiod().size() <= n) {
        throw GridPointError("x = " + d.to_string() + " is a grid point of level <= " + std::to_string(n) +
                             "; the slope of f_n is undefined there");
    }
}

} // namespace

double slope_fn(const Params& p, const DigitSeq& d, unsigned n) {
    check_slope_point(d, n);
    const std::size_t odd = odd_count_prefix(d, n);
    const long double a = exact_or_value(p.a);
    const long double b = exact_or_value(p.b);
    const long double value = std::pow(static_cast<long double>(p.base()), n) * std::pow(a, n - odd) *
                              std::pow(-b, static_cast<long double>(odd));
    return static_cast<double>(value);
}

Surd slope_fn_exact(const Params& p, const DigitSeq& d, unsigned n) {
    if (!p.a.is_exact()) {
        throw PrecisionError("exact slope requires an exact parameter a");
    }
    check_slope_point(d, n);
    const auto odd = static_cast<unsigned>(odd_count_prefix(d, n));
    return pow(Surd(long(p.base())), n) * pow(*p.a.exact, n - odd) * pow(-*p.b.exact, odd);
}

GraphSample sample_graph(const Params& p, unsigned depth, std::size_t cap) {
    const auto B = static_cast<std::size_t>(p.base());
    std::size_t cells = 1;
    for (unsigned k = 0; k < depth; ++k) {
        if (cells > (cap - 1) / B) {
            throw ResourceError("graph sample of depth " + std::to_string(depth) + " exceeds " +
                                std::to_string(cap) + " points");
        }
        cells *= B;
    }
    const LongPattern lp = long_pattern(p);
    // f_k(x_i + t/B) = y_i + (y_{i+1} - y_i) f_{k-1}(t), applied level by level.
    std::vector<long double> values{0.0L, 1.0L};
    for (unsigned k = 0; k < depth; ++k) {
        const std::size_t m = values.size() - 1;
        std::vector<long double> next(B * m + 1);
        for (std::size_t i = 0; i < B; ++i) {
            const long double y0 = lp.ys[i];
            const long double dy = lp.ys[i + 1] - y0;
            for (std::size_t j = 0; j <= m; ++j) {
                next[i * m + j] = y0 + dy * values[j];
            }
        }
        values = std::move(next);
    }
    GraphSample g;
    g.depth = depth;
    g.N = p.N;
    g.points.reserve(values.size());
    const long double denom = static_cast<long double>(cells);
    for (std::size_t j = 0; j < values.size(); ++j) {
        g.points.emplace_back(static_cast<double>(j / denom), static_cast<double>(values[j]));
    }
    return g;
}

double box_dimension(const Params& p) {
    const double a = p.a.value;
    return 1.0 + std::log(2.0 * (p.N + 1) * a - 1.0) / std::log(2.0 * p.N + 1.0);
}

double box_counting_estimate(const GraphSample& sample) {
    if (sample.depth == 0) {
        throw DomainError("box counting needs a sample of depth >= 1");
    }
    const auto B = static_cast<std::size_t>(2 * sample.N + 1);
    std::vector<double> xs;
    std::vector<double> ys;
    std::size_t columns = 1;
    for (unsigned k = 1; k <= sample.depth; ++k) {
        columns *= B;
        const std::size_t per_column = (sample.points.size() - 1) / columns;
        const double delta = 1.0 / static_cast<double>(columns);
        double boxes = 0.0;
        for (std::size_t c = 0; c < columns; ++c) {
            double lo = sample.points[c * per_column].second;
            double hi = lo;
            for (std::size_t j = c * per_column; j <= (c + 1) * per_column; ++j) {
                lo = std::min(lo, sample.points[j].second);
                hi = std::max(hi, sample.points[j].second);
            }
            boxes += std::max(1.0, std::ceil((hi - lo) / delta));
        }
        xs.push_back(k * std::log(static_cast<double>(B)));
        ys.push_back(std::log(boxes));
    }
    const double n = static_cast<double>(xs.size());
    if (xs.size() == 1) {
        return ys[0] / xs[0];
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace selfaffine

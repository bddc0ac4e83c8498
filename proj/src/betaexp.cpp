#include "selfaffine/betaexp.hpp"
#include "selfaffine/errors.hpp"

#include <bit>
#include <cfloat>
#include <cmath>
#include <map>

namespace selfaffine {

namespace {

constexpr long double kAmbiguity = 1e-12L;

void check_beta(int N, double beta) {
    if (N < 1) {
        throw DomainError("N must be a positive integer");
    }
    if (!(beta > 1.0) || beta > N + 1) {
        throw DomainError("beta must lie in (1, N+1]");
    }
}

template <typename T>
T closed_form(const OmegaSeq& w, const T& inv_beta) {
    // sum_{j<=k} w_j beta^-j + beta^-k * (sum_{j<=L} c_j beta^-j) / (1 - beta^-L)
    T head = T(0L);
    T scale = T(1L);
    for (int d : w.preperiod()) {
        scale = scale * inv_beta;
        head = head + scale * T(long(d));
    }
    T cycle = T(0L);
    T cycle_scale = T(1L);
    for (int d : w.period()) {
        cycle_scale = cycle_scale * inv_beta;
        cycle = cycle + cycle_scale * T(long(d));
    }
    return head + scale * cycle / (T(1L) - cycle_scale);
}

long double pi_long(const OmegaSeq& w, long double beta) {
    return closed_form<long double>(w, 1.0L / beta);
}

} // namespace

double pi_beta(const OmegaSeq& w, double beta) {
    if (!(beta > 1.0)) {
        throw DomainError("beta must exceed 1");
    }
    return static_cast<double>(pi_long(w, beta));
}

Surd pi_beta(const OmegaSeq& w, const Surd& beta) {
    if (beta <= Surd(1L)) {
        throw DomainError("beta must exceed 1");
    }
    return closed_form<Surd>(w, Surd(1L) / beta);
}

long double pi_beta_prefix(const std::vector<int>& digits, long double beta) {
    long double sum = 0.0L;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        sum = (sum + *it) / beta;
    }
    return sum;
}

QuasiGreedy quasi_greedy_one(int N, const Real& beta, std::size_t max_len) {
    check_beta(N, beta.value);
    QuasiGreedy out;
    std::vector<int> digits;
    if (beta.is_exact()) {
        const Surd& B = *beta.exact;
        std::map<Surd, std::size_t> seen;
        Surd r(1L);
        for (std::size_t i = 0;; ++i) {
            auto [it, inserted] = seen.emplace(r, i);
            if (!inserted) {
                const auto start = static_cast<std::ptrdiff_t>(it->second);
                out.sequence = OmegaSeq(N, {digits.begin(), digits.begin() + start},
                                        {digits.begin() + start, digits.end()});
                out.prefix = out.sequence->word().prefix(max_len);
                return out;
            }
            if (i == max_len) break;
            const Surd t = B * r;
            const long d = std::min<long>(N, (t.ceil() - 1).convert_to<long>());
            digits.push_back(static_cast<int>(d));
            r = t - Surd(d);
        }
        out.truncated = true;
        out.prefix = std::move(digits);
        return out;
    }
    const long double B = beta.value;
    long double r = 1.0L;
    long double err = 0.0L;
    for (std::size_t i = 0; i < max_len; ++i) {
        const long double t = B * r;
        const long double t_err = B * err + 4 * LDBL_EPSILON * std::fabs(t);
        const long double nearest = std::round(t);
        if (std::fabs(t - nearest) <= t_err && t <= N + t_err) {
            break;  // the digit depends on bits we do not have
        }
        const long double d = std::min<long double>(N, std::ceil(t) - 1);
        digits.push_back(static_cast<int>(d));
        r = t - d;
        err = t_err;
    }
    out.truncated = true;
    out.prefix = std::move(digits);
    return out;
}

bool is_univoque(const OmegaSeq& w, int N, const Real& beta) {
    check_beta(N, beta.value);
    if (w.N() != N) {
        throw DomainError("sequence alphabet does not match N");
    }
    const std::size_t shifts = w.preperiod().size() + w.period().size();
    if (beta.is_exact()) {
        const Surd& B = *beta.exact;
        const Surd top = Surd(long(N)) / (B - Surd(1L));
        const Surd one(1L);
        Surd v = pi_beta(w, B);
        for (std::size_t n = 0; n < shifts; ++n) {
            if (n > 0) v = B * v - Surd(long(w.at(n)));
            if (v >= one || top - v >= one) return false;
        }
        return true;
    }
    const long double top = N / (static_cast<long double>(beta.value) - 1.0L);
    bool ambiguous = false;
    for (std::size_t n = 0; n < shifts; ++n) {
        const long double v = pi_long(shift(w, n), beta.value);
        for (long double value : {v, top - v}) {
            if (value >= 1.0L + kAmbiguity) return false;
            if (value > 1.0L - kAmbiguity) ambiguous = true;
        }
    }
    if (ambiguous) {
        throw PrecisionError("a tail of " + w.to_string() + " is within 1e-12 of 1; supply beta exactly");
    }
    return true;
}

namespace {

template <typename T>
ExpansionCount count_paths(const T& x, int N, const T& beta, std::uint64_t cap, unsigned depth) {
    ExpansionCount result;
    if (cap == 0) {
        result.saturated = true;
        return result;
    }
    const T zero = T(0L);
    const T top = T(long(N)) / (beta - T(1L));
    if (x < zero || x > top) return result;
    std::vector<std::pair<T, unsigned>> stack{{x, 0u}};
    while (!stack.empty()) {
        auto [value, level] = std::move(stack.back());
        stack.pop_back();
        if (level == depth) {
            if (++result.count >= cap) {
                result.saturated = true;
                return result;
            }
            continue;
        }
        const T scaled = beta * value;
        for (int d = N; d >= 0; --d) {
            T next = scaled - T(long(d));
            if (next >= zero && next <= top) {
                stack.emplace_back(std::move(next), level + 1);
            }
        }
    }
    return result;
}

} // namespace

ExpansionCount count_expansions(const Surd& x, int N, const Surd& beta, std::uint64_t cap, unsigned depth) {
    check_beta(N, beta.to_double());
    return count_paths<Surd>(x, N, beta, cap, depth);
}

ExpansionCount count_expansions(long double x, int N, long double beta, std::uint64_t cap, unsigned depth) {
    check_beta(N, static_cast<double>(beta));
    return count_paths<long double>(x, N, beta, cap, depth);
}

std::vector<int> thue_morse_prefix(std::size_t n) {
    std::vector<int> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        out[j] = std::popcount(j) % 2;
    }
    return out;
}

std::vector<int> generalized_tm_prefix(int N, std::size_t n) {
    if (N < 1) {
        throw DomainError("N must be a positive integer");
    }
    const std::vector<int> tau = thue_morse_prefix(n + 1);
    std::vector<int> out(n);
    for (std::size_t i = 1; i <= n; ++i) {
        if (N % 2 == 1) {
            const int m = (N + 1) / 2;
            out[i - 1] = m - 1 + tau[i];
        } else {
            const int m = N / 2;
            out[i - 1] = m + tau[i] - tau[i - 1];
        }
    }
    return out;
}

Surd golden_ratio_exact(int N) {
    if (N < 1) {
        throw DomainError("N must be a positive integer");
    }
    if (N % 2 == 0) {
        return Surd(long(N / 2 + 1));
    }
    const long m = (N + 1) / 2;
    return Surd(Rational(m, 2)) + Surd(Rational(1, 2)) * Surd::sqrt_of(m * m + 4 * m);
}

double golden_ratio(int N) {
    return golden_ratio_exact(N).to_double();
}

} // namespace selfaffine

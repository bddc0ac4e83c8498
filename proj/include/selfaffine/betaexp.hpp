#pragma once

#include "selfaffine/numdigits.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace selfaffine {

/// Pi_beta(w) = sum w_j beta^-j in closed form.
double pi_beta(const OmegaSeq& w, double beta);
Surd pi_beta(const OmegaSeq& w, const Surd& beta);
/// Finite sum over the given digits.
long double pi_beta_prefix(const std::vector<int>& digits, long double beta);

/// Quasi-greedy expansion of 1.  When a period is found within max_len digits
/// `sequence` holds it exactly; otherwise `truncated` is set and `prefix`
/// holds the reliable leading digits (possibly fewer than max_len when beta
/// is inexact).
struct QuasiGreedy {
    std::optional<OmegaSeq> sequence;
    std::vector<int> prefix;
    bool truncated = false;
};

QuasiGreedy quasi_greedy_one(int N, const Real& beta, std::size_t max_len);

/// Pi_beta(sigma^n w) < 1 and Pi_beta(sigma^n complement(w)) < 1 for all n >= 0.
/// Exact when beta is exact; otherwise throws PrecisionError if the decision
/// hinges on a value within 1e-12 of 1.
bool is_univoque(const OmegaSeq& w, int N, const Real& beta);

/// Number of digit paths of length `depth` in the branching x -> beta x - d,
/// 0 <= beta x - d <= N/(beta-1), saturated at cap.
struct ExpansionCount {
    std::uint64_t count = 0;
    bool saturated = false;
};

ExpansionCount count_expansions(const Surd& x, int N, const Surd& beta, std::uint64_t cap, unsigned depth);
ExpansionCount count_expansions(long double x, int N, long double beta, std::uint64_t cap, unsigned depth);

/// tau_0 .. tau_{n-1}.
std::vector<int> thue_morse_prefix(std::size_t n);
/// tau^(N)_1 .. tau^(N)_n.
std::vector<int> generalized_tm_prefix(int N, std::size_t n);

/// Generalized golden ratio G(N).
Surd golden_ratio_exact(int N);
double golden_ratio(int N);

/// Bounds on dim_H A_beta (entropy of the univoque subshift over log beta).
struct EntropyBounds {
    unsigned depth = 0;
    double lower = 0.0;
    double upper = 0.0;
};

/// Throws ResourceError when the window automaton exceeds cap states.
EntropyBounds univoque_entropy_bounds(int N, const Real& beta, unsigned depth = 20,
                                      std::size_t cap = 50'000'000);

} // namespace selfaffine

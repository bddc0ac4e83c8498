// Entropy bounds for the univoque subshift U_beta.
//
// Upper: every sequence in U_beta has all shifts (and complement shifts)
// lexicographically <= alpha, the quasi-greedy expansion of 1, so U_beta lies
// in the window subshift Y_d where each length-d window w and its complement
// satisfy w <= alpha_1..d.  Its entropy is bounded both by the word count
// log(U_d)/d and by the log spectral radius of its window automaton.
//
// Lower: the subshift Z_d where every window is strictly below alpha_1..d is
// contained in U_beta, so its entropy is a lower bound.
#include "selfaffine/betaexp.hpp"
#include "selfaffine/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace selfaffine {

namespace {

class WindowAutomaton {
public:
    WindowAutomaton(int N, std::vector<int> pattern, bool strict, std::size_t cap)
        : N_(N), d_(static_cast<int>(pattern.size())), pattern_(std::move(pattern)), strict_(strict) {
        build_failure();
        build(cap);
    }

    std::size_t size() const { return edges_.size(); }
    const std::vector<std::vector<std::size_t>>& edges() const { return edges_; }

private:
    void build_failure() {
        fail_.assign(static_cast<std::size_t>(d_) + 1, 0);
        for (int k = 1; k < d_; ++k) {
            int j = fail_[static_cast<std::size_t>(k)];
            while (j > 0 && pattern_[static_cast<std::size_t>(k)] != pattern_[static_cast<std::size_t>(j)]) {
                j = fail_[static_cast<std::size_t>(j)];
            }
            if (pattern_[static_cast<std::size_t>(k)] == pattern_[static_cast<std::size_t>(j)]) ++j;
            fail_[static_cast<std::size_t>(k) + 1] = j;
        }
    }

    // K is the longest suffix equal to a pattern prefix of length < d; the
    // border chain of K lists every such suffix.
    std::optional<int> step(int K, int c) const {
        int next = 0;
        for (int k = K;; k = fail_[static_cast<std::size_t>(k)]) {
            const int p = pattern_[static_cast<std::size_t>(k)];
            if (c > p) return std::nullopt;
            if (c == p) {
                if (k + 1 == d_) {
                    if (strict_) return std::nullopt;
                } else {
                    next = std::max(next, k + 1);
                }
            }
            if (k == 0) break;
        }
        return next;
    }

    void build(std::size_t cap) {
        std::vector<std::size_t> id(static_cast<std::size_t>(d_) * static_cast<std::size_t>(d_),
                                    std::numeric_limits<std::size_t>::max());
        std::vector<std::pair<int, int>> states{{0, 0}};
        id[0] = 0;
        for (std::size_t s = 0; s < states.size(); ++s) {
            const auto [k1, k2] = states[s];
            std::vector<std::size_t> out;
            for (int c = 0; c <= N_; ++c) {
                const auto n1 = step(k1, c);
                if (!n1) continue;
                const auto n2 = step(k2, N_ - c);
                if (!n2) continue;
                const std::size_t key = static_cast<std::size_t>(*n1) * static_cast<std::size_t>(d_) +
                                        static_cast<std::size_t>(*n2);
                if (id[key] == std::numeric_limits<std::size_t>::max()) {
                    if (states.size() >= cap) {
                        throw ResourceError("window automaton exceeds " + std::to_string(cap) + " states");
                    }
                    id[key] = states.size();
                    states.emplace_back(*n1, *n2);
                }
                out.push_back(id[key]);
            }
            edges_.push_back(std::move(out));
        }
    }

    int N_;
    int d_;
    std::vector<int> pattern_;
    bool strict_;
    std::vector<int> fail_;
    std::vector<std::vector<std::size_t>> edges_;
};

std::vector<std::vector<std::size_t>> strongly_connected_components(const std::vector<std::vector<std::size_t>>& g) {
    const std::size_t n = g.size();
    const std::size_t unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> index(n, unset), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> components;
    std::size_t counter = 0;
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unset) continue;
        std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, next_edge] = call.back();
            if (next_edge < g[v].size()) {
                const std::size_t w = g[v][next_edge++];
                if (index[w] == unset) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<std::size_t> comp;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                components.push_back(std::move(comp));
            }
            const std::size_t finished = v;
            call.pop_back();
            if (!call.empty()) {
                low[call.back().first] = std::min(low[call.back().first], low[finished]);
            }
        }
    }
    return components;
}

struct RadiusBounds {
    double lower = 0.0;
    double upper = 0.0;
};

// Collatz-Wielandt brackets for the spectral radius of each irreducible block,
// by power iteration on A + I (primitive whenever A is irreducible).
RadiusBounds spectral_radius_bounds(const std::vector<std::vector<std::size_t>>& g) {
    RadiusBounds total;
    const std::size_t unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> local(g.size(), unset);
    for (const auto& comp : strongly_connected_components(g)) {
        for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = i;
        std::vector<std::vector<std::size_t>> adj(comp.size());
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (std::size_t w : g[comp[i]]) {
                if (local[w] != unset) adj[i].push_back(local[w]);
            }
        }
        for (std::size_t v : comp) local[v] = unset;

        RadiusBounds r;
        if (comp.size() == 1) {
            r.lower = r.upper = static_cast<double>(adj[0].size());
        } else if (std::all_of(adj.begin(), adj.end(), [](const auto& e) { return e.size() == 1; })) {
            r.lower = r.upper = 1.0;
        } else {
            std::vector<double> v(comp.size(), 1.0), w(comp.size());
            double lo = 0.0, hi = 0.0;
            for (int iter = 0; iter < 100000; ++iter) {
                for (std::size_t i = 0; i < comp.size(); ++i) {
                    double s = v[i];
                    for (std::size_t j : adj[i]) s += v[j];
                    w[i] = s;
                }
                lo = std::numeric_limits<double>::infinity();
                hi = 0.0;
                double top = 0.0;
                for (std::size_t i = 0; i < comp.size(); ++i) {
                    const double ratio = w[i] / v[i];
                    lo = std::min(lo, ratio);
                    hi = std::max(hi, ratio);
                    top = std::max(top, w[i]);
                }
                if (hi - lo <= 1e-13 * hi) break;
                for (std::size_t i = 0; i < comp.size(); ++i) v[i] = w[i] / top;
            }
            r.lower = lo - 1.0;
            r.upper = hi - 1.0;
        }
        total.lower = std::max(total.lower, r.lower);
        total.upper = std::max(total.upper, r.upper);
    }
    return total;
}

BigInt count_words(const std::vector<std::vector<std::size_t>>& g, unsigned length) {
    std::vector<BigInt> counts(g.size(), 0), next(g.size());
    counts[0] = 1;
    for (unsigned step = 0; step < length; ++step) {
        std::fill(next.begin(), next.end(), BigInt(0));
        for (std::size_t s = 0; s < g.size(); ++s) {
            if (counts[s] == 0) continue;
            for (std::size_t t : g[s]) next[t] += counts[s];
        }
        counts.swap(next);
    }
    BigInt total = 0;
    for (const auto& c : counts) total += c;
    return total;
}

double log_or_minus_inf(double x) {
    return x > 0.0 ? std::log(x) : -std::numeric_limits<double>::infinity();
}

} // namespace

EntropyBounds univoque_entropy_bounds(int N, const Real& beta, unsigned depth, std::size_t cap) {
    if (depth < 2) {
        throw DomainError("entropy depth must be at least 2");
    }
    if (!(beta.value > 1.0) || beta.value >= N + 1) {
        throw DomainError("beta must lie in (1, N+1)");
    }
    const QuasiGreedy alpha = quasi_greedy_one(N, beta, std::max<std::size_t>(64, 4 * std::size_t{depth}));
    const std::size_t known = std::min<std::size_t>(depth, alpha.prefix.size());
    std::vector<int> upper_pattern(alpha.prefix.begin(), alpha.prefix.begin() + static_cast<std::ptrdiff_t>(known));
    std::vector<int> lower_pattern = upper_pattern;
    upper_pattern.resize(depth, N);
    lower_pattern.resize(depth, 0);

    const WindowAutomaton loose(N, upper_pattern, false, cap);
    const WindowAutomaton strict(N, lower_pattern, true, cap);

    const double log_beta = std::log(beta.value);
    const BigInt words = count_words(loose.edges(), depth);
    const double word_bound = words == 0 ? -std::numeric_limits<double>::infinity()
                                         : std::log(words.convert_to<double>()) / depth;
    const double radius_bound = log_or_minus_inf(spectral_radius_bounds(loose.edges()).upper);
    const double lower_entropy = log_or_minus_inf(spectral_radius_bounds(strict.edges()).lower);

    EntropyBounds out;
    out.depth = depth;
    out.upper = std::clamp(std::min(word_bound, radius_bound) / log_beta, 0.0, 1.0);
    out.lower = std::clamp(lower_entropy / log_beta, 0.0, out.upper);
    return out;
}

} // namespace selfaffine

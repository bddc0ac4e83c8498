#include "selfaffine/numdigits.hpp"
#include "selfaffine/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace selfaffine {

namespace mp = boost::multiprecision;

Params make_params(int N, double a) {
    return make_params(N, Real(a));
}

Params make_params(int N, const Real& a) {
    if (N < 1) {
        throw DomainError("N must be a positive integer");
    }
    Params p;
    p.N = N;
    p.a = a;
    if (a.is_exact()) {
        const Surd& ax = *a.exact;
        if (ax * Surd(long(N + 1)) <= Surd(1L) || ax >= Surd(1L)) {
            throw DomainError("a must lie in (1/(N+1), 1)");
        }
        p.b = Real((ax * Surd(long(N + 1)) - Surd(1L)) / Surd(long(N)));
    } else {
        if (!(a.value * (N + 1) > 1.0) || !(a.value < 1.0)) {
            throw DomainError("a must lie in (1/(N+1), 1)");
        }
        p.b = Real(((N + 1) * a.value - 1.0) / N);
    }
    return p;
}

// ---------------------------------------------------------------------------

PeriodicWord::PeriodicWord(std::vector<int> preperiod, std::vector<int> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (period_.empty()) {
        throw DomainError("period must be nonempty");
    }
    const std::size_t L = period_.size();
    for (std::size_t p = 1; p < L; ++p) {
        if (L % p != 0) continue;
        bool periodic = true;
        for (std::size_t i = p; i < L && periodic; ++i) {
            periodic = period_[i] == period_[i - p];
        }
        if (periodic) {
            period_.resize(p);
            break;
        }
    }
    while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
        preperiod_.pop_back();
        std::rotate(period_.begin(), period_.end() - 1, period_.end());
    }
}

int PeriodicWord::at(std::size_t i) const {
    if (i == 0) {
        throw std::out_of_range("PeriodicWord::at is 1-based");
    }
    if (i <= preperiod_.size()) {
        return preperiod_[i - 1];
    }
    return period_[(i - 1 - preperiod_.size()) % period_.size()];
}

std::vector<int> PeriodicWord::prefix(std::size_t n) const {
    std::vector<int> out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        out.push_back(at(i));
    }
    return out;
}

PeriodicWord PeriodicWord::shifted(std::size_t n) const {
    if (n <= preperiod_.size()) {
        return PeriodicWord({preperiod_.begin() + static_cast<std::ptrdiff_t>(n), preperiod_.end()}, period_);
    }
    std::vector<int> rotated = period_;
    const std::size_t k = (n - preperiod_.size()) % period_.size();
    std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(k), rotated.end());
    return PeriodicWord({}, std::move(rotated));
}

// ---------------------------------------------------------------------------

namespace {

void check_digits(const std::vector<int>& digits, int max_digit) {
    for (int d : digits) {
        if (d < 0 || d > max_digit) {
            throw DomainError("digit " + std::to_string(d) + " outside {0,...," + std::to_string(max_digit) + "}");
        }
    }
}

PeriodicWord canonical_word(int N, std::vector<int> preperiod, std::vector<int> period) {
    if (N < 1) {
        throw DomainError("N must be a positive integer");
    }
    check_digits(preperiod, 2 * N);
    check_digits(period, 2 * N);
    PeriodicWord w(std::move(preperiod), std::move(period));
    if (w.period().size() == 1 && w.period()[0] == 2 * N) {
        // x = 0.p1..pk (2N)^inf = 0.p1..(pk+1) 0^inf; after reduction pk < 2N.
        if (w.preperiod().empty()) {
            throw DomainError("digit sequence (2N)^inf represents 1, not a point of [0,1)");
        }
        std::vector<int> pre = w.preperiod();
        ++pre.back();
        return PeriodicWord(std::move(pre), {0});
    }
    return w;
}

std::string join(const std::vector<int>& digits) {
    std::string s;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(digits[i]);
    }
    return s;
}

std::vector<int> tokenize(std::string_view part, bool single_char_digits) {
    std::vector<int> out;
    const bool has_space = std::any_of(part.begin(), part.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!has_space && single_char_digits) {
        for (char c : part) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw DomainError("unexpected character '" + std::string(1, c) + "' in digit sequence");
            }
            out.push_back(c - '0');
        }
        return out;
    }
    std::istringstream in{std::string(part)};
    std::string token;
    while (in >> token) {
        if (!std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw DomainError("malformed digit '" + token + "'");
        }
        out.push_back(std::stoi(token));
    }
    return out;
}

std::pair<std::vector<int>, std::vector<int>> parse_word(std::string_view text, bool single_char_digits) {
    const auto open = text.find('(');
    const auto close = text.rfind(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
        throw DomainError("digit sequence needs a parenthesized period: '" + std::string(text) + "'");
    }
    for (char c : text.substr(close + 1)) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            throw DomainError("trailing characters after period in '" + std::string(text) + "'");
        }
    }
    return {tokenize(text.substr(0, open), single_char_digits),
            tokenize(text.substr(open + 1, close - open - 1), single_char_digits)};
}

} // namespace

DigitSeq::DigitSeq(int N, std::vector<int> preperiod, std::vector<int> period)
    : N_(N), word_(canonical_word(N, std::move(preperiod), std::move(period))) {}

Rational DigitSeq::value() const {
    const BigInt B = base();
    Rational head = 0;
    for (int d : preperiod()) {
        head = head * B + d;
    }
    BigInt cycle = 0;
    for (int d : period()) {
        cycle = cycle * B + d;
    }
    const BigInt Bk = mp::pow(B, static_cast<unsigned>(preperiod().size()));
    const BigInt BL = mp::pow(B, static_cast<unsigned>(period().size()));
    // x = (head + cycle/(B^L - 1)) / B^k
    return (head + Rational(cycle, BL - 1)) / Rational(Bk);
}

bool DigitSeq::is_grid_point() const {
    return period().size() == 1 && period()[0] == 0;
}

DigitSeq DigitSeq::shifted(std::size_t n) const {
    PeriodicWord w = word_.shifted(n);
    return DigitSeq(N_, w.preperiod(), w.period());
}

DigitSeq DigitSeq::mirrored() const {
    auto flip = [this](std::vector<int> digits) {
        for (int& d : digits) d = 2 * N_ - d;
        return digits;
    };
    return DigitSeq(N_, flip(preperiod()), flip(period()));
}

std::string DigitSeq::to_string() const {
    std::string s = "0.";
    if (!preperiod().empty()) {
        s += join(preperiod()) + " ";
    }
    return s + "(" + join(period()) + ")";
}

DigitSeq DigitSeq::parse(std::string_view text, int N) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    if (text.substr(0, 2) == "0.") {
        text.remove_prefix(2);
    }
    auto [pre, per] = parse_word(text, 2 * N + 1 <= 10);
    return DigitSeq(N, std::move(pre), std::move(per));
}

// ---------------------------------------------------------------------------

namespace {

PeriodicWord omega_word(int N, std::vector<int> preperiod, std::vector<int> period) {
    if (N < 1) {
        throw DomainError("N must be a positive integer");
    }
    check_digits(preperiod, N);
    check_digits(period, N);
    return PeriodicWord(std::move(preperiod), std::move(period));
}

} // namespace

OmegaSeq::OmegaSeq(int N, std::vector<int> preperiod, std::vector<int> period)
    : N_(N), word_(omega_word(N, std::move(preperiod), std::move(period))) {}

std::string OmegaSeq::to_string() const {
    std::string s;
    if (!preperiod().empty()) {
        s += join(preperiod()) + " ";
    }
    return s + "(" + join(period()) + ")";
}

OmegaSeq OmegaSeq::parse(std::string_view text, int N) {
    auto [pre, per] = parse_word(text, N + 1 <= 10);
    return OmegaSeq(N, std::move(pre), std::move(per));
}

OmegaSeq shift(const OmegaSeq& w, std::size_t n) {
    PeriodicWord s = w.word().shifted(n);
    return OmegaSeq(w.N(), s.preperiod(), s.period());
}

OmegaSeq complement(const OmegaSeq& w) {
    auto flip = [&w](std::vector<int> digits) {
        for (int& d : digits) d = w.N() - d;
        return digits;
    };
    return OmegaSeq(w.N(), flip(w.preperiod()), flip(w.period()));
}

DigitSeq doubled_with_prefix(const std::vector<int>& prefix, const OmegaSeq& w) {
    std::vector<int> pre = prefix;
    for (int d : w.preperiod()) pre.push_back(2 * d);
    std::vector<int> per;
    for (int d : w.period()) per.push_back(2 * d);
    return DigitSeq(w.N(), std::move(pre), std::move(per));
}

// ---------------------------------------------------------------------------

DigitSeq digits_of_rational(const Rational& x, int N, std::size_t max_period) {
    if (N < 1) {
        throw DomainError("N must be a positive integer");
    }
    if (x <= 0 || x >= 1) {
        throw DomainError("x = " + to_string(x) + " is not in (0,1)");
    }
    const BigInt B = 2 * N + 1;
    const BigInt den = mp::denominator(x);
    BigInt rem = mp::numerator(x);

    // den = s * t with s | B^k (k minimal) and gcd(t, B) = 1.
    std::size_t k = 0;
    BigInt t = den;
    for (BigInt g = mp::gcd(t, B); g != 1; g = mp::gcd(t, B)) {
        t /= g;
        ++k;
    }
    // Period length is the multiplicative order of B modulo t.
    std::size_t L = 1;
    if (t != 1) {
        BigInt power = B % t;
        while (power != 1) {
            power = (power * B) % t;
            if (++L > max_period) {
                throw ResourceError("period of " + to_string(x) + " exceeds " + std::to_string(max_period) + " digits");
            }
        }
    }
    std::vector<int> digits;
    digits.reserve(k + L);
    for (std::size_t i = 0; i < k + L; ++i) {
        rem *= B;
        BigInt q = rem / den;
        rem -= q * den;
        digits.push_back(q.convert_to<int>());
    }
    std::vector<int> pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<int> per(digits.begin() + static_cast<std::ptrdiff_t>(k), digits.end());
    return DigitSeq(N, std::move(pre), std::move(per));
}

DigitSeq digits_of_rational(const BigInt& numerator, const BigInt& denominator, int N) {
    if (denominator == 0) {
        throw DomainError("zero denominator");
    }
    return digits_of_rational(Rational(numerator, denominator), N);
}

std::size_t odd_count_prefix(const DigitSeq& d, std::size_t n) {
    auto odd = [](int v) { return (v & 1) != 0; };
    const auto& pre = d.preperiod();
    const auto& per = d.period();
    if (n <= pre.size()) {
        return static_cast<std::size_t>(std::count_if(pre.begin(), pre.begin() + static_cast<std::ptrdiff_t>(n), odd));
    }
    std::size_t count = static_cast<std::size_t>(std::count_if(pre.begin(), pre.end(), odd));
    const std::size_t tail = n - pre.size();
    const std::size_t per_odd = static_cast<std::size_t>(std::count_if(per.begin(), per.end(), odd));
    count += (tail / per.size()) * per_odd;
    count += static_cast<std::size_t>(
        std::count_if(per.begin(), per.begin() + static_cast<std::ptrdiff_t>(tail % per.size()), odd));
    return count;
}

std::optional<std::size_t> odd_total(const DigitSeq& d) {
    auto odd = [](int v) { return (v & 1) != 0; };
    if (std::any_of(d.period().begin(), d.period().end(), odd)) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(std::count_if(d.preperiod().begin(), d.preperiod().end(), odd));
}

Rational odd_liminf_frequency(const DigitSeq& d) {
    const auto& per = d.period();
    const long odd = std::count_if(per.begin(), per.end(), [](int v) { return (v & 1) != 0; });
    return Rational(odd, static_cast<long>(per.size()));
}

} // namespace selfaffine

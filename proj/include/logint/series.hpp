#pragma once

#include "logint/numeric.hpp"
#include "logint/rational.hpp"

#include <deque>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace logint {

// Exact harmonic numbers H_0..H_N, grown on demand.
class HarmonicTable {
public:
    HarmonicTable() : h_{mpq_class(0)} {}
    Rational operator()(long n);
    std::size_t size() const { return h_.size(); }

private:
    std::vector<mpq_class> h_;
    std::shared_mutex mutex_;
};

Rational harmonic(long n);

// Geometric-tail truncation. After burn_in terms, r is the supremum s of the
// observed consecutive |term| ratios inflated to min(1.05 s, (1 + s) / 2);
// summation stops once |term| * r / (1 - r) < 10^-(working digits).
class TailSummer {
public:
    explicit TailSummer(const Precision& p, long burn_in = 10, long max_terms = 2000000);

    // Adds a term; true once the remaining tail is certified negligible.
    bool add(const BigReal& term);
    const BigReal& sum() const { return sum_; }
    long terms() const { return count_; }

private:
    Precision prec_;
    long burn_in_;
    long max_terms_;
    long count_ = 0;
    BigReal sum_;
    BigReal eps_;
    BigReal prev_;
    std::vector<double> ratios_;
    std::deque<std::size_t> window_max_;  // indices of decreasing ratios
    std::size_t window_start_ = 0;
};

// sum_{n >= start} term(n) under the geometric-tail rule.
BigReal sum_geometric(const std::function<BigReal(long)>& term, long start, const Precision& p,
                      long* terms_used = nullptr);

// Alternating series sum_{k >= 0} (-1)^k a_k. The generator is asked for a_k
// at the precision it must deliver.
using AlternatingTerm = std::function<BigReal(long k, const Precision& p)>;

// Cohen-Villegas-Zagier Chebyshev acceleration with depth ceil(1.31 * W).
BigReal cvz_alternating(const AlternatingTerm& a, const Precision& p);
// Partial sum followed by the Euler transform of the tail.
BigReal euler_alternating(const AlternatingTerm& a, const Precision& p);
// Runs both; throws AccelerationMismatch unless they agree to
// decimal_digits.
BigReal accelerate_alternating(const AlternatingTerm& a, const Precision& p);

enum class HarmonicFlavor {
    none,
    H_n,
    H_2n,
    H_2n1,
    H_2n_minus_H_n,
    H_2n1_minus_H_n,
    H_2n_minus_half_H_n,
    odd_reciprocal,     // sum_{i=1}^n 1/(2i+1)
    partial_power_sum,  // sum_{p=1}^n a^p / p
};

// (a*n + b)^power
struct LinearFactor {
    long a = 0;
    long b = 1;
    int power = 1;
};

// (-1)^(n+1) H_n sum_j c_j / (mod * n + o_j), n >= 1
struct EulerBbpSpec {
    struct Term {
        Rational coef;
        Rational offset;
    };
    long m = 0;  // informational
    Rational modulus;
    std::vector<Term> pattern;
};

// base^n C(2n,n)^binom prod(num)/prod(den) * flavor(n), n >= start
struct CentralBinomSpec {
    Rational base{1};
    int binom = 1;
    std::vector<LinearFactor> num;
    std::vector<LinearFactor> den;
    HarmonicFlavor flavor = HarmonicFlavor::none;
    Rational power_base{1};
    long start = 0;
};

// Defining series of one of the closed_forms binomial kinds.
struct BinomSeriesSpec {
    std::string kind;
    Rational x;
};

// sum_{n>=1} (-1)^(n+1) sum_{k=2}^n (-1)^k / (k (k-1) C(n+k, k))
struct AltDoubleSpec {};

struct SeriesSpec {
    std::string text;
    std::variant<EulerBbpSpec, CentralBinomSpec, BinomSeriesSpec, AltDoubleSpec> body;
};

// Examples:
//   "euler_bbp m=3 mod=6 pattern=+1,-3,+5"
//   "central_binom base=3/16 binom=1 num=2n+1 den=n+1 harmonic=H2n-Hn start=0"
//   "binom_series kind=GF_H2N_HN x=3/16"
//   "alt_double"
SeriesSpec parse_series_spec(std::string_view text);

BigReal euler_bbp_lhs(const EulerBbpSpec& spec, const Precision& p);
BigReal sum_direct(const CentralBinomSpec& spec, const Precision& p);
BigReal sum_series(const SeriesSpec& spec, const Precision& p);

// Exact term of a central-binomial family at index n.
Rational central_binom_term(const CentralBinomSpec& spec, long n);

}  // namespace logint

#include "logint/series.hpp"

#include "logint/errors.hpp"

#include <algorithm>
#include <cmath>

namespace logint {

Rational HarmonicTable::operator()(long n) {
    if (n < 0) throw DomainError("harmonic number of negative index");
    {
        std::shared_lock lock(mutex_);
        if (static_cast<std::size_t>(n) < h_.size()) return Rational(h_[n]);
    }
    std::unique_lock lock(mutex_);
    while (h_.size() <= static_cast<std::size_t>(n)) {
        mpq_class next = h_.back() + mpq_class(1, h_.size());
        next.canonicalize();
        h_.push_back(next);
    }
    return Rational(h_[n]);
}

Rational harmonic(long n) {
    static HarmonicTable table;
    return table(n);
}

TailSummer::TailSummer(const Precision& p, long burn_in, long max_terms)
    : prec_(p), burn_in_(burn_in), max_terms_(max_terms), sum_(p), eps_(pow10(-p.working_digits(), p)), prev_(p) {}

bool TailSummer::add(const BigReal& term) {
    sum_ += term;
    ++count_;
    BigReal mag = abs(term.at(prec_));
    bool have_prev = !prev_.is_zero();
    if (count_ > burn_in_ && have_prev && !mag.is_zero()) {
        double ratio = (mag / prev_).to_double();
        while (!window_max_.empty() && ratios_[window_max_.back()] <= ratio) window_max_.pop_back();
        window_max_.push_back(ratios_.size());
        ratios_.push_back(ratio);
    }
    prev_ = mag;
    if (count_ > max_terms_)
        throw ConvergenceError("series did not reach the tail bound within " + std::to_string(max_terms_) + " terms",
                               0);
    if (ratios_.size() < 2 || mag.is_zero()) return false;

    auto sup = [&] {
        while (window_max_.front() < window_start_) window_max_.pop_front();
        return ratios_[window_max_.front()];
    };
    double s = sup();
    if (s >= 1.0) {
        // early ratios can exceed one before the terms settle into geometric
        // decay; keep only the second half of the history
        window_start_ = std::max(window_start_, ratios_.size() / 2);
        s = sup();
        if (s >= 1.0) return false;
    }
    // ratios near one cannot take the full 5% inflation
    double r = std::min(s * 1.05, (1.0 + s) / 2.0);
    return mag * BigReal(Rational(mpq_class(r / (1.0 - r))), prec_) < eps_;
}

BigReal sum_geometric(const std::function<BigReal(long)>& term, long start, const Precision& p, long* terms_used) {
    TailSummer summer(p);
    for (long n = start;; ++n) {
        if (summer.add(term(n))) break;
    }
    if (terms_used) *terms_used = summer.terms();
    return summer.sum();
}

BigReal cvz_alternating(const AlternatingTerm& a, const Precision& p) {
    Precision w = p.with_extra_guard(10);
    long n = static_cast<long>(std::ceil(1.31 * static_cast<double>(p.working_digits()))) + 1;
    BigReal d = pow(BigReal(3, w) + sqrt(BigReal(8, w)), n);
    d = (d + BigReal(1, w) / d) / 2;
    BigReal b(-1, w);
    BigReal c = -d;
    BigReal s(w);
    for (long k = 0; k < n; ++k) {
        c = b - c;
        s += c * a(k, w).at(w);
        // b *= (k+n)(k-n) / ((k+1/2)(k+1))
        b = b * BigReal(Rational(2 * (k + n) * (k - n), (2 * k + 1) * (k + 1)), w);
    }
    return (s / d).at(p);
}

BigReal euler_alternating(const AlternatingTerm& a, const Precision& p) {
    long wd = p.working_digits();
    long n = static_cast<long>(std::ceil(1.2 * static_cast<double>(wd))) + 10;
    long j = n;
    // differences of order j lose about j*log10(2) digits to cancellation
    Precision w = p.with_extra_guard(static_cast<long>(std::ceil(0.31 * static_cast<double>(j))) + 10);
    BigReal partial(w);
    for (long k = 0; k < n; ++k) {
        BigReal t = a(k, w).at(w);
        if (k % 2 == 0) partial += t;
        else partial -= t;
    }
    std::vector<BigReal> diff;
    diff.reserve(j + 1);
    for (long i = 0; i <= j; ++i) diff.push_back(a(n + i, w).at(w));
    // sum_i (-1)^i Delta^i a_n / 2^(i+1)
    BigReal tail(w);
    BigReal scale(Rational(1, 2), w);
    for (long i = 0; i <= j; ++i) {
        BigReal t = diff[0] * scale;
        if (i % 2 == 0) tail += t;
        else tail -= t;
        for (long m = 0; m + 1 < static_cast<long>(diff.size()); ++m) diff[m] = diff[m + 1] - diff[m];
        diff.pop_back();
        scale /= 2;
    }
    if (n % 2 == 0) partial += tail;
    else partial -= tail;
    return partial.at(p);
}

BigReal accelerate_alternating(const AlternatingTerm& a, const Precision& p) {
    BigReal primary = cvz_alternating(a, p);
    BigReal check = euler_alternating(a, p);
    if (abs(primary - check) > pow10(-p.decimal_digits, p))
        throw AccelerationMismatch(primary.to_string(p.decimal_digits), check.to_string(p.decimal_digits));
    return primary;
}

BigReal euler_bbp_lhs(const EulerBbpSpec& spec, const Precision& p) {
    if (spec.pattern.empty()) throw DomainError("euler_bbp needs a non-empty pattern");
    // a_k for n = k + 1: H_n sum_j c_j / (mod n + o_j), exact
    auto term = [&](long k, const Precision& w) {
        long n = k + 1;
        Rational inner(0);
        for (const auto& t : spec.pattern) inner = inner + t.coef / (spec.modulus * Rational(n) + t.offset);
        return BigReal(harmonic(n) * inner, w);
    };
    return accelerate_alternating(term, p);
}

namespace {

mpz_class central_binomial(long n) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), 2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
    return r;
}

Rational linear_product(const std::vector<LinearFactor>& fs, long n) {
    Rational r(1);
    for (const auto& f : fs) r = r * pow(Rational(f.a * n + f.b), f.power);
    return r;
}

Rational flavor_value(const CentralBinomSpec& s, long n) {
    switch (s.flavor) {
    case HarmonicFlavor::none: return Rational(1);
    case HarmonicFlavor::H_n: return harmonic(n);
    case HarmonicFlavor::H_2n: return harmonic(2 * n);
    case HarmonicFlavor::H_2n1: return harmonic(2 * n + 1);
    case HarmonicFlavor::H_2n_minus_H_n: return harmonic(2 * n) - harmonic(n);
    case HarmonicFlavor::H_2n1_minus_H_n: return harmonic(2 * n + 1) - harmonic(n);
    case HarmonicFlavor::H_2n_minus_half_H_n: return harmonic(2 * n) - harmonic(n) / Rational(2);
    case HarmonicFlavor::odd_reciprocal:
        // H_{2n+1} - H_n / 2 - 1
        return harmonic(2 * n + 1) - harmonic(n) / Rational(2) - Rational(1);
    case HarmonicFlavor::partial_power_sum: {
        Rational acc(0);
        Rational power(1);
        for (long i = 1; i <= n; ++i) {
            power = power * s.power_base;
            acc = acc + power / Rational(i);
        }
        return acc;
    }
    }
    throw Error("unknown harmonic flavor");
}

}  // namespace

Rational central_binom_term(const CentralBinomSpec& spec, long n) {
    Rational r = pow(spec.base, n);
    if (spec.binom != 0) {
        Rational c(central_binomial(n));
        r = spec.binom > 0 ? r * c : r / c;
    }
    Rational den = linear_product(spec.den, n);
    if (den.sign() == 0) throw DomainError("central_binom denominator vanishes at n = " + std::to_string(n));
    return r * linear_product(spec.num, n) / den * flavor_value(spec, n);
}

BigReal sum_direct(const CentralBinomSpec& spec, const Precision& p) {
    if (spec.start < 0) throw DomainError("central_binom start must be nonnegative");
    Precision w = p.with_extra_guard(5);
    // partial power sums are accumulated incrementally rather than rebuilt
    if (spec.flavor == HarmonicFlavor::partial_power_sum) {
        CentralBinomSpec plain = spec;
        plain.flavor = HarmonicFlavor::none;
        BigReal sigma(w);
        BigReal power(1, w);
        BigReal a(spec.power_base, w);
        for (long i = 1; i < spec.start; ++i) {
            power *= a;
            sigma += power / i;
        }
        return sum_geometric(
                   [&](long n) {
                       if (n >= 1) {
                           power *= a;
                           sigma += power / n;
                       }
                       return BigReal(central_binom_term(plain, n), w) * sigma;
                   },
                   spec.start, w)
            .at(p);
    }
    return sum_geometric([&](long n) { return BigReal(central_binom_term(spec, n), w); }, spec.start, w).at(p);
}

}  // namespace logint

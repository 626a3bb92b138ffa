#include "logint/errors.hpp"
#include "logint/special.hpp"
#include "special_internal.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace logint {

namespace {

// psi(z) ~ log z - 1/(2z) - sum B_2k / (2k z^2k)
BigReal digamma_asymptotic(const BigReal& z, const Precision& w) {
    BigReal result = log(z) - BigReal(1, w) / (z * 2);
    BigReal eps = detail::epsilon(w);
    BigReal z2 = z * z;
    BigReal zpow = z2;
    for (long k = 1;; ++k) {
        BigReal term = BigReal(bernoulli(2 * k), w) / (zpow * (2 * k));
        result -= term;
        if (abs(term) < eps) break;
        if (k > 4 * w.bits()) throw ConvergenceError("digamma asymptotic series did not converge", 0);
        zpow *= z2;
    }
    return result;
}

// psi'(z) ~ 1/z + 1/(2z^2) + sum B_2k / z^(2k+1)
BigReal trigamma_asymptotic(const BigReal& z, const Precision& w) {
    BigReal z2 = z * z;
    BigReal result = BigReal(1, w) / z + BigReal(1, w) / (z2 * 2);
    BigReal eps = detail::epsilon(w);
    BigReal zpow = z2 * z;
    for (long k = 1;; ++k) {
        BigReal term = BigReal(bernoulli(2 * k), w) / zpow;
        result += term;
        if (abs(term) < eps) break;
        if (k > 4 * w.bits()) throw ConvergenceError("trigamma asymptotic series did not converge", 0);
        zpow *= z2;
    }
    return result;
}

// psi(p/q) for 0 < p < q by Gauss's digamma theorem.
BigReal digamma_gauss(long p, long q, const Precision& w) {
    BigReal pi_w = pi(w);
    BigReal angle = pi_w * p / q;
    BigReal result = -euler_gamma(w) - log(BigReal(2 * q, w)) - pi_w / 2 * cos(angle) / sin(angle);
    BigReal acc(w);
    for (long n = 1; n <= (q - 1) / 2; ++n) {
        BigReal c = cos(pi_w * (2 * n * p) / q);
        BigReal s = sin(pi_w * n / q);
        acc += c * log(s);
    }
    return result + acc * 2;
}

}  // namespace

BigReal digamma(const BigReal& x, const Precision& p) {
    if (x <= 0) throw DomainError("psi requires a positive argument");
    Precision w = p.with_extra_guard(10);
    long z0 = detail::asymptotic_threshold(w.bits());
    BigReal z = x.at(w);
    BigReal shift(w);
    while (z < z0) {
        shift += BigReal(1, w) / z;
        z += 1;
    }
    return (digamma_asymptotic(z, w) - shift).at(p);
}

BigReal digamma_rational(const Rational& r, const Precision& p) {
    if (r <= Rational(0)) throw DomainError("psi requires a positive argument");
    Precision w = p.with_extra_guard(10);
    mpz_class n = r.floor();
    Rational f = r - Rational(n, 1);
    if (!n.fits_slong_p() || n > 100000) return digamma(BigReal(r, w), p);
    long nn = n.get_si();
    if (f == Rational(0)) {
        // psi(n) = -gamma + H_{n-1}
        mpq_class h(0);
        for (long j = 1; j < nn; ++j) h += mpq_class(1, j);
        return (BigReal(Rational(h), w) - euler_gamma(w)).at(p);
    }
    mpz_class den = f.denominator();
    if (!den.fits_slong_p() || den > 5000) return digamma(BigReal(r, w), p);
    BigReal base = digamma_gauss(f.numerator().get_si(), den.get_si(), w);
    mpq_class shift(0);
    for (long j = 0; j < nn; ++j) shift += 1 / (f.get() + j);
    return (base + BigReal(Rational(shift), w)).at(p);
}

BigReal trigamma(const BigReal& x, const Precision& p) {
    if (x <= 0) throw DomainError("psi1 requires a positive argument");
    Precision w = p.with_extra_guard(10);
    long z0 = detail::asymptotic_threshold(w.bits());
    BigReal z = x.at(w);
    BigReal head(w);
    while (z < z0) {
        head += BigReal(1, w) / (z * z);
        z += 1;
    }
    return (head + trigamma_asymptotic(z, w)).at(p);
}

BigReal trigamma_rational(const Rational& r, const Precision& p) {
    if (r <= Rational(0)) throw DomainError("psi1 requires a positive argument");
    Precision w = p.with_extra_guard(10);
    if (r.is_integer() && r <= Rational(100000)) {
        // psi'(n) = pi^2/6 - sum_{j<n} 1/j^2
        long n = r.to_long();
        mpq_class s(0);
        for (long j = 1; j < n; ++j) s += mpq_class(1, j * j);
        BigReal pi_w = pi(w);
        return (pi_w * pi_w / 6 - BigReal(Rational(s), w)).at(p);
    }
    return trigamma(BigReal(r, w), p);
}

namespace {

struct CatalanCache {
    std::shared_mutex mutex;
    std::map<mpfr_prec_t, BigReal> values;
};

CatalanCache& catalan_cache() {
    static CatalanCache c;
    return c;
}

// G = (pi/8) log(2 + sqrt 3) + (3/8) sum_{n>=0} 1/((2n+1)^2 C(2n,n))
BigReal catalan_series(const Precision& w) {
    BigReal eps = detail::epsilon(w);
    BigReal sum(w);
    mpz_class binom = 1;
    for (long n = 0;; ++n) {
        mpz_class den = binom * (2 * n + 1) * (2 * n + 1);
        BigReal term = BigReal(1, w) / BigReal(den, w);
        sum += term;
        if (term < eps) break;
        binom = binom * 2 * (2 * n + 1) / (n + 1);
    }
    BigReal head = pi(w) / 8 * log(sqrt(BigReal(3, w)) + 2);
    return head + sum * 3 / 8;
}

}  // namespace

BigReal catalan(const Precision& p) {
    auto& cache = catalan_cache();
    {
        std::shared_lock lock(cache.mutex);
        auto it = cache.values.find(p.bits());
        if (it != cache.values.end()) return it->second.at(p);
    }
    BigReal g = catalan_series(p.with_extra_guard(5)).at(p);
    std::unique_lock lock(cache.mutex);
    cache.values.emplace(p.bits(), g);
    return g;
}

}  // namespace logint

#include "logint/errors.hpp"
#include "logint/special.hpp"
#include "special_internal.hpp"

#include <cmath>

namespace logint {

namespace detail {

long asymptotic_threshold(mpfr_prec_t bits) {
    return static_cast<long>(std::ceil(0.1104 * static_cast<double>(bits) * 1.2)) + 5;
}

BigReal epsilon(const Precision& p) { return pow10(-p.working_digits(), p); }

}  // namespace detail

namespace {

// log Gamma(z) for z beyond the asymptotic threshold.
BigReal stirling_lngamma(const BigReal& z, const Precision& w) {
    BigReal two_pi = pi(w) * 2;
    BigReal result = (z - BigReal(Rational(1, 2), w)) * log(z) - z + log(two_pi) / 2;
    BigReal eps = detail::epsilon(w);
    BigReal z2 = z * z;
    BigReal zpow = z;  // z^(2k-1)
    BigReal prev_mag(w);
    for (long k = 1;; ++k) {
        BigReal term = BigReal(bernoulli(2 * k), w) / (zpow * (2 * k * (2 * k - 1)));
        BigReal mag = abs(term);
        if (k > 1 && mag > prev_mag) throw ConvergenceError("Stirling series diverged before reaching precision", 0);
        result += term;
        if (mag < eps) break;
        prev_mag = mag;
        zpow *= z2;
    }
    return result;
}

}  // namespace

BigReal gamma(const BigReal& x, const Precision& p) {
    if (x <= 0) throw DomainError("gamma requires a positive argument");
    Precision w = p.with_extra_guard(10);
    long z0 = detail::asymptotic_threshold(w.bits());
    BigReal z = x.at(w);
    BigReal prod(1, w);
    while (z < z0) {
        prod *= z;
        z += 1;
    }
    BigReal g = exp(stirling_lngamma(z, w)) / prod;
    return g.at(p);
}

BigReal gamma(const Rational& x, const Precision& p) {
    if (x <= Rational(0)) throw DomainError("gamma requires a positive argument");
    if (x.is_integer() && x <= Rational(1000)) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(x.to_long() - 1));
        return BigReal(f, p);
    }
    Precision w = p.with_extra_guard(5);
    return gamma(BigReal(x, w), p);
}

}  // namespace logint

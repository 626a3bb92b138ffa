#include "logint/errors.hpp"
#include "logint/special.hpp"
#include "special_internal.hpp"

#include <cmath>

namespace logint {

// Cl2(t) = t - t log|t| + sum_{k>=1} |B_2k| t^(2k+1) / (2k (2k+1)!) for
// |t| < 2 pi. After reduction to (-pi, pi] the term ratio is at most 1/4, so
// the expansion is used on the whole reduced range.
BigReal clausen2(const BigReal& theta, const Precision& p) {
    // extra digits cover the cancellation in the reduction of large |theta|
    long magnitude = theta.is_zero() ? 0 : std::max<long>(0, mpfr_get_exp(theta.get()) * 3 / 10);
    Precision w = p.with_extra_guard(10 + magnitude);
    BigReal two_pi = pi(w) * 2;
    BigReal t = theta.at(w);
    BigReal turns = t / two_pi;
    mpfr_round(turns.raw(), turns.get());
    t -= turns * two_pi;
    if (t > pi(w)) t -= two_pi;
    if (t.is_zero()) return BigReal(p);

    int sign = t.sign();
    BigReal a = abs(t);
    BigReal result = a - a * log(a);
    BigReal eps = detail::epsilon(w);
    BigReal a2 = a * a;
    BigReal pw = a;  // a^(2k+1)/(2k+1)!
    for (long k = 1;; ++k) {
        pw *= a2;
        pw /= (2 * k) * (2 * k + 1);
        Rational b = bernoulli(2 * k);
        BigReal term = BigReal(b.sign() < 0 ? -b : b, w) * pw / (2 * k);
        result += term;
        if (term < eps) break;
    }
    if (sign < 0) result = -result;
    return result.at(p);
}

}  // namespace logint

#include "logint/errors.hpp"
#include "logint/special.hpp"
#include "special_internal.hpp"

namespace logint {

namespace {

// sum x^n / n^2 for |x| <= 1/2
BigReal dilog_series(const BigReal& x, const Precision& w) {
    BigReal eps = detail::epsilon(w);
    BigReal sum(w);
    BigReal pw = x;
    for (long n = 1;; ++n) {
        BigReal term = pw / (n * n);
        sum += term;
        if (abs(term) < eps) break;
        pw *= x;
    }
    return sum;
}

BigReal dilog_work(const BigReal& x, const Precision& w) {
    BigReal pi2_6 = pi(w) * pi(w) / 6;
    if (x == BigReal(1, w)) return pi2_6;
    if (x.is_zero()) return BigReal(w);
    BigReal half(Rational(1, 2), w);
    if (abs(x) <= half) return dilog_series(x, w);
    if (x > 0) {
        // reflection: Li2(x) = pi^2/6 - log x log(1-x) - Li2(1-x)
        BigReal y = 1 - x;
        return pi2_6 - log(x) * log(y) - dilog_series(y, w);
    }
    if (x >= -1) {
        // Landen: Li2(x) = -Li2(x/(x-1)) - log^2(1-x)/2, x/(x-1) in [1/3, 1/2]
        BigReal l = log(1 - x);
        return -dilog_series(x / (x - 1), w) - l * l / 2;
    }
    // inversion: Li2(x) = -pi^2/6 - log^2(-x)/2 - Li2(1/x)
    BigReal l = log(-x);
    return -pi2_6 - l * l / 2 - dilog_work(1 / x, w);
}

}  // namespace

BigReal dilog(const BigReal& x, const Precision& p) {
    if (x > 1) throw DomainError("li2 argument above 1 (real branch only)");
    Precision w = p.with_extra_guard(10);
    return dilog_work(x.at(w), w).at(p);
}

}  // namespace logint

#pragma once

#include "logint/numeric.hpp"
#include "logint/rational.hpp"

namespace logint {

// Exact Bernoulli number B_n (B_1 = -1/2, odd n > 1 give 0).
Rational bernoulli(long n);

// Gamma function for x > 0.
BigReal gamma(const BigReal& x, const Precision& p);
BigReal gamma(const Rational& x, const Precision& p);

// Digamma psi(x) for real x > 0.
BigReal digamma(const BigReal& x, const Precision& p);
// Gauss digamma theorem plus the recurrence psi(x+1) = psi(x) + 1/x.
BigReal digamma_rational(const Rational& r, const Precision& p);

// Trigamma psi'(x) for real x > 0: direct sum plus Euler-Maclaurin tail.
BigReal trigamma(const BigReal& x, const Precision& p);
BigReal trigamma_rational(const Rational& r, const Precision& p);

// Catalan's constant G.
BigReal catalan(const Precision& p);

// Clausen function Cl2(theta) = sum sin(n theta)/n^2, any real theta.
BigReal clausen2(const BigReal& theta, const Precision& p);

// Real dilogarithm Li2(x) for x <= 1.
BigReal dilog(const BigReal& x, const Precision& p);

}  // namespace logint

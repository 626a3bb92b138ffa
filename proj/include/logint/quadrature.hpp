#pragma once

#include "logint/expr.hpp"
#include "logint/numeric.hpp"

#include <functional>
#include <optional>

namespace logint {

enum class Domain { unit, halfline, finite };

// An integrand in x over (0,1), (0,inf) or [a,b] (b may be infinite).
struct IntegralSpec {
    Expr integrand;
    Domain domain = Domain::unit;
    std::optional<Expr> lower;  // finite only
    std::optional<Expr> upper;  // finite only; nullopt means +inf
};

// Integrand on (0,1) receiving both x and 1 - x, the latter computed without
// cancellation near x = 1.
using UnitIntegrand = std::function<BigReal(const BigReal& x, const BigReal& xc)>;

struct QuadratureStats {
    int levels = 0;
    long evaluations = 0;
    long achieved_digits = 0;
};

// Tanh-sinh on (0,1). Converged once two consecutive level differences are
// below 10^-(decimal_digits + 2); gives up after max_level.
BigReal tanh_sinh(const UnitIntegrand& f, const Precision& p, QuadratureStats* stats = nullptr, int max_level = 14);

BigReal integrate_unit(const Expr& integrand, const Precision& p, QuadratureStats* stats = nullptr);
BigReal integrate_halfline(const Expr& integrand, const Precision& p, QuadratureStats* stats = nullptr);
// b == nullopt integrates over [a, inf).
BigReal integrate_finite(const Expr& integrand, const BigReal& a, const std::optional<BigReal>& b, const Precision& p,
                         QuadratureStats* stats = nullptr);
BigReal integrate(const IntegralSpec& spec, const Precision& p, QuadratureStats* stats = nullptr);

// n-point Gauss-Legendre on [a,b]; nodes found by Newton iteration at the
// working precision of p. Used as a cross-check on smooth integrands.
BigReal gauss_legendre(const std::function<BigReal(const BigReal&)>& f, const BigReal& a, const BigReal& b, int n,
                       const Precision& p);

}  // namespace logint

#pragma once

#include "logint/numeric.hpp"

namespace logint::detail {

// Argument above which the Stirling-type asymptotic series reaches an
// error below 2^-bits before its terms start growing.
long asymptotic_threshold(mpfr_prec_t bits);

// 10^-(working digits) at precision p.
BigReal epsilon(const Precision& p);

}  // namespace logint::detail

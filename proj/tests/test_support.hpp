#pragma once

#include "logint/numeric.hpp"
#include "logint/rational.hpp"

#include <random>
#include <string>

namespace testing {

inline logint::BigReal dec(const std::string& s, const logint::Precision& p) { return logint::BigReal::parse(s, p); }

// Fixed seed: property tests draw the same arguments on every run.
inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240611);
    return gen;
}

// Uniform rational a/den in the open interval (lo, hi).
inline logint::Rational random_rational(double lo, double hi, long den = 997) {
    std::uniform_int_distribution<long> pick(static_cast<long>(lo * den) + 1, static_cast<long>(hi * den) - 1);
    return logint::Rational(pick(rng()), den);
}

inline long random_int(long lo, long hi) {
    std::uniform_int_distribution<long> pick(lo, hi);
    return pick(rng());
}

}  // namespace testing

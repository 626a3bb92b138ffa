#pragma once

#include "logint/rational.hpp"

#include <mpfr.h>

#include <string>
#include <string_view>

namespace logint {

// Requested output digits plus extra working digits.
struct Precision {
    long decimal_digits;
    long guard_digits;

    explicit Precision(long digits);
    Precision(long digits, long guard);

    static long default_guard(long digits);

    long working_digits() const { return decimal_digits + guard_digits; }
    mpfr_prec_t bits() const;
    Precision with_extra_guard(long extra) const { return Precision(decimal_digits, guard_digits + extra); }

    friend bool operator==(const Precision& a, const Precision& b) {
        return a.decimal_digits == b.decimal_digits && a.guard_digits == b.guard_digits;
    }
};

mpfr_prec_t digits_to_bits(long decimal_digits);

// Arbitrary-precision real held at the working precision of its Precision.
// Binary operations produce a result at the smaller of the operand precisions.
class BigReal {
public:
    explicit BigReal(const Precision& p);
    BigReal(long value, const Precision& p);
    BigReal(const Rational& value, const Precision& p);
    BigReal(const mpz_class& value, const Precision& p);
    static BigReal parse(const std::string& decimal, const Precision& p);

    BigReal(const BigReal& other);
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    ~BigReal();

    const Precision& precision() const { return prec_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr raw() { return v_; }

    // Copy rounded (or padded) to another precision.
    BigReal at(const Precision& p) const;

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Exactly `significant` significant digits, round-to-nearest.
    std::string to_string(long significant) const;
    std::string to_string() const { return to_string(prec_.decimal_digits); }

    BigReal operator-() const;
    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);
    BigReal& operator/=(const BigReal& o);
    BigReal& operator+=(long o);
    BigReal& operator-=(long o);
    BigReal& operator*=(long o);
    BigReal& operator/=(long o);

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    friend BigReal operator+(BigReal a, long b) { return a += b; }
    friend BigReal operator-(BigReal a, long b) { return a -= b; }
    friend BigReal operator*(BigReal a, long b) { return a *= b; }
    friend BigReal operator/(BigReal a, long b) { return a /= b; }
    friend BigReal operator+(long a, BigReal b) { return b += a; }
    friend BigReal operator-(long a, const BigReal& b);
    friend BigReal operator*(long a, BigReal b) { return b *= a; }
    friend BigReal operator/(long a, const BigReal& b);

    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_); }
    friend bool operator<(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

private:
    mpfr_t v_;
    Precision prec_;
};

const Precision& min_precision(const BigReal& a, const BigReal& b);

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal log(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal asin(const BigReal& x);
BigReal pow(const BigReal& x, long n);
// Real branch only: a negative base needs an integer exponent.
BigReal pow(const BigReal& x, const Rational& e);
BigReal pow10(long e, const Precision& p);  // 10^e

enum class Constant { pi, euler_gamma, log2, log3 };

// Computed once per binary precision and cached; concurrent readers share the
// cache, insertions take an exclusive lock.
BigReal fundamental_constant(Constant c, const Precision& p);
BigReal fundamental_constant(std::string_view name, const Precision& p);
inline BigReal pi(const Precision& p) { return fundamental_constant(Constant::pi, p); }
inline BigReal euler_gamma(const Precision& p) { return fundamental_constant(Constant::euler_gamma, p); }

// |a - b| <= 10^-d; both operands must carry at least d + 5 working digits.
bool approx_equal(const BigReal& a, const BigReal& b, long d);

// floor(-log10 |a - b|), capped at the smaller working precision.
long digits_agreed(const BigReal& a, const BigReal& b);

}  // namespace logint

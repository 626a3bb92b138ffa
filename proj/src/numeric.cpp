#include "logint/numeric.hpp"

#include "logint/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace logint {

Precision::Precision(long digits) : Precision(digits, default_guard(digits)) {}

Precision::Precision(long digits, long guard) : decimal_digits(digits), guard_digits(guard) {
    if (digits < 1) throw PrecisionError("decimal_digits must be at least 1");
    if (guard < 10) throw PrecisionError("guard_digits must be at least 10");
}

long Precision::default_guard(long digits) {
    return std::max<long>(15, static_cast<long>(std::ceil(0.25 * static_cast<double>(digits))));
}

mpfr_prec_t digits_to_bits(long decimal_digits) {
    return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(decimal_digits) * 3.3219280948873623)) + 4;
}

mpfr_prec_t Precision::bits() const { return digits_to_bits(working_digits()); }

BigReal::BigReal(const Precision& p) : prec_(p) {
    mpfr_init2(v_, p.bits());
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, const Precision& p) : prec_(p) {
    mpfr_init2(v_, p.bits());
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const Rational& value, const Precision& p) : prec_(p) {
    mpfr_init2(v_, p.bits());
    mpfr_set_q(v_, value.get().get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const mpz_class& value, const Precision& p) : prec_(p) {
    mpfr_init2(v_, p.bits());
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal BigReal::parse(const std::string& decimal, const Precision& p) {
    BigReal r(p);
    if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0) throw Error("malformed decimal '" + decimal + "'");
    return r;
}

BigReal::BigReal(const BigReal& other) : prec_(other.prec_) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept : prec_(other.prec_) {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
        prec_ = other.prec_;
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    mpfr_swap(v_, other.v_);
    std::swap(prec_, other.prec_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::at(const Precision& p) const {
    BigReal r(p);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string BigReal::to_string(long significant) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
    if (is_zero()) return "0";
    if (significant < 1) significant = 1;
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(significant), v_, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);
    std::string sign_str;
    if (!digits.empty() && digits[0] == '-') {
        sign_str = "-";
        digits.erase(0, 1);
    }
    // value = 0.d1d2... * 10^e
    long point = static_cast<long>(e);
    std::string out;
    if (point > 0 && point <= significant) {
        out = digits.substr(0, static_cast<std::size_t>(point));
        if (point < significant) out += "." + digits.substr(static_cast<std::size_t>(point));
    } else if (point <= 0 && point > -5) {
        out = "0." + std::string(static_cast<std::size_t>(-point), '0') + digits;
    } else {
        out = digits.substr(0, 1);
        if (significant > 1) out += "." + digits.substr(1);
        long x = point - 1;
        out += (x < 0 ? "e-" : "e+") + std::to_string(x < 0 ? -x : x);
    }
    return sign_str + out;
}

const Precision& min_precision(const BigReal& a, const BigReal& b) {
    return b.precision().working_digits() < a.precision().working_digits() ? b.precision() : a.precision();
}

namespace {

template <typename F>
BigReal binary(const BigReal& a, const BigReal& b, F f) {
    BigReal r(min_precision(a, b));
    f(r.raw(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

template <typename F>
BigReal unary(const BigReal& a, F f) {
    BigReal r(a.precision());
    f(r.raw(), a.get(), MPFR_RNDN);
    return r;
}

}  // namespace

BigReal BigReal::operator-() const { return unary(*this, mpfr_neg); }

BigReal& BigReal::operator+=(const BigReal& o) { return *this = *this + o; }
BigReal& BigReal::operator-=(const BigReal& o) { return *this = *this - o; }
BigReal& BigReal::operator*=(const BigReal& o) { return *this = *this * o; }
BigReal& BigReal::operator/=(const BigReal& o) { return *this = *this / o; }

BigReal& BigReal::operator+=(long o) {
    mpfr_add_si(v_, v_, o, MPFR_RNDN);
    return *this;
}
BigReal& BigReal::operator-=(long o) {
    mpfr_sub_si(v_, v_, o, MPFR_RNDN);
    return *this;
}
BigReal& BigReal::operator*=(long o) {
    mpfr_mul_si(v_, v_, o, MPFR_RNDN);
    return *this;
}
BigReal& BigReal::operator/=(long o) {
    if (o == 0) throw DomainError("division by zero");
    mpfr_div_si(v_, v_, o, MPFR_RNDN);
    return *this;
}

BigReal operator+(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_add); }
BigReal operator-(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_sub); }
BigReal operator*(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_mul); }
BigReal operator/(const BigReal& a, const BigReal& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return binary(a, b, mpfr_div);
}

BigReal operator-(long a, const BigReal& b) {
    BigReal r(b.precision());
    mpfr_si_sub(r.raw(), a, b.get(), MPFR_RNDN);
    return r;
}

BigReal operator/(long a, const BigReal& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    BigReal r(b.precision());
    mpfr_si_div(r.raw(), a, b.get(), MPFR_RNDN);
    return r;
}

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }

BigReal sqrt(const BigReal& x) {
    if (x.sign() < 0) throw DomainError("sqrt of a negative number");
    return unary(x, mpfr_sqrt);
}

BigReal log(const BigReal& x) {
    if (x.sign() <= 0) throw DomainError("log of a nonpositive number");
    return unary(x, mpfr_log);
}

BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }
BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
BigReal cos(const BigReal& x) { return unary(x, mpfr_cos); }

BigReal asin(const BigReal& x) {
    if (mpfr_cmpabs_ui(x.get(), 1) > 0) throw DomainError("asin argument outside [-1, 1]");
    return unary(x, mpfr_asin);
}

BigReal pow(const BigReal& x, long n) {
    if (n < 0 && x.is_zero()) throw DomainError("zero raised to a negative power");
    BigReal r(x.precision());
    mpfr_pow_si(r.raw(), x.get(), n, MPFR_RNDN);
    return r;
}

BigReal pow(const BigReal& x, const Rational& e) {
    if (e.is_integer()) return pow(x, e.to_long());
    if (x.sign() < 0) throw DomainError("negative base with a fractional exponent");
    if (x.is_zero()) {
        if (e.sign() < 0) throw DomainError("zero raised to a negative power");
        return BigReal(x.precision());
    }
    mpz_class den = e.denominator();
    mpz_class num = e.numerator();
    if (!den.fits_ulong_p() || !num.fits_slong_p()) {
        BigReal ex(e, x.precision());
        BigReal r(x.precision());
        mpfr_pow(r.raw(), x.get(), ex.get(), MPFR_RNDN);
        return r;
    }
    // x^(p/q) = (x^(1/q))^p at a few extra bits.
    Precision work = x.precision().with_extra_guard(5);
    BigReal root(work);
    mpfr_rootn_ui(root.raw(), x.at(work).get(), den.get_ui(), MPFR_RNDN);
    BigReal r(work);
    mpfr_pow_si(r.raw(), root.get(), num.get_si(), MPFR_RNDN);
    return r.at(x.precision());
}

BigReal pow10(long e, const Precision& p) {
    BigReal r(p);
    mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) mpfr_ui_div(r.raw(), 1, r.get(), MPFR_RNDN);
    return r;
}

namespace {

struct ConstantCache {
    std::shared_mutex mutex;
    std::map<std::pair<int, mpfr_prec_t>, BigReal> values;
};

ConstantCache& constant_cache() {
    static ConstantCache cache;
    return cache;
}

BigReal compute_constant(Constant c, const Precision& p) {
    BigReal r(p);
    switch (c) {
    case Constant::pi:
        mpfr_const_pi(r.raw(), MPFR_RNDN);
        break;
    case Constant::euler_gamma:
        mpfr_const_euler(r.raw(), MPFR_RNDN);
        break;
    case Constant::log2:
        mpfr_const_log2(r.raw(), MPFR_RNDN);
        break;
    case Constant::log3: {
        mpfr_set_ui(r.raw(), 3, MPFR_RNDN);
        mpfr_log(r.raw(), r.get(), MPFR_RNDN);
        break;
    }
    }
    return r;
}

}  // namespace

BigReal fundamental_constant(Constant c, const Precision& p) {
    auto& cache = constant_cache();
    auto key = std::make_pair(static_cast<int>(c), p.bits());
    {
        std::shared_lock lock(cache.mutex);
        auto it = cache.values.find(key);
        if (it != cache.values.end()) return it->second.at(p);
    }
    BigReal value = compute_constant(c, p);
    std::unique_lock lock(cache.mutex);
    cache.values.emplace(key, value);
    return value;
}

BigReal fundamental_constant(std::string_view name, const Precision& p) {
    if (name == "pi") return fundamental_constant(Constant::pi, p);
    if (name == "euler_gamma") return fundamental_constant(Constant::euler_gamma, p);
    if (name == "log2") return fundamental_constant(Constant::log2, p);
    if (name == "log3") return fundamental_constant(Constant::log3, p);
    throw Error("unsupported constant '" + std::string(name) + "'");
}

bool approx_equal(const BigReal& a, const BigReal& b, long d) {
    if (a.precision().working_digits() < d + 5 || b.precision().working_digits() < d + 5)
        throw PrecisionError("operands carry fewer than d + 5 working digits");
    Precision p = min_precision(a, b);
    BigReal diff = abs(a.at(p) - b.at(p));
    return diff <= pow10(-d, p);
}

long digits_agreed(const BigReal& a, const BigReal& b) {
    const Precision& p = min_precision(a, b);
    long cap = p.working_digits();
    BigReal diff = abs(a - b);
    if (diff.is_zero()) return cap;
    BigReal l(p);
    mpfr_log10(l.raw(), diff.get(), MPFR_RNDN);
    double v = -l.to_double();
    long d = static_cast<long>(std::floor(v));
    return std::clamp<long>(d, 0, cap);
}

}  // namespace logint

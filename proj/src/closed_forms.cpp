#include "logint/closed_forms.hpp"

#include "logint/errors.hpp"
#include "logint/series.hpp"
#include "logint/special.hpp"

namespace logint {

namespace {

void check_m(long m) {
    if (m < 1 || m > max_family_m)
        throw DomainError("m must lie in [1, " + std::to_string(max_family_m) + "], got " + std::to_string(m));
}

void check_q_above(const Rational& q, const Rational& bound) {
    if (q <= bound) throw DomainError("q must exceed " + bound.to_string() + ", got " + q.to_string());
}

BigReal log2_at(const Precision& w) { return fundamental_constant(Constant::log2, w); }
BigReal log3_at(const Precision& w) { return fundamental_constant(Constant::log3, w); }

// psi'(a) - psi'(b) for rational a, b
BigReal trigamma_diff(const Rational& a, const Rational& b, const Precision& w) {
    return trigamma_rational(a, w) - trigamma_rational(b, w);
}

// sum_{p>=1} (2a)^p / p * Gamma(p+s) Gamma(p+1-s) / (2p)!, a = phi + 1
BigReal theorem1_inner(const BigReal& a, const Rational& s, const Precision& w) {
    BigReal s_r(s, w);
    BigReal term = a * s_r * (1 - s_r) * pi(w) / sin(pi(w) * s_r);
    TailSummer summer(w);
    for (long p = 1;; ++p) {
        if (summer.add(term)) break;
        // ratio 2a p/(p+1) (p+s)(p+1-s) / ((2p+1)(2p+2))
        Rational r = Rational(p, p + 1) * (Rational(p) + s) * (Rational(p + 1) - s) /
                     Rational((2 * p + 1) * (2 * p + 2));
        term = term * a * 2 * BigReal(r, w);
    }
    return summer.sum();
}

BigReal theorem1_double_sum(long m, const Rational& q, const Precision& w) {
    Rational s = Rational(1) / q;
    BigReal total(w);
    for (long k = 0; k < phi_count(m); ++k) total += theorem1_inner(phi(m, k, w) + 1, s, w);
    return total;
}

// base terms shared by the 2.5 and 2.11 families
BigReal sqrt3_log_base(long m, const Precision& w) {
    BigReal r3 = sqrt(BigReal(3, w));
    BigReal pi_w = pi(w);
    if (m % 2 == 0) return -pi_w * m * r3 / 9 * log2_at(w);
    return pi_w * r3 / 3 * log3_at(w) - pi_w * (m - 1) * r3 / 9 * log2_at(w);
}

// sum_k [2 log sin(r/3) - log(2 cos(2r/3) + 1) - log(phi + 1)],
// r = asin sqrt((phi+1)/2)
BigReal sum_25(long m, const Precision& w) {
    BigReal total(w);
    for (long k = 0; k < phi_count(m); ++k) {
        BigReal f = phi(m, k, w);
        BigReal r = asin(sqrt((f + 1) / 2));
        total += 2 * log(sin(r / 3)) - log(2 * cos(2 * r / 3) + 1) - log(f + 1);
    }
    return total;
}

// sum_k log(1 + sqrt((1 - phi)/2))
BigReal sum_half_angle(long m, const Precision& w) {
    BigReal total(w);
    for (long k = 0; k < phi_count(m); ++k) total += log(1 + sqrt((1 - phi(m, k, w)) / 2));
    return total;
}

}  // namespace

long phi_count(long m) {
    if (m < 1) throw DomainError("m must be positive");
    return m % 2 == 0 ? m / 2 : (m - 1) / 2;
}

BigReal phi(long m, long k, const Precision& p) {
    check_m(m);
    long limit = m % 2 == 0 ? m / 2 - 1 : (m - 3) / 2;
    if (k < 0 || k > limit)
        throw DomainError("phi index k=" + std::to_string(k) + " out of range for m=" + std::to_string(m));
    Precision w = p.with_extra_guard(5);
    return cos(pi(w) * BigReal(Rational(2 * k + 1, m), w)).at(p);
}

BigReal lemma1_rhs(long m, const BigReal& x, const Precision& p) {
    check_m(m);
    Precision w = p.with_extra_guard(5);
    BigReal xw = x.at(w);
    if (xw <= 0 || xw >= 1) throw DomainError("lemma1_rhs requires 0 < x < 1");
    BigReal c = 2 * xw * (1 - xw);
    BigReal total = -m * log(xw);
    for (long k = 0; k < phi_count(m); ++k) total += log(1 - c * (phi(m, k, w) + 1));
    return total.at(p);
}

BigReal theorem1_rhs(long m, const Rational& q, const Precision& p) {
    check_m(m);
    check_q_above(q, Rational(1));
    Precision w = p.with_extra_guard(5);
    Rational two_q = Rational(2) * q;
    BigReal trig = trigamma_diff((two_q - Rational(1)) / two_q, (q - Rational(1)) / two_q, w);
    BigReal qr(q, w);
    BigReal sin_term = sin(pi(w) / qr);
    BigReal psi_diff = digamma_rational(Rational(1) - Rational(1) / q, w) + euler_gamma(w);
    BigReal value = BigReal(m, w) / (4 * qr) * trig - theorem1_double_sum(m, q, w) / qr -
                    pi(w) * m / (qr * sin_term) * psi_diff;
    return value.at(p);
}

BigReal aux_a_rhs(long m, const Rational& q, const Precision& p) {
    check_m(m);
    check_q_above(q, Rational(1));
    Precision w = p.with_extra_guard(5);
    BigReal qr(q, w);
    BigReal psi_diff = digamma_rational(Rational(1) / q, w) + euler_gamma(w);
    BigReal value = -theorem1_double_sum(m, q, w) / qr - pi(w) * m / (qr * sin(pi(w) / qr)) * psi_diff;
    return value.at(p);
}

BigReal aux_b_rhs(const Rational& q, const Precision& p) {
    check_q_above(q, Rational(1));
    Precision w = p.with_extra_guard(5);
    BigReal qr(q, w);
    BigReal psi_diff = digamma_rational(Rational(1) - Rational(1) / q, w) - digamma_rational(Rational(1) / q, w);
    return (pi(w) / (qr * qr * sin(pi(w) / qr)) * psi_diff).at(p);
}

BigReal aux_c_rhs(const Rational& q, const Precision& p) {
    check_q_above(q, Rational(1));
    Precision w = p.with_extra_guard(5);
    Rational two_q = Rational(2) * q;
    BigReal qr(q, w);
    BigReal trig = trigamma_diff((two_q - Rational(1)) / two_q, (q - Rational(1)) / two_q, w);
    return (trig / (4 * qr * qr)).at(p);
}

BigReal theorem24_rhs(long m, const Precision& p) {
    check_m(m);
    Precision w = p.with_extra_guard(5);
    long lead = m % 2 == 0 ? m : m + 1;
    BigReal value = pi(w) * lead / 4 * log2_at(w) - m * catalan(w) + pi(w) / 2 * sum_half_angle(m, w);
    return value.at(p);
}

BigReal theorem25_rhs(long m, const Precision& p) {
    check_m(m);
    Precision w = p.with_extra_guard(5);
    BigReal pi_w = pi(w);
    BigReal value = BigReal(m, w) / 12 * trigamma_diff(Rational(5, 6), Rational(1, 3), w) - pi_w * pi_w * m / 9 +
                    sqrt3_log_base(m, w) - 2 * pi_w * sqrt(BigReal(3, w)) / 9 * sum_25(m, w);
    return value.at(p);
}

BigReal theorem26_rhs(long m, const Precision& p) {
    check_m(m);
    Precision w = p.with_extra_guard(5);
    BigReal pi_w = pi(w);
    BigReal r2 = sqrt(BigReal(2, w));
    long lead = m % 2 == 0 ? m : m + 2;
    BigReal inner(w);
    for (long k = 0; k < phi_count(m); ++k) {
        BigReal v = sqrt((1 - phi(m, k, w)) / 2);
        inner += log(1 + v) + 2 * log(r2 + sqrt(1 + v));
    }
    BigReal value = BigReal(m, w) / 16 * trigamma_diff(Rational(7, 8), Rational(3, 8), w) -
                    pi_w * pi_w * m * r2 / 8 + pi_w * lead * r2 / 4 * log2_at(w) + pi_w * r2 / 4 * inner;
    return value.at(p);
}

BigReal theorem27_rhs(const Rational& q, const Precision& p) {
    check_q_above(q, Rational(1, 2));
    Precision w = p.with_extra_guard(5);
    Rational s = Rational(1) / q;
    // g_n = 2^n Gamma(n+2-s) Gamma(n+s) / (2n+1)!, d_n = psi(n+2-s) - psi(2n+2)
    BigReal g = gamma(Rational(2) - s, w) * gamma(s, w);
    BigReal psi_a = digamma_rational(Rational(2) - s, w);
    BigReal psi_b = 1 - euler_gamma(w);
    TailSummer summer(w);
    for (long n = 0;; ++n) {
        if (summer.add(g * (psi_a - psi_b))) break;
        Rational a = Rational(n + 2) - s;
        g = g * BigReal(Rational(2) * a * (Rational(n) + s) / Rational((2 * n + 2) * (2 * n + 3)), w);
        psi_a += BigReal(Rational(1) / a, w);
        psi_b += BigReal(Rational(1, 2 * n + 2) + Rational(1, 2 * n + 3), w);
    }
    Rational four_q = Rational(4) * q;
    BigReal qr(q, w);
    BigReal trig = trigamma_diff((four_q - Rational(1)) / four_q, (Rational(2) * q - Rational(1)) / four_q, w);
    return (trig / (16 * qr) - summer.sum() / qr).at(p);
}

BigReal theorem28_rhs(const Rational& q, const Precision& p) {
    check_q_above(q, Rational(1, 2));
    Precision w = p.with_extra_guard(5);
    Rational s = Rational(1) / q;
    // g_n = 3^n Gamma(n+3-s) Gamma(n+s) / (2n+2)!, d_n = psi(2n+3) - psi(n+3-s)
    BigReal g = gamma(Rational(3) - s, w) * gamma(s, w) / 2;
    BigReal psi_a = BigReal(Rational(3, 2), w) - euler_gamma(w);
    BigReal psi_b = digamma_rational(Rational(3) - s, w);
    TailSummer summer(w);
    for (long n = 0;; ++n) {
        if (summer.add(g * (psi_a - psi_b))) break;
        Rational b = Rational(n + 3) - s;
        g = g * BigReal(Rational(3) * b * (Rational(n) + s) / Rational((2 * n + 3) * (2 * n + 4)), w);
        psi_a += BigReal(Rational(1, 2 * n + 3) + Rational(1, 2 * n + 4), w);
        psi_b += BigReal(Rational(1) / b, w);
    }
    Rational six_q = Rational(6) * q;
    BigReal qr(q, w);
    BigReal trig = trigamma_diff((six_q - Rational(1)) / six_q, (Rational(3) * q - Rational(1)) / six_q, w);
    return (trig / (36 * qr) + summer.sum() / qr).at(p);
}

BigReal theorem29_rhs(long m, const Precision& p) {
    check_m(m);
    if (m % 2 == 0) throw DomainError("theorem 2.9 family requires odd m");
    Precision w = p.with_extra_guard(5);
    BigReal total(w);
    for (long k = 0; k < phi_count(m); ++k) {
        BigReal a = phi(m, k, w) + 1;
        // c_n = 2^n / ((2n+1) C(2n,n)), sigma_n = sum_{i<=n} a^i / i
        BigReal c(1, w);
        BigReal sigma(w);
        BigReal power(1, w);
        TailSummer summer(w);
        for (long n = 0;; ++n) {
            if (n > 0) {
                power *= a;
                sigma += power / n;
            }
            if (summer.add(c * sigma)) break;
            c = c * BigReal(Rational(n + 1, 2 * n + 3), w);
        }
        total += summer.sum();
    }
    return (pi(w) * m / 8 * log2_at(w) - total / 2).at(p);
}

BigReal theorem210_rhs(long m, const Precision& p) {
    check_m(m);
    Precision w = p.with_extra_guard(5);
    long lead = m % 2 == 0 ? m : m + 1;
    return (pi(w) * lead / 2 * log2_at(w) + pi(w) * sum_half_angle(m, w)).at(p);
}

BigReal theorem211_rhs(long m, const Precision& p) {
    check_m(m);
    Precision w = p.with_extra_guard(5);
    BigReal pi_w = pi(w);
    BigReal value =
        pi_w * pi_w * m / 9 + sqrt3_log_base(m, w) - 2 * pi_w * sqrt(BigReal(3, w)) / 9 * sum_25(m, w);
    return value.at(p);
}

void check_family_args(std::string_view name, const std::vector<Rational>& args) {
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw DomainError(std::string(name) + " takes " + std::to_string(n) + " argument(s)");
    };
    auto int_arg = [&](std::size_t i) {
        if (!args[i].is_integer()) throw DomainError(std::string(name) + ": m must be an integer");
        if (args[i] < Rational(1) || args[i] > Rational(max_family_m))
            throw DomainError(std::string(name) + ": m out of range");
    };
    auto q_arg = [&](std::size_t i, const Rational& bound) {
        if (args[i] <= bound)
            throw DomainError(std::string(name) + ": q must exceed " + bound.to_string() + ", got " + args[i].to_string());
    };
    if (name == "thm1" || name == "auxA") {
        need(2), int_arg(0), q_arg(1, Rational(1));
    } else if (name == "auxB" || name == "auxC") {
        need(1), q_arg(0, Rational(1));
    } else if (name == "thm27" || name == "thm28") {
        need(1), q_arg(0, Rational(1, 2));
    } else if (name == "thm24" || name == "thm25" || name == "thm26" || name == "thm210" || name == "thm211") {
        need(1), int_arg(0);
    } else if (name == "thm29") {
        need(1), int_arg(0);
        if (args[0].to_long() % 2 == 0) throw DomainError("thm29: m must be odd");
    } else {
        throw DomainError("unknown family '" + std::string(name) + "'");
    }
}

BigReal evaluate_family(std::string_view name, const std::vector<Rational>& args, const Precision& p) {
    check_family_args(name, args);
    auto m = [&] { return args[0].to_long(); };
    if (name == "thm1") return theorem1_rhs(m(), args[1], p);
    if (name == "auxA") return aux_a_rhs(m(), args[1], p);
    if (name == "auxB") return aux_b_rhs(args[0], p);
    if (name == "auxC") return aux_c_rhs(args[0], p);
    if (name == "thm24") return theorem24_rhs(m(), p);
    if (name == "thm25") return theorem25_rhs(m(), p);
    if (name == "thm26") return theorem26_rhs(m(), p);
    if (name == "thm27") return theorem27_rhs(args[0], p);
    if (name == "thm28") return theorem28_rhs(args[0], p);
    if (name == "thm29") return theorem29_rhs(m(), p);
    if (name == "thm210") return theorem210_rhs(m(), p);
    return theorem211_rhs(m(), p);
}

BinomKind parse_binom_kind(std::string_view name) {
    static const std::pair<std::string_view, BinomKind> kinds[] = {
        {"C2_LOG", BinomKind::C2_LOG},       {"C3_LOG", BinomKind::C3_LOG},
        {"C42_LOG", BinomKind::C42_LOG},     {"GF_H2N_HN", BinomKind::GF_H2N_HN},
        {"GF_CATALAN", BinomKind::GF_CATALAN}, {"GF_ODD_RECIP", BinomKind::GF_ODD_RECIP},
    };
    for (const auto& [n, k] : kinds)
        if (n == name) return k;
    throw DomainError("unknown binom_series kind '" + std::string(name) + "'");
}

std::string_view binom_kind_name(BinomKind k) {
    switch (k) {
    case BinomKind::C2_LOG: return "C2_LOG";
    case BinomKind::C3_LOG: return "C3_LOG";
    case BinomKind::C42_LOG: return "C42_LOG";
    case BinomKind::GF_H2N_HN: return "GF_H2N_HN";
    case BinomKind::GF_CATALAN: return "GF_CATALAN";
    case BinomKind::GF_ODD_RECIP: return "GF_ODD_RECIP";
    }
    return "?";
}

namespace {

void check_binom_domain(BinomKind kind, const BigReal& x, BinomMode mode) {
    const Precision& p = x.precision();
    auto fail = [&](const char* what) {
        throw DomainError(std::string(binom_kind_name(kind)) + ": argument outside " + what);
    };
    BigReal ax = abs(x);
    switch (kind) {
    case BinomKind::C2_LOG:
    case BinomKind::GF_H2N_HN:
    case BinomKind::GF_CATALAN:
        if (ax >= BigReal(Rational(1, 4), p)) fail("|x| < 1/4");
        break;
    case BinomKind::C3_LOG:
        if (x < 0 || x >= BigReal(Rational(4, 27), p)) fail("[0, 4/27)");
        break;
    case BinomKind::C42_LOG:
        if (mode == BinomMode::direct ? ax >= BigReal(Rational(1, 16), p) : ax > BigReal(Rational(1, 16), p))
            fail(mode == BinomMode::direct ? "|x| < 1/16" : "|x| <= 1/16");
        break;
    case BinomKind::GF_ODD_RECIP:
        if (x < 0 || x >= 4) fail("[0, 4)");
        break;
    }
}

BigReal binom_direct(BinomKind kind, const BigReal& x, const Precision& w) {
    if (x.is_zero()) return BigReal(kind == BinomKind::GF_CATALAN ? 1 : 0, w);
    TailSummer summer(w);
    BigReal power(1, w);
    mpz_class c;
    switch (kind) {
    case BinomKind::C2_LOG:
        for (long n = 1;; ++n) {
            power *= x;
            mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
            if (summer.add(BigReal(c, w) * power / n)) break;
        }
        break;
    case BinomKind::C3_LOG:
        for (long n = 1;; ++n) {
            power *= x;
            mpz_bin_uiui(c.get_mpz_t(), 3 * n, n);
            if (summer.add(BigReal(c, w) * power / n)) break;
        }
        break;
    case BinomKind::C42_LOG:
        for (long n = 1;; ++n) {
            power *= x;
            mpz_bin_uiui(c.get_mpz_t(), 4 * n, 2 * n);
            if (summer.add(BigReal(c, w) * power / n)) break;
        }
        break;
    case BinomKind::GF_H2N_HN:
        for (long n = 0;; ++n) {
            if (n > 0) power *= x;
            mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
            Rational h = harmonic(2 * n) - harmonic(n);
            if (summer.add(BigReal(Rational(c, 1) * h, w) * power)) break;
        }
        break;
    case BinomKind::GF_CATALAN:
        for (long n = 0;; ++n) {
            if (n > 0) power *= x;
            mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
            if (summer.add(BigReal(c, w) * power / (n + 1))) break;
        }
        break;
    case BinomKind::GF_ODD_RECIP:
        for (long n = 1;; ++n) {
            power *= x;
            mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
            if (summer.add(power / BigReal(mpz_class(c * (2 * n + 1)), w))) break;
        }
        break;
    }
    return summer.sum();
}

BigReal binom_closed(BinomKind kind, const BigReal& x, const Precision& w) {
    switch (kind) {
    case BinomKind::C2_LOG: return 2 * log(2 / (1 + sqrt(1 - 4 * x)));
    case BinomKind::C3_LOG: {
        if (x.is_zero()) return BigReal(w);
        BigReal r = asin(3 * sqrt(3 * x) / 2);
        return -log(x) + 2 * log(sin(r / 3)) - log(2 * cos(2 * r / 3) + 1) + log(BigReal(4, w));
    }
    case BinomKind::C42_LOG: {
        BigReal root = sqrt(1 - 16 * x);
        return 4 * log2_at(w) - log(1 + root) - 2 * log(sqrt(BigReal(2, w)) + sqrt(1 + root));
    }
    case BinomKind::GF_H2N_HN: {
        BigReal root = sqrt(1 - 4 * x);
        return -log((1 + root) / 2) / root;
    }
    case BinomKind::GF_CATALAN:
        if (x.is_zero()) return BigReal(1, w);
        return (1 - sqrt(1 - 4 * x)) / (2 * x);
    case BinomKind::GF_ODD_RECIP:
        if (x.is_zero()) return BigReal(w);
        return 4 * asin(sqrt(x) / 2) / sqrt(x * (4 - x)) - 1;
    }
    throw Error("unknown binom_series kind");
}

}  // namespace

BigReal binom_series(BinomKind kind, const BigReal& x, const Precision& p, BinomMode mode) {
    Precision w = p.with_extra_guard(5);
    BigReal xw = x.at(w);
    check_binom_domain(kind, xw, mode);
    BigReal v = mode == BinomMode::direct ? binom_direct(kind, xw, w) : binom_closed(kind, xw, w);
    return v.at(p);
}

}  // namespace logint

#include "logint/quadrature.hpp"

#include "logint/errors.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace logint {

namespace {

// Abscissa pair for t > 0 under x = 1/(1 + exp(-pi sinh t)):
// small = 1/(1 + e^u), big = 1 - small, weight = pi cosh t * small * big.
struct Node {
    BigReal small;
    BigReal big;
    BigReal weight;
};

using NodeList = std::vector<Node>;

struct NodeCache {
    std::mutex mutex;
    std::map<std::pair<int, mpfr_prec_t>, std::shared_ptr<const NodeList>> levels;
};

NodeCache& node_cache() {
    static NodeCache c;
    return c;
}

std::shared_ptr<const NodeList> build_level(int level, const Precision& p) {
    auto nodes = std::make_shared<NodeList>();
    BigReal pi_p = pi(p);
    // beyond u_cap the weights are far below any working epsilon
    double u_cap = 8.0 * static_cast<double>(p.bits()) * std::log(2.0);
    long step = level == 0 ? 1 : 2;
    long denom = 1L << level;
    for (long j = 1;; j += step) {
        BigReal t = BigReal(Rational(j, denom), p);
        BigReal sh(p), ch(p);
        mpfr_sinh_cosh(sh.raw(), ch.raw(), t.get(), MPFR_RNDN);
        BigReal u = pi_p * sh;
        if (u.to_double() > u_cap) break;
        BigReal eu = exp(u);
        BigReal small = BigReal(1, p) / (eu + 1);
        BigReal big = eu / (eu + 1);
        BigReal weight = pi_p * ch * small * big;
        nodes->push_back({small, big, weight});
    }
    return nodes;
}

std::shared_ptr<const NodeList> level_nodes(int level, const Precision& p) {
    auto& cache = node_cache();
    auto key = std::make_pair(level, p.bits());
    {
        std::lock_guard lock(cache.mutex);
        auto it = cache.levels.find(key);
        if (it != cache.levels.end()) return it->second;
    }
    auto built = build_level(level, p);
    std::lock_guard lock(cache.mutex);
    auto [it, inserted] = cache.levels.emplace(key, built);
    return it->second;
}

// One side of a level: nodes in increasing t until two consecutive
// contributions fall below tiny.
BigReal side_sum(const UnitIntegrand& f, const NodeList& nodes, bool near_one, const BigReal& tiny,
                 long& evaluations) {
    BigReal sum(tiny.precision());
    int small_run = 0;
    for (const Node& n : nodes) {
        BigReal c(tiny.precision());
        try {
            BigReal v = near_one ? f(n.big, n.small) : f(n.small, n.big);
            ++evaluations;
            if (!v.is_finite()) throw DomainError("non-finite integrand value");
            c = v * n.weight;
        } catch (const Error&) {
            // an integrand that blows up where the weight has underflowed,
            // or where the abscissa has rounded onto the endpoint,
            // contributes its endpoint limit of zero
            bool collapsed = near_one && mpfr_cmp_ui(n.big.get(), 1) == 0;
            if (n.weight >= tiny && !collapsed) throw;
        }
        sum += c;
        if (abs(c) < tiny) {
            if (++small_run >= 2) break;
        } else {
            small_run = 0;
        }
    }
    return sum;
}

}  // namespace

BigReal tanh_sinh(const UnitIntegrand& f, const Precision& p, QuadratureStats* stats, int max_level) {
    BigReal tiny = pow10(-(p.working_digits() + 10), p);
    BigReal tol = pow10(-(p.decimal_digits + 2), p);
    long evaluations = 0;

    BigReal half(Rational(1, 2), p);
    BigReal estimate = f(half, half) * pi(p) / 4;
    ++evaluations;
    {
        auto nodes = level_nodes(0, p);
        estimate += side_sum(f, *nodes, true, tiny, evaluations);
        estimate += side_sum(f, *nodes, false, tiny, evaluations);
    }
    int small_diffs = 0;
    BigReal last_diff(p);
    for (int level = 1; level <= max_level; ++level) {
        auto nodes = level_nodes(level, p);
        BigReal added = side_sum(f, *nodes, true, tiny, evaluations) + side_sum(f, *nodes, false, tiny, evaluations);
        BigReal h = pow(BigReal(2, p), -static_cast<long>(level));
        BigReal next = estimate / 2 + added * h;
        last_diff = abs(next - estimate);
        estimate = next;
        small_diffs = last_diff <= tol ? small_diffs + 1 : 0;
        if (small_diffs >= 2) {
            if (stats) {
                stats->levels = level;
                stats->evaluations = evaluations;
                stats->achieved_digits = last_diff.is_zero() ? p.working_digits()
                                                              : digits_agreed(next, next + last_diff);
            }
            return estimate;
        }
    }
    long achieved = last_diff.is_zero() ? 0 : digits_agreed(estimate, estimate + last_diff);
    if (stats) {
        stats->levels = max_level;
        stats->evaluations = evaluations;
        stats->achieved_digits = achieved;
    }
    throw ConvergenceError("tanh-sinh did not converge by level " + std::to_string(max_level) + " (about " +
                               std::to_string(achieved) + " digits achieved)",
                           achieved);
}

BigReal integrate_unit(const Expr& integrand, const Precision& p, QuadratureStats* stats) {
    auto f = [&](const BigReal& x, const BigReal&) { return evaluate(integrand, x, p); };
    return tanh_sinh(f, p, stats);
}

BigReal integrate_halfline(const Expr& integrand, const Precision& p, QuadratureStats* stats) {
    // int_0^inf f = int_0^1 [f(u) + f(1/u)/u^2] du
    auto g = [&](const BigReal& u, const BigReal&) {
        BigReal inv = BigReal(1, p) / u;
        return evaluate(integrand, u, p) + evaluate(integrand, inv, p) * inv * inv;
    };
    return tanh_sinh(g, p, stats);
}

BigReal integrate_finite(const Expr& integrand, const BigReal& a, const std::optional<BigReal>& b,
                         const Precision& p, QuadratureStats* stats) {
    BigReal lo = a.at(p);
    if (!b) {
        // x = a + (1-u)/u, dx = du/u^2
        auto g = [&](const BigReal& u, const BigReal& uc) {
            BigReal x = lo + uc / u;
            return evaluate(integrand, x, p) / (u * u);
        };
        return tanh_sinh(g, p, stats);
    }
    BigReal hi = b->at(p);
    if (!(lo < hi)) throw DomainError("integration requires a < b");
    BigReal width = hi - lo;
    BigReal half(Rational(1, 2), p);
    // map from whichever endpoint is nearer so the abscissa keeps full
    // relative accuracy next to it
    auto g = [&](const BigReal& u, const BigReal& uc) {
        BigReal x = u <= half ? lo + width * u : hi - width * uc;
        return evaluate(integrand, x, p) * width;
    };
    return tanh_sinh(g, p, stats);
}

BigReal integrate(const IntegralSpec& spec, const Precision& p, QuadratureStats* stats) {
    switch (spec.domain) {
    case Domain::unit: return integrate_unit(spec.integrand, p, stats);
    case Domain::halfline: return integrate_halfline(spec.integrand, p, stats);
    case Domain::finite: {
        if (!spec.lower) throw Error("finite integral needs a lower limit");
        BigReal a = evaluate(*spec.lower, p);
        std::optional<BigReal> b;
        if (spec.upper) b = evaluate(*spec.upper, p);
        return integrate_finite(spec.integrand, a, b, p, stats);
    }
    }
    throw Error("unknown integration domain");
}

BigReal gauss_legendre(const std::function<BigReal(const BigReal&)>& f, const BigReal& a, const BigReal& b, int n,
                       const Precision& p) {
    if (n < 1) throw Error("Gauss-Legendre needs at least one node");
    Precision w = p.with_extra_guard(10);
    BigReal eps = pow10(-(w.working_digits() - 2), w);
    BigReal pi_w = pi(w);
    BigReal mid = (a.at(w) + b.at(w)) / 2;
    BigReal rad = (b.at(w) - a.at(w)) / 2;
    BigReal total(w);
    for (int i = 1; i <= (n + 1) / 2; ++i) {
        BigReal z = cos(pi_w * BigReal(Rational(4 * i - 1, 4 * n + 2), w));
        BigReal dp(w);
        for (int iter = 0; iter < 100; ++iter) {
            // P_n(z) and P_n'(z) by the three-term recurrence
            BigReal p0(1, w), p1 = z;
            for (int k = 2; k <= n; ++k) {
                BigReal p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            BigReal pn = n == 1 ? z : p1;
            BigReal pm = n == 1 ? BigReal(1, w) : p0;
            dp = n * (z * pn - pm) / (z * z - 1);
            BigReal dz = pn / dp;
            z -= dz;
            if (abs(dz) < eps) break;
        }
        BigReal weight = 2 / ((1 - z * z) * dp * dp);
        BigReal fx1 = f((mid + rad * z).at(p)).at(w);
        if (2 * i - 1 == n) {
            total += weight * fx1;
        } else {
            BigReal fx2 = f((mid - rad * z).at(p)).at(w);
            total += weight * (fx1 + fx2);
        }
    }
    return (total * rad).at(p);
}

}  // namespace logint

#include "logint/closed_forms.hpp"
#include "logint/errors.hpp"
#include "logint/expr.hpp"
#include "logint/quadrature.hpp"
#include "logint/special.hpp"

namespace logint {

namespace {

BigReal apply(Fn fn, const Expr& arg, const std::optional<BigReal>& x, const Precision& p) {
    // rational constant arguments take the exact routes for psi
    if (fn == Fn::Psi0 || fn == Fn::Psi1) {
        if (auto r = fold_rational(arg)) return fn == Fn::Psi0 ? digamma_rational(*r, p) : trigamma_rational(*r, p);
    }
    BigReal v = evaluate(arg, x, p);
    switch (fn) {
    case Fn::Sqrt: return sqrt(v);
    case Fn::Log: return log(v);
    case Fn::Exp: return exp(v);
    case Fn::Sin: return sin(v);
    case Fn::Cos: return cos(v);
    case Fn::Asin: return asin(v);
    case Fn::Psi0: return digamma(v, p);
    case Fn::Psi1: return trigamma(v, p);
    case Fn::Cl2: return clausen2(v, p);
    case Fn::Li2: return dilog(v, p);
    }
    throw Error("unknown function");
}

}  // namespace

BigReal evaluate(const Expr& e, const std::optional<BigReal>& x, const Precision& p) {
    switch (e.op()) {
    case Op::Number: return BigReal(e.value(), p);
    case Op::Var:
        if (!x) throw DomainError("expression depends on x but no value was supplied");
        return x->at(p);
    case Op::Pi: return pi(p);
    case Op::EulerGamma: return euler_gamma(p);
    case Op::CatalanG: return catalan(p);
    case Op::Add: return evaluate(e.child(0), x, p) + evaluate(e.child(1), x, p);
    case Op::Sub: return evaluate(e.child(0), x, p) - evaluate(e.child(1), x, p);
    case Op::Mul: return evaluate(e.child(0), x, p) * evaluate(e.child(1), x, p);
    case Op::Div: {
        BigReal den = evaluate(e.child(1), x, p);
        if (den.is_zero()) throw DomainError("division by zero");
        return evaluate(e.child(0), x, p) / den;
    }
    case Op::Neg: return -evaluate(e.child(0), x, p);
    case Op::Pow: {
        BigReal base = evaluate(e.child(0), x, p);
        const Rational& k = e.exponent();
        if (k.is_integer()) {
            if (base.is_zero() && k.sign() < 0) throw DomainError("zero raised to a negative power");
            return pow(base, k.to_long());
        }
        return pow(base, k);
    }
    case Op::Call: return apply(e.fn(), e.child(0), x, p);
    case Op::Family: return evaluate_family(e.name(), e.args(), p);
    case Op::Integral: {
        BigReal lo = evaluate(e.child(1), std::nullopt, p);
        std::optional<BigReal> hi;
        if (!e.upper_infinite()) hi = evaluate(e.child(2), std::nullopt, p);
        return integrate_finite(e.child(0), lo, hi, p);
    }
    }
    throw Error("unknown expression node");
}

}  // namespace logint

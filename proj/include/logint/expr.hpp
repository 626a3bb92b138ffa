#pragma once

#include "logint/numeric.hpp"
#include "logint/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace logint {

enum class Op {
    Number,
    Var,
    Pi,
    EulerGamma,
    CatalanG,
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Pow,
    Call,      // one of Fn applied to a single argument
    Family,    // named closed-form builder with rational parameters, e.g. thm24(5)
    Integral,  // int(body, a, b); body is in x, b may be infinite
};

enum class Fn { Sqrt, Log, Exp, Sin, Cos, Asin, Psi0, Psi1, Cl2, Li2 };

std::string_view fn_name(Fn f);

// Immutable expression tree. Copies share nodes.
class Expr {
public:
    static Expr number(const Rational& value);
    static Expr var();
    static Expr constant(Op which);  // Pi, EulerGamma or CatalanG
    static Expr binary(Op op, Expr a, Expr b);
    static Expr neg(Expr a);
    static Expr pow(Expr base, const Rational& exponent);
    static Expr call(Fn f, Expr arg);
    static Expr family(std::string name, std::vector<Rational> args);
    // hi == nullopt means +infinity
    static Expr integral(Expr body, Expr lo, std::optional<Expr> hi);

    Op op() const;
    const Rational& value() const;     // Number
    const Rational& exponent() const;  // Pow
    Fn fn() const;                     // Call
    const std::string& name() const;   // Family
    const std::vector<Rational>& args() const;
    std::size_t arity() const;
    const Expr& child(std::size_t i) const;
    bool upper_infinite() const;  // Integral

    // True when x occurs outside any int(...) body.
    bool has_free_variable() const;

    friend bool operator==(const Expr& a, const Expr& b);
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Parses the infix grammar. Throws ParseError with the character offset.
Expr parse(std::string_view text);

// Text that parses back to an equal tree.
std::string print(const Expr& e);

// Value of a constant subtree built from rational literals, or nullopt.
std::optional<Rational> fold_rational(const Expr& e);

BigReal evaluate(const Expr& e, const std::optional<BigReal>& x, const Precision& p);
inline BigReal evaluate(const Expr& e, const Precision& p) { return evaluate(e, std::nullopt, p); }

// Names accepted in Family nodes and their parameter counts.
struct FamilyInfo {
    std::string_view name;
    std::size_t arity;
};
const std::vector<FamilyInfo>& family_table();

}  // namespace logint

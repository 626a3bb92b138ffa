#include "logint/expr.hpp"

#include "logint/errors.hpp"

#include <sstream>

namespace logint {

struct Expr::Node {
    Op op;
    Rational value;
    Fn fn = Fn::Sqrt;
    std::string name;
    std::vector<Rational> args;
    std::vector<Expr> children;
    bool upper_infinite = false;
};

std::string_view fn_name(Fn f) {
    switch (f) {
    case Fn::Sqrt: return "sqrt";
    case Fn::Log: return "log";
    case Fn::Exp: return "exp";
    case Fn::Sin: return "sin";
    case Fn::Cos: return "cos";
    case Fn::Asin: return "asin";
    case Fn::Psi0: return "psi0";
    case Fn::Psi1: return "psi1";
    case Fn::Cl2: return "cl2";
    case Fn::Li2: return "li2";
    }
    return "?";
}

const std::vector<FamilyInfo>& family_table() {
    static const std::vector<FamilyInfo> table = {
        {"thm1", 2},  {"auxA", 2},  {"auxB", 1},   {"auxC", 1},   {"thm24", 1}, {"thm25", 1},
        {"thm26", 1}, {"thm27", 1}, {"thm28", 1},  {"thm29", 1},  {"thm210", 1}, {"thm211", 1},
    };
    return table;
}

Expr Expr::number(const Rational& value) {
    auto n = std::make_shared<Node>();
    n->op = Op::Number;
    n->value = value;
    return Expr(n);
}

Expr Expr::var() {
    auto n = std::make_shared<Node>();
    n->op = Op::Var;
    return Expr(n);
}

Expr Expr::constant(Op which) {
    if (which != Op::Pi && which != Op::EulerGamma && which != Op::CatalanG)
        throw Error("not a constant node");
    auto n = std::make_shared<Node>();
    n->op = which;
    return Expr(n);
}

Expr Expr::binary(Op op, Expr a, Expr b) {
    if (op != Op::Add && op != Op::Sub && op != Op::Mul && op != Op::Div) throw Error("not a binary operator");
    auto n = std::make_shared<Node>();
    n->op = op;
    n->children = {std::move(a), std::move(b)};
    return Expr(n);
}

Expr Expr::neg(Expr a) {
    auto n = std::make_shared<Node>();
    n->op = Op::Neg;
    n->children = {std::move(a)};
    return Expr(n);
}

Expr Expr::pow(Expr base, const Rational& exponent) {
    auto n = std::make_shared<Node>();
    n->op = Op::Pow;
    n->value = exponent;
    n->children = {std::move(base)};
    return Expr(n);
}

Expr Expr::call(Fn f, Expr arg) {
    auto n = std::make_shared<Node>();
    n->op = Op::Call;
    n->fn = f;
    n->children = {std::move(arg)};
    return Expr(n);
}

Expr Expr::family(std::string name, std::vector<Rational> args) {
    auto n = std::make_shared<Node>();
    n->op = Op::Family;
    n->name = std::move(name);
    n->args = std::move(args);
    return Expr(n);
}

Expr Expr::integral(Expr body, Expr lo, std::optional<Expr> hi) {
    auto n = std::make_shared<Node>();
    n->op = Op::Integral;
    n->children = {std::move(body), std::move(lo)};
    if (hi) n->children.push_back(std::move(*hi));
    else n->upper_infinite = true;
    return Expr(n);
}

Op Expr::op() const { return node_->op; }
const Rational& Expr::value() const { return node_->value; }
const Rational& Expr::exponent() const { return node_->value; }
Fn Expr::fn() const { return node_->fn; }
const std::string& Expr::name() const { return node_->name; }
const std::vector<Rational>& Expr::args() const { return node_->args; }
std::size_t Expr::arity() const { return node_->children.size(); }
const Expr& Expr::child(std::size_t i) const { return node_->children.at(i); }
bool Expr::upper_infinite() const { return node_->upper_infinite; }

bool Expr::has_free_variable() const {
    if (op() == Op::Var) return true;
    for (std::size_t i = 0; i < arity(); ++i) {
        if (op() == Op::Integral && i == 0) continue;
        if (child(i).has_free_variable()) return true;
    }
    return false;
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (x.op != y.op || x.value != y.value || x.name != y.name || x.args != y.args ||
        x.upper_infinite != y.upper_infinite || x.children.size() != y.children.size())
        return false;
    if (x.op == Op::Call && x.fn != y.fn) return false;
    for (std::size_t i = 0; i < x.children.size(); ++i)
        if (x.children[i] != y.children[i]) return false;
    return true;
}

std::optional<Rational> fold_rational(const Expr& e) {
    switch (e.op()) {
    case Op::Number: return e.value();
    case Op::Neg: {
        auto v = fold_rational(e.child(0));
        if (!v) return std::nullopt;
        return -*v;
    }
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div: {
        auto a = fold_rational(e.child(0));
        auto b = fold_rational(e.child(1));
        if (!a || !b) return std::nullopt;
        switch (e.op()) {
        case Op::Add: return *a + *b;
        case Op::Sub: return *a - *b;
        case Op::Mul: return *a * *b;
        default:
            if (b->sign() == 0) return std::nullopt;
            return *a / *b;
        }
    }
    case Op::Pow: {
        auto a = fold_rational(e.child(0));
        if (!a || !e.exponent().is_integer()) return std::nullopt;
        if (a->sign() == 0 && e.exponent().sign() < 0) return std::nullopt;
        return pow(*a, e.exponent().to_long());
    }
    default: return std::nullopt;
    }
}

namespace {

int precedence(const Expr& e) {
    switch (e.op()) {
    case Op::Add:
    case Op::Sub: return 1;
    case Op::Mul:
    case Op::Div: return 2;
    case Op::Neg: return 3;
    case Op::Pow: return 4;
    case Op::Number:
        if (!e.value().is_integer()) return 2;
        return e.value().sign() < 0 ? 3 : 5;
    default: return 5;
    }
}

void print_to(std::ostringstream& out, const Expr& e);

void print_wrapped(std::ostringstream& out, const Expr& e, bool wrap) {
    if (wrap) out << '(';
    print_to(out, e);
    if (wrap) out << ')';
}

void print_to(std::ostringstream& out, const Expr& e) {
    switch (e.op()) {
    case Op::Number: out << e.value().to_string(); break;
    case Op::Var: out << 'x'; break;
    case Op::Pi: out << "pi"; break;
    case Op::EulerGamma: out << "gamma"; break;
    case Op::CatalanG: out << 'G'; break;
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div: {
        int p = precedence(e);
        const char* sym = e.op() == Op::Add ? " + " : e.op() == Op::Sub ? " - " : e.op() == Op::Mul ? " * " : " / ";
        print_wrapped(out, e.child(0), precedence(e.child(0)) < p);
        out << sym;
        print_wrapped(out, e.child(1), precedence(e.child(1)) <= p);
        break;
    }
    case Op::Neg:
        out << '-';
        print_wrapped(out, e.child(0), precedence(e.child(0)) < 3);
        break;
    case Op::Pow: {
        print_wrapped(out, e.child(0), precedence(e.child(0)) < 5);
        out << '^';
        const Rational& k = e.exponent();
        if (k.is_integer() && k.sign() >= 0) out << k.to_string();
        else out << '(' << k.to_string() << ')';
        break;
    }
    case Op::Call:
        out << fn_name(e.fn()) << '(';
        print_to(out, e.child(0));
        out << ')';
        break;
    case Op::Family: {
        out << e.name() << '(';
        for (std::size_t i = 0; i < e.args().size(); ++i) {
            if (i) out << ", ";
            out << e.args()[i].to_string();
        }
        out << ')';
        break;
    }
    case Op::Integral:
        out << "int(";
        print_to(out, e.child(0));
        out << ", ";
        print_to(out, e.child(1));
        out << ", ";
        if (e.upper_infinite()) out << "inf";
        else print_to(out, e.child(2));
        out << ')';
        break;
    }
}

}  // namespace

std::string print(const Expr& e) {
    std::ostringstream out;
    print_to(out, e);
    return out.str();
}

}  // namespace logint

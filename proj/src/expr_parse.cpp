#include "logint/errors.hpp"
#include "logint/expr.hpp"

#include <cctype>

namespace logint {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    Expr parse_all() {
        Expr e = expression();
        skip_ws();
        if (pos_ < s_.size()) {
            if (s_[pos_] == ')') fail("unmatched ')'", pos_);
            fail(std::string("unexpected '") + s_[pos_] + "'", pos_);
        }
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    int integral_depth_ = 0;

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect_close(std::size_t open_at) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ')') {
            ++pos_;
            return;
        }
        if (pos_ >= s_.size()) fail("unclosed '('", open_at);
        fail(std::string("expected ')' but found '") + s_[pos_] + "'", pos_);
    }

    Expr expression() {
        Expr lhs = term();
        for (;;) {
            if (accept('+')) lhs = Expr::binary(Op::Add, lhs, term());
            else if (accept('-')) lhs = Expr::binary(Op::Sub, lhs, term());
            else return lhs;
        }
    }

    Expr term() {
        Expr lhs = unary();
        for (;;) {
            if (accept('*')) lhs = Expr::binary(Op::Mul, lhs, unary());
            else if (accept('/')) lhs = Expr::binary(Op::Div, lhs, unary());
            else return lhs;
        }
    }

    Expr unary() {
        if (accept('-')) return Expr::neg(unary());
        if (accept('+')) return unary();
        return power();
    }

    Expr power() { return raise(primary()); }

    Expr raise(Expr base) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            std::size_t at = pos_++;
            Expr ex = exponent();
            auto k = fold_rational(ex);
            if (!k) fail("exponent must be a rational constant", at + 1);
            return Expr::pow(base, *k);
        }
        return base;
    }

    // In an exponent a/b is not one literal: pi^2/9 is (pi^2)/9.
    Expr exponent() {
        if (accept('-')) return Expr::neg(exponent());
        if (accept('+')) return exponent();
        skip_ws();
        if (pos_ < s_.size() && is_digit(s_[pos_])) {
            std::string num = digits();
            if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
                fail("decimal literals are not allowed; use a rational a/b", pos_);
            return raise(Expr::number(Rational(mpz_class(num), mpz_class(1))));
        }
        return raise(primary());
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    Expr number() {
        std::size_t start = pos_;
        std::string num = digits();
        if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
            fail("decimal literals are not allowed; use a rational a/b", pos_);
        // INT/INT with no whitespace is one rational literal, unless the
        // denominator is raised to a power.
        if (pos_ + 1 < s_.size() && s_[pos_] == '/' && is_digit(s_[pos_ + 1])) {
            std::size_t save = pos_;
            ++pos_;
            std::string den = digits();
            bool powered = pos_ < s_.size() && s_[pos_] == '^';
            bool decimal = pos_ < s_.size() && s_[pos_] == '.';
            if (decimal) fail("decimal literals are not allowed; use a rational a/b", pos_);
            if (!powered) {
                if (mpz_class(den) == 0) fail("zero denominator in rational literal", start);
                return Expr::number(Rational(mpz_class(num), mpz_class(den)));
            }
            pos_ = save;
        }
        return Expr::number(Rational(mpz_class(num), mpz_class(1)));
    }

    std::vector<Expr> call_args(std::size_t open_at) {
        std::vector<Expr> out;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ')') {
            ++pos_;
            return out;
        }
        for (;;) {
            out.push_back(expression());
            if (accept(',')) continue;
            expect_close(open_at);
            return out;
        }
    }

    Expr primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input", pos_);
        char c = s_[pos_];
        if (is_digit(c)) return number();
        if (c == '(') {
            std::size_t open_at = pos_++;
            Expr e = expression();
            expect_close(open_at);
            return e;
        }
        if (c == '.') fail("decimal literals are not allowed; use a rational a/b", pos_);
        if (!is_ident_start(c)) fail(std::string("unexpected '") + c + "'", pos_);

        std::size_t start = pos_;
        while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
        std::string id(s_.substr(start, pos_ - start));

        if (id == "x") return Expr::var();
        if (id == "pi") return Expr::constant(Op::Pi);
        if (id == "gamma") return Expr::constant(Op::EulerGamma);
        if (id == "G") return Expr::constant(Op::CatalanG);

        skip_ws();
        bool has_paren = pos_ < s_.size() && s_[pos_] == '(';
        static const std::pair<std::string_view, Fn> fns[] = {
            {"sqrt", Fn::Sqrt}, {"log", Fn::Log},   {"exp", Fn::Exp},   {"sin", Fn::Sin}, {"cos", Fn::Cos},
            {"asin", Fn::Asin}, {"psi0", Fn::Psi0}, {"psi1", Fn::Psi1}, {"cl2", Fn::Cl2}, {"li2", Fn::Li2},
        };
        for (const auto& [name, fn] : fns) {
            if (id != name) continue;
            if (!has_paren) fail("function '" + id + "' needs an argument list", pos_);
            std::size_t open_at = pos_++;
            auto args = call_args(open_at);
            if (args.size() != 1) fail("function '" + id + "' takes one argument", start);
            return Expr::call(fn, args[0]);
        }
        for (const auto& info : family_table()) {
            if (id != info.name) continue;
            if (!has_paren) fail("'" + id + "' needs an argument list", pos_);
            std::size_t open_at = pos_++;
            auto args = call_args(open_at);
            if (args.size() != info.arity)
                fail("'" + id + "' takes " + std::to_string(info.arity) + " argument(s)", start);
            std::vector<Rational> values;
            for (const auto& a : args) {
                auto v = fold_rational(a);
                if (!v) fail("'" + id + "' parameters must be rational constants", start);
                values.push_back(*v);
            }
            return Expr::family(id, std::move(values));
        }
        if (id == "int") {
            if (!has_paren) fail("'int' needs an argument list", pos_);
            std::size_t open_at = pos_++;
            if (integral_depth_ > 0) fail("nested integrals are not supported", start);
            ++integral_depth_;
            Expr body = expression();
            --integral_depth_;
            if (!accept(',')) fail("int(body, a, b) expects three arguments", pos_);
            Expr lo = expression();
            if (!accept(',')) fail("int(body, a, b) expects three arguments", pos_);
            skip_ws();
            std::optional<Expr> hi;
            std::size_t hi_at = pos_;
            if (s_.substr(pos_, 3) == "inf" && (pos_ + 3 >= s_.size() || !is_ident_char(s_[pos_ + 3]))) pos_ += 3;
            else hi = expression();
            expect_close(open_at);
            if (lo.has_free_variable() || (hi && hi->has_free_variable()))
                fail("integration limits must be constants", hi_at);
            return Expr::integral(body, lo, hi);
        }
        if (id == "inf") fail("'inf' is only allowed as an upper integration limit", start);
        fail("unknown identifier '" + id + "'", start);
    }
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace logint

#include "logint/closed_forms.hpp"
#include "logint/errors.hpp"
#include "logint/series.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace logint {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

Rational parse_rational(const std::string& key, const std::string& v) {
    try {
        return Rational::parse(v);
    } catch (const Error&) {
        throw DomainError("series spec: '" + key + "' must be a rational, got '" + v + "'");
    }
}

long parse_long(const std::string& key, const std::string& v) {
    Rational r = parse_rational(key, v);
    if (!r.is_integer()) throw DomainError("series spec: '" + key + "' must be an integer");
    return r.to_long();
}

// "an+b" / "n" / "b" with an optional "(...)^k"
LinearFactor parse_factor(const std::string& text) {
    std::string s = text;
    LinearFactor f;
    std::size_t caret = s.rfind('^');
    if (caret != std::string::npos) {
        f.power = static_cast<int>(parse_long("power", s.substr(caret + 1)));
        if (f.power < 1) throw DomainError("series spec: factor powers must be positive in '" + text + "'");
        s = s.substr(0, caret);
    }
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty()) throw DomainError("series spec: empty polynomial factor");
    std::size_t npos = s.find('n');
    if (npos == std::string::npos) {
        f.a = 0;
        f.b = parse_long("factor", s);
        return f;
    }
    std::string coef = s.substr(0, npos);
    f.a = coef.empty() || coef == "+" ? 1 : coef == "-" ? -1 : parse_long("factor", coef);
    std::string rest = s.substr(npos + 1);
    if (rest.empty()) {
        f.b = 0;
    } else {
        if (rest[0] != '+' && rest[0] != '-') throw DomainError("series spec: malformed factor '" + text + "'");
        f.b = parse_long("factor", rest[0] == '+' ? rest.substr(1) : rest);
    }
    return f;
}

std::vector<LinearFactor> parse_polynomial(const std::string& text) {
    std::vector<LinearFactor> out;
    for (const auto& piece : split(text, '*')) {
        LinearFactor f = parse_factor(piece);
        if (f.a == 0 && f.b == 1) continue;
        out.push_back(f);
    }
    return out;
}

HarmonicFlavor parse_flavor(const std::string& v, Rational& power_base) {
    static const std::map<std::string, HarmonicFlavor> names = {
        {"none", HarmonicFlavor::none},
        {"Hn", HarmonicFlavor::H_n},
        {"H2n", HarmonicFlavor::H_2n},
        {"H2n1", HarmonicFlavor::H_2n1},
        {"H2n-Hn", HarmonicFlavor::H_2n_minus_H_n},
        {"H2n1-Hn", HarmonicFlavor::H_2n1_minus_H_n},
        {"H2n-Hn/2", HarmonicFlavor::H_2n_minus_half_H_n},
        {"odd", HarmonicFlavor::odd_reciprocal},
    };
    if (v.rfind("pow:", 0) == 0) {
        power_base = parse_rational("harmonic", v.substr(4));
        return HarmonicFlavor::partial_power_sum;
    }
    auto it = names.find(v);
    if (it == names.end()) throw DomainError("series spec: unknown harmonic flavor '" + v + "'");
    return it->second;
}

EulerBbpSpec parse_euler_bbp(std::map<std::string, std::string>& kv) {
    EulerBbpSpec s;
    if (kv.count("m")) s.m = parse_long("m", kv["m"]);
    if (!kv.count("mod")) throw DomainError("euler_bbp spec needs mod=");
    if (!kv.count("pattern")) throw DomainError("euler_bbp spec needs pattern=");
    s.modulus = parse_rational("mod", kv["mod"]);
    if (s.modulus.sign() <= 0) throw DomainError("euler_bbp modulus must be positive");
    for (const auto& entry : split(kv["pattern"], ',')) {
        if (entry.empty()) throw DomainError("euler_bbp: empty pattern entry");
        std::string body = entry;
        Rational sign(1);
        if (body[0] == '+' || body[0] == '-') {
            if (body[0] == '-') sign = Rational(-1);
            body = body.substr(1);
        }
        Rational coef(1);
        std::size_t colon = body.find(':');
        if (colon != std::string::npos) {
            coef = parse_rational("pattern", body.substr(0, colon));
            body = body.substr(colon + 1);
        }
        Rational offset = parse_rational("pattern", body);
        if (offset.sign() <= 0 || offset >= s.modulus)
            throw DomainError("euler_bbp: offset " + offset.to_string() + " must lie in (0, mod)");
        if (!s.pattern.empty() && offset <= s.pattern.back().offset)
            throw DomainError("euler_bbp: pattern offsets must be strictly increasing");
        s.pattern.push_back({sign * coef, offset});
    }
    return s;
}

CentralBinomSpec parse_central_binom(std::map<std::string, std::string>& kv) {
    CentralBinomSpec s;
    if (kv.count("base")) s.base = parse_rational("base", kv["base"]);
    if (kv.count("binom")) {
        long b = parse_long("binom", kv["binom"]);
        if (b < -1 || b > 1) throw DomainError("central_binom: binom must be -1, 0 or 1");
        s.binom = static_cast<int>(b);
    }
    if (kv.count("num")) s.num = parse_polynomial(kv["num"]);
    if (kv.count("den")) s.den = parse_polynomial(kv["den"]);
    if (kv.count("harmonic")) s.flavor = parse_flavor(kv["harmonic"], s.power_base);
    if (kv.count("start")) s.start = parse_long("start", kv["start"]);
    if (s.start < 0) throw DomainError("central_binom: start must be nonnegative");
    return s;
}

}  // namespace

SeriesSpec parse_series_spec(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string kind;
    in >> kind;
    if (kind.empty()) throw DomainError("empty series spec");
    std::map<std::string, std::string> kv;
    std::string tok;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0) throw DomainError("series spec: expected key=value, got '" + tok + "'");
        std::string key = tok.substr(0, eq);
        if (kv.count(key)) throw DomainError("series spec: duplicate key '" + key + "'");
        kv[key] = tok.substr(eq + 1);
    }
    auto check_keys = [&](std::initializer_list<const char*> allowed) {
        for (const auto& [k, v] : kv) {
            bool ok = false;
            for (const char* a : allowed) ok = ok || k == a;
            if (!ok) throw DomainError("series spec: unknown key '" + k + "' for " + kind);
        }
    };

    SeriesSpec spec;
    spec.text = trim(text);
    if (kind == "euler_bbp") {
        check_keys({"m", "mod", "pattern"});
        spec.body = parse_euler_bbp(kv);
    } else if (kind == "central_binom") {
        check_keys({"base", "binom", "num", "den", "harmonic", "start"});
        spec.body = parse_central_binom(kv);
    } else if (kind == "binom_series") {
        check_keys({"kind", "x"});
        if (!kv.count("kind") || !kv.count("x")) throw DomainError("binom_series spec needs kind= and x=");
        parse_binom_kind(kv["kind"]);
        spec.body = BinomSeriesSpec{kv["kind"], parse_rational("x", kv["x"])};
    } else if (kind == "alt_double") {
        check_keys({});
        spec.body = AltDoubleSpec{};
    } else {
        throw DomainError("unknown series kind '" + kind + "'");
    }
    return spec;
}

namespace {

BigReal alt_double_sum(const Precision& p) {
    // b_n = sum_{k=2}^n (-1)^k / (k (k-1) C(n+k, k)); the series is
    // sum_{j>=0} (-1)^j b_{j+1}
    auto term = [](long j, const Precision& w) {
        long n = j + 1;
        Rational b(0);
        mpz_class c = n + 1;  // C(n+1, 1)
        for (long k = 2; k <= n; ++k) {
            c = c * (n + k) / k;
            Rational t(mpz_class(1), mpz_class(k * (k - 1)) * c);
            b = k % 2 == 0 ? b + t : b - t;
        }
        return BigReal(b, w);
    };
    return accelerate_alternating(term, p);
}

}  // namespace

BigReal sum_series(const SeriesSpec& spec, const Precision& p) {
    if (const auto* s = std::get_if<EulerBbpSpec>(&spec.body)) return euler_bbp_lhs(*s, p);
    if (const auto* s = std::get_if<CentralBinomSpec>(&spec.body)) return sum_direct(*s, p);
    if (const auto* s = std::get_if<BinomSeriesSpec>(&spec.body))
        return binom_series(parse_binom_kind(s->kind), BigReal(s->x, p), p, BinomMode::direct);
    return alt_double_sum(p);
}

}  // namespace logint

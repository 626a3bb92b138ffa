#include "logint/registry.hpp"

#include "logint/closed_forms.hpp"
#include "logint/errors.hpp"
#include "logint/quadrature.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace logint {

std::string_view entry_kind_name(EntryKind k) {
    switch (k) {
    case EntryKind::integral_unit: return "integral_unit";
    case EntryKind::integral_halfline: return "integral_halfline";
    case EntryKind::integral_finite: return "integral_finite";
    case EntryKind::series_euler_bbp: return "series_euler_bbp";
    case EntryKind::series_direct: return "series_direct";
    case EntryKind::value: return "value";
    }
    return "?";
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

void check_families(const Expr& e) {
    if (e.op() == Op::Family) check_family_args(e.name(), e.args());
    for (std::size_t i = 0; i < e.arity(); ++i) check_families(e.child(i));
}

Expr parse_field(const std::string& text, const char* what, std::size_t line) {
    try {
        Expr e = parse(text);
        check_families(e);
        return e;
    } catch (const Error& err) {
        throw RegistryError(std::string(what) + ": " + err.what(), line);
    }
}

void parse_kind(Identity& e, std::size_t line) {
    const std::string& k = e.kind_text;
    if (k == "integral_unit") e.kind = EntryKind::integral_unit;
    else if (k == "integral_halfline") e.kind = EntryKind::integral_halfline;
    else if (k == "series_euler_bbp") e.kind = EntryKind::series_euler_bbp;
    else if (k == "series_direct") e.kind = EntryKind::series_direct;
    else if (k == "value") e.kind = EntryKind::value;
    else if (k.rfind("integral_finite(", 0) == 0 && k.back() == ')') {
        e.kind = EntryKind::integral_finite;
        std::string inner = k.substr(16, k.size() - 17);
        auto comma = inner.find(',');
        if (comma == std::string::npos) throw RegistryError("integral_finite needs (a,b)", line);
        std::string a = trim(inner.substr(0, comma));
        std::string b = trim(inner.substr(comma + 1));
        e.lower = parse_field(a, "lower limit", line);
        if (b != "inf") e.upper = parse_field(b, "upper limit", line);
        if (e.lower->has_free_variable() || (e.upper && e.upper->has_free_variable()))
            throw RegistryError("integration limits must be constants", line);
    } else {
        throw RegistryError("unknown kind '" + k + "'", line);
    }
}

}  // namespace

std::vector<Identity> parse_registry(const std::string& text) {
    std::vector<Identity> out;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        if (trim(raw).empty()) continue;
        std::vector<std::string> f;
        std::string cur;
        for (char c : raw) {
            if (c == '|') {
                f.push_back(trim(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        f.push_back(trim(cur));
        if (f.size() < 6 || f.size() > 8)
            throw RegistryError("expected 6 to 8 '|'-separated fields, got " + std::to_string(f.size()), line);

        Identity e;
        e.line = line;
        e.id = f[0];
        if (e.id.empty()) throw RegistryError("empty id", line);
        for (char c : e.id)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                throw RegistryError("invalid id '" + e.id + "'", line);
        if (!seen.insert(e.id).second) throw RegistryError("duplicate id '" + e.id + "'", line);
        e.kind_text = f[1];
        parse_kind(e, line);
        e.lhs_text = f[2];
        e.rhs_text = f[3];
        e.ref = f[4];
        if (f[5] == "pass") e.status = ExpectedStatus::pass;
        else if (f[5] == "suspect") e.status = ExpectedStatus::suspect;
        else throw RegistryError("status must be pass or suspect, got '" + f[5] + "'", line);
        if (f.size() > 6) e.note = f[6];
        if (f.size() > 7) e.expect = f[7];
        if (e.status == ExpectedStatus::suspect && (e.note.empty() || e.expect.empty()))
            throw RegistryError("suspect entry '" + e.id + "' needs a note and an expected abs_diff", line);

        try {
            switch (e.kind) {
            case EntryKind::series_euler_bbp: e.series = parse_series_spec("euler_bbp " + e.lhs_text); break;
            case EntryKind::series_direct: e.series = parse_series_spec(e.lhs_text); break;
            default: e.lhs = parse_field(e.lhs_text, "lhs", line);
            }
        } catch (const RegistryError&) {
            throw;
        } catch (const Error& err) {
            throw RegistryError(std::string("lhs: ") + err.what(), line);
        }
        if (e.kind == EntryKind::value && e.lhs->has_free_variable())
            throw RegistryError("value entries must not depend on x", line);
        e.rhs = parse_field(e.rhs_text, "rhs", line);
        if (e.rhs->has_free_variable()) throw RegistryError("rhs must not depend on x", line);
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<Identity> load_registry(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RegistryError("cannot open registry '" + path + "'", 0);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_registry(buf.str());
}

std::vector<Identity> filter_registry(const std::vector<Identity>& all, const std::string& filter) {
    std::vector<Identity> out;
    for (const auto& e : all) {
        bool keep = filter.empty() || (filter == "suspect" ? e.status == ExpectedStatus::suspect
                                                            : e.id.rfind(filter, 0) == 0);
        if (keep) out.push_back(e);
    }
    return out;
}

BigReal evaluate_lhs(const Identity& e, const Precision& p) {
    switch (e.kind) {
    case EntryKind::integral_unit: return integrate_unit(*e.lhs, p);
    case EntryKind::integral_halfline: return integrate_halfline(*e.lhs, p);
    case EntryKind::integral_finite: {
        BigReal a = evaluate(*e.lower, p);
        std::optional<BigReal> b;
        if (e.upper) b = evaluate(*e.upper, p);
        return integrate_finite(*e.lhs, a, b, p);
    }
    case EntryKind::series_euler_bbp:
    case EntryKind::series_direct: return sum_series(*e.series, p);
    case EntryKind::value: return evaluate(*e.lhs, p);
    }
    throw Error("unknown entry kind");
}

BigReal evaluate_rhs(const Identity& e, const Precision& p) { return evaluate(*e.rhs, p); }

}  // namespace logint

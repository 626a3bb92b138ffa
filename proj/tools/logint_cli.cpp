#include "logint/closed_forms.hpp"
#include "logint/errors.hpp"
#include "logint/expr.hpp"
#include "logint/quadrature.hpp"
#include "logint/registry.hpp"
#include "logint/series.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <thread>

namespace {

constexpr int exit_usage = 2;

std::string default_registry() {
    if (const char* env = std::getenv("LOGINT_REGISTRY"); env && *env) return env;
    return LOGINT_DEFAULT_REGISTRY;
}

// Splits "a,b" at the top-level comma.
bool split_limits(const std::string& s, std::string& a, std::string& b) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == ',' && depth == 0) {
            a = s.substr(0, i);
            b = s.substr(i + 1);
            return true;
        }
    }
    return false;
}

int run_integrate(const std::string& text, const std::string& domain, long digits) {
    logint::Precision p(digits);
    logint::Expr f = logint::parse(text);
    logint::BigReal v(p);
    if (domain == "unit") {
        v = logint::integrate_unit(f, p);
    } else if (domain == "halfline") {
        v = logint::integrate_halfline(f, p);
    } else {
        std::string a, b;
        if (!split_limits(domain, a, b)) throw logint::DomainError("--domain must be unit, halfline or a,b");
        logint::BigReal lo = logint::evaluate(logint::parse(a), p);
        std::optional<logint::BigReal> hi;
        auto trimmed = b.substr(b.find_first_not_of(' '));
        if (trimmed.rfind("inf", 0) != 0) hi = logint::evaluate(logint::parse(b), p);
        v = logint::integrate_finite(f, lo, hi, p);
    }
    std::cout << v.to_string(digits) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"High-precision evaluation and verification of logarithmic integral identities"};
    app.require_subcommand(1);

    std::string registry = default_registry();
    long digits = 30;
    auto add_digits = [&](CLI::App* sub) {
        sub->add_option("--digits,-d", digits, "significant digits (1-1000)")->check(CLI::Range(1L, 1000L));
    };

    auto* list = app.add_subcommand("list", "list registry ids and references");
    std::string list_filter;
    list->add_option("filter", list_filter, "id prefix, or 'suspect'");
    list->add_option("--registry", registry, "registry file");

    auto* verify = app.add_subcommand("verify", "verify registry identities");
    std::vector<std::string> ids;
    bool all = false;
    std::string format = "text";
    std::string filter;
    int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    verify->add_option("ids", ids, "identity ids");
    verify->add_flag("--all", all, "verify every entry");
    verify->add_option("--filter", filter, "with --all: id prefix, or 'suspect'");
    verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--workers,-j", workers, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--registry", registry, "registry file");
    add_digits(verify);

    auto* eval = app.add_subcommand("eval", "evaluate a constant expression");
    std::string expr_text;
    eval->add_option("expr", expr_text, "expression")->required();
    add_digits(eval);

    auto* integ = app.add_subcommand("integrate", "integrate an expression in x");
    std::string domain = "unit";
    integ->add_option("expr", expr_text, "integrand")->required();
    integ->add_option("--domain", domain, "unit, halfline, or a,b (b may be inf)");
    add_digits(integ);

    auto* sum = app.add_subcommand("sum", "sum a series given by a spec string");
    std::string spec_text;
    sum->add_option("spec", spec_text, "series spec, e.g. \"euler_bbp m=3 mod=6 pattern=+1,-3,+5\"")->required();
    add_digits(sum);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exit_usage;
    }

    try {
        if (*list) {
            auto entries = logint::filter_registry(logint::load_registry(registry), list_filter);
            for (const auto& e : entries) std::cout << e.id << "  " << e.ref << '\n';
            return 0;
        }
        if (*verify) {
            auto entries = logint::load_registry(registry);
            std::vector<logint::Identity> selected;
            if (all) {
                if (!ids.empty()) {
                    std::cerr << "give either ids or --all, not both\n";
                    return exit_usage;
                }
                selected = logint::filter_registry(entries, filter);
            } else {
                if (ids.empty()) {
                    std::cerr << "no ids given (use --all to verify everything)\n";
                    return exit_usage;
                }
                for (const auto& id : ids) {
                    auto it = std::find_if(entries.begin(), entries.end(),
                                           [&](const logint::Identity& e) { return e.id == id; });
                    if (it == entries.end()) {
                        std::cerr << "unknown id '" << id << "'\n";
                        return exit_usage;
                    }
                    selected.push_back(*it);
                }
            }
            auto run = logint::verify_all(selected, digits, workers);
            if (format == "json") std::cout << logint::render_json(run);
            else std::cout << logint::render_text(run, !all);
            return logint::exit_code(run);
        }
        if (*eval) {
            logint::Expr e = logint::parse(expr_text);
            if (e.has_free_variable()) throw logint::DomainError("expression depends on x; use integrate");
            std::cout << logint::evaluate(e, logint::Precision(digits)).to_string(digits) << '\n';
            return 0;
        }
        if (*integ) return run_integrate(expr_text, domain, digits);
        if (*sum) {
            auto spec = logint::parse_series_spec(spec_text);
            std::cout << logint::sum_series(spec, logint::Precision(digits)).to_string(digits) << '\n';
            return 0;
        }
    } catch (const logint::AccelerationMismatch& e) {
        std::cerr << "unconfirmed: " << e.what() << '\n';
        return 1;
    } catch (const logint::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const logint::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

#pragma once

#include "logint/expr.hpp"
#include "logint/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace logint {

enum class EntryKind { integral_unit, integral_halfline, integral_finite, series_euler_bbp, series_direct, value };
enum class ExpectedStatus { pass, suspect };

std::string_view entry_kind_name(EntryKind k);

// One line of the registry:
//   id | kind | lhs | rhs | ref | status [| note [| expect]]
// kind is integral_unit, integral_halfline, integral_finite(a,b) (b may be
// inf), series_euler_bbp, series_direct or value. For the series kinds the
// lhs column holds the series spec (without the leading "euler_bbp" for
// series_euler_bbp). expect, for suspect entries, is the abs_diff the
// harness should reproduce, to 6 significant digits, or one of "error",
// "unconfirmed" or "agree".
struct Identity {
    std::string id;
    EntryKind kind = EntryKind::value;
    std::string kind_text;
    std::string lhs_text;
    std::string rhs_text;
    std::optional<Expr> lhs;  // integrand or value expression
    std::optional<Expr> lower;
    std::optional<Expr> upper;  // integral_finite; nullopt means inf
    std::optional<SeriesSpec> series;
    std::optional<Expr> rhs;
    std::string ref;
    ExpectedStatus status = ExpectedStatus::pass;
    std::string note;
    std::string expect;
    std::size_t line = 0;
};

// Throws RegistryError (with line number) on malformed lines, duplicate ids,
// unparsable expressions or series specs, and suspect entries lacking a
// note.
std::vector<Identity> parse_registry(const std::string& text);
std::vector<Identity> load_registry(const std::string& path);

// "suspect" selects suspect entries; anything else is an id prefix. An
// empty filter selects everything.
std::vector<Identity> filter_registry(const std::vector<Identity>& all, const std::string& filter);

BigReal evaluate_lhs(const Identity& e, const Precision& p);
BigReal evaluate_rhs(const Identity& e, const Precision& p);

struct VerificationReport {
    std::string id;
    std::string kind;
    std::string ref;
    std::string status;   // pass | suspect
    std::string outcome;  // pass | fail | unconfirmed | error | reproduced | changed
    std::string lhs;      // values at the requested digits
    std::string rhs;
    std::string abs_diff;  // 6 significant digits
    long digits_agreed = 0;
    bool pass = false;
    std::string note;
    std::string error;
    long elapsed_ms = 0;
};

struct VerificationSummary {
    long total = 0;
    long passed = 0;
    long failed = 0;
    long unconfirmed = 0;
    long suspect = 0;
    long suspect_reproduced = 0;
};

struct VerificationRun {
    long digits = 0;
    std::vector<VerificationReport> reports;  // sorted by id
    VerificationSummary summary;
};

// Evaluates both sides at d and at d + 10 digits. digits_agreed is the
// agreement at d, clamped by how far each side moved between the two
// precisions; pass <=> digits_agreed >= d - 5. Evaluation errors are
// recorded in the report.
VerificationReport verify(const Identity& e, long digits);
VerificationRun verify_all(const std::vector<Identity>& entries, long digits, int workers);

std::string render_text(const VerificationRun& run, bool show_values);
std::string render_json(const VerificationRun& run);

// 0 when every non-suspect entry passed, 1 otherwise.
int exit_code(const VerificationRun& run);

}  // namespace logint

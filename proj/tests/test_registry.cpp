#include "doctest.h"
#include "coverage.hpp"

#include "logint/errors.hpp"
#include "logint/registry.hpp"

#include "json.hpp"

#include <algorithm>

using namespace logint;

namespace {

const std::vector<Identity>& shipped() {
    static const std::vector<Identity> all = load_registry(LOGINT_DEFAULT_REGISTRY);
    return all;
}

const Identity& entry(const std::string& id) {
    const auto& all = shipped();
    auto it = std::find_if(all.begin(), all.end(), [&](const Identity& e) { return e.id == id; });
    REQUIRE(it != all.end());
    return *it;
}

std::size_t registry_error_line(const std::string& text) {
    try {
        parse_registry(text);
    } catch (const RegistryError& e) {
        return e.line();
    }
    FAIL("expected a registry error");
    return 0;
}

const char* three_entries =
    "# comment\n"
    "ex08 | integral_unit | log(x^6+1)/(x^2+1) | pi/2*log(6) - 3*G | Eq 2 | pass\n"
    "\n"
    "h1 | integral_halfline | 1/(x^2+1) | pi/2 | half line | pass\n"
    "s1 | series_euler_bbp | mod=2 pattern=+1 | pi/2*log(2) - G | sum | suspect | a note | agree\n";

}  // namespace

TEST_CASE("registry parsing") {
    auto entries = parse_registry(three_entries);
    REQUIRE(entries.size() == 3);
    const Identity& e = entries[0];
    CHECK(e.id == "ex08");
    CHECK(e.kind == EntryKind::integral_unit);
    REQUIRE(e.lhs.has_value());
    CHECK(e.lhs->has_free_variable());
    CHECK(e.ref == "Eq 2");
    CHECK(e.line == 2);
    CHECK(entries[1].kind == EntryKind::integral_halfline);
    CHECK(entries[2].status == ExpectedStatus::suspect);
    CHECK(entries[2].note == "a note");
    CHECK(entries[2].expect == "agree");
    REQUIRE(entries[2].series.has_value());

    auto fin = parse_registry("f | integral_finite(1,inf) | log(x)/(x^2+1) | G | r | pass\n");
    CHECK(fin[0].kind == EntryKind::integral_finite);
    CHECK_FALSE(fin[0].upper.has_value());
}

TEST_CASE("registry errors name the line") {
    std::string base = "a | value | 1 | 1 | r | pass\n";
    CHECK(registry_error_line(base + "b | value | 1 | 1 | r\n") == 2);
    CHECK(registry_error_line(base + "a | value | 2 | 2 | r | pass\n") == 2);
    CHECK(registry_error_line(base + "\nc | integral_moon | x | 1 | r | pass\n") == 3);
    CHECK(registry_error_line(base + "d | value | 1 | 1 | r | suspect\n") == 2);
    CHECK(registry_error_line(base + "e | value | 1 | 1 | r | suspect | a note\n") == 2);
    CHECK(registry_error_line("f | value | log(2 | 1 | r | pass\n") == 1);
    CHECK(registry_error_line("g | series_direct | central_binom harmonic=H7n | 1 | r | pass\n") == 1);
    CHECK(registry_error_line("h | value | thm24(99) | 1 | r | pass\n") == 1);
    CHECK(registry_error_line("i | value | 1 | 1 | r | maybe\n") == 1);
    try {
        parse_registry(base + "a | value | 2 | 2 | r | pass\n");
    } catch (const RegistryError& e) {
        CHECK(std::string(e.what()).find("'a'") != std::string::npos);
    }
    CHECK_THROWS_AS(load_registry("/nonexistent/registry.txt"), Error);
}

TEST_CASE("filtering") {
    const auto& all = shipped();
    CHECK(all.size() >= 60);
    CHECK(filter_registry(all, "").size() == all.size());
    auto thm24 = filter_registry(all, "thm24_");
    CHECK(thm24.size() == 8);
    auto suspects = filter_registry(all, "suspect");
    CHECK(suspects.size() >= 8);
    for (const auto& e : suspects) {
        CAPTURE(e.id);
        CHECK(e.status == ExpectedStatus::suspect);
        CHECK_FALSE(e.note.empty());
        CHECK_FALSE(e.expect.empty());
    }
}

TEST_CASE("registry coverage") {
    auto gaps = testing::coverage_gaps(shipped());
    for (const auto& g : gaps) CAPTURE(g);
    CHECK(gaps.empty());
    for (const auto& g : gaps) MESSAGE(g);
}

TEST_CASE("single verification") {
    VerificationReport r = verify(entry("ex01"), 30);
    CHECK(r.pass);
    CHECK(r.outcome == "pass");
    CHECK(r.digits_agreed >= 30);
    CHECK(r.lhs == "0.172827450974582050195740934186");

    VerificationReport e70 = verify(entry("eq70_intermediate"), 30);
    CHECK_FALSE(e70.abs_diff.empty());
    CHECK(e70.pass);

    VerificationReport bad = verify(entry("ex06_printed"), 30);
    CHECK_FALSE(bad.error.empty());
    CHECK(bad.outcome == "reproduced");

    // accelerators disagree, but the gap is still measured from the primary estimate
    VerificationReport loose = verify(entry("eq77"), 30);
    CHECK(loose.outcome == "reproduced");
    CHECK_FALSE(loose.pass);
    CHECK(loose.abs_diff == "0.0676694");
    CHECK(loose.error.find("disagree") != std::string::npos);

    VerificationReport half = verify(entry("ex19"), 30);
    CHECK(half.pass);
    CHECK(half.digits_agreed >= 25);
}

TEST_CASE("verify_all on a family") {
    auto run = verify_all(filter_registry(shipped(), "thm24_"), 30, 4);
    REQUIRE(run.reports.size() == 8);
    CHECK(run.summary.passed == 8);
    CHECK(run.summary.failed == 0);
    CHECK(exit_code(run) == 0);
    CHECK(std::is_sorted(run.reports.begin(), run.reports.end(),
                         [](const auto& a, const auto& b) { return a.id < b.id; }));

    auto doc = nlohmann::json::parse(render_json(run));
    CHECK(doc.at("summary").at("total") == 8);
    CHECK(doc.at("entries").size() == 8);
    for (const auto& rep : doc.at("entries")) {
        for (const char* key : {"id", "lhs", "rhs", "abs_diff", "digits_agreed", "pass", "note", "elapsed_ms"})
            CHECK(rep.contains(key));
    }
    std::string text = render_text(run, false);
    CHECK(text.find("thm24_m5") != std::string::npos);
}

TEST_CASE("precision monotonicity") {
    std::vector<Identity> subset;
    for (const char* id : {"eq01", "ex05", "ex12", "ex19", "thm24_m3", "thm27_q2", "ex25_m3", "eq68", "eq82", "ex17"})
        subset.push_back(entry(id));
    auto lo = verify_all(subset, 30, 4);
    auto hi = verify_all(subset, 50, 4);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        CAPTURE(lo.reports[i].id);
        REQUIRE(lo.reports[i].pass);
        CHECK(hi.reports[i].pass);
        CHECK(hi.reports[i].digits_agreed >= lo.reports[i].digits_agreed - 2);
    }
}

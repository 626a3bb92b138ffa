#include "logint/errors.hpp"
#include "logint/registry.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace logint {

namespace {

void judge_suspect(VerificationReport& r, const Identity& e) {
    bool reproduced;
    if (e.expect == "error") reproduced = r.outcome == "error";
    else if (e.expect == "unconfirmed") reproduced = r.outcome == "unconfirmed";
    else if (e.expect == "agree") reproduced = r.pass;
    else reproduced = r.error.empty() && r.abs_diff == e.expect;
    r.outcome = reproduced ? "reproduced" : "changed";
}

}  // namespace

VerificationReport verify(const Identity& e, long digits) {
    if (digits < 1) throw DomainError("digits must be positive");
    VerificationReport r;
    r.id = e.id;
    r.kind = e.kind_text;
    r.ref = e.ref;
    r.status = e.status == ExpectedStatus::suspect ? "suspect" : "pass";
    r.note = e.note;
    auto start = std::chrono::steady_clock::now();
    try {
        Precision p1(digits);
        Precision p2(digits + 10);
        BigReal l1 = evaluate_lhs(e, p1);
        BigReal r1 = evaluate_rhs(e, p1);
        BigReal l2 = evaluate_lhs(e, p2);
        BigReal r2 = evaluate_rhs(e, p2);
        BigReal diff = abs(l1 - r1);
        r.lhs = l1.to_string(digits);
        r.rhs = r1.to_string(digits);
        r.abs_diff = diff.to_string(6);
        long agreed = digits_agreed(l1, r1);
        long stable = std::min(digits_agreed(l1, l2.at(p1)), digits_agreed(r1, r2.at(p1)));
        r.digits_agreed = std::min(agreed, stable);
        r.pass = r.digits_agreed >= digits - 5;
        r.outcome = r.pass ? "pass" : "fail";
    } catch (const AccelerationMismatch& err) {
        r.outcome = "unconfirmed";
        r.error = err.what();
        // keep the primary estimate so the gap is still measured
        try {
            Precision p1(digits);
            BigReal l1 = BigReal::parse(err.primary(), p1);
            BigReal r1 = evaluate_rhs(e, p1);
            r.lhs = l1.to_string(digits);
            r.rhs = r1.to_string(digits);
            r.abs_diff = abs(l1 - r1).to_string(6);
        } catch (const Error&) {
        }
    } catch (const Error& err) {
        r.outcome = "error";
        r.error = err.what();
    }
    r.elapsed_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    if (e.status == ExpectedStatus::suspect) judge_suspect(r, e);
    return r;
}

VerificationRun verify_all(const std::vector<Identity>& entries, long digits, int workers) {
    VerificationRun run;
    run.digits = digits;
    std::vector<const Identity*> order;
    for (const auto& e : entries) order.push_back(&e);
    std::sort(order.begin(), order.end(), [](const Identity* a, const Identity* b) { return a->id < b->id; });
    run.reports.resize(order.size());

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < order.size(); i = next++) run.reports[i] = verify(*order[i], digits);
    };
    int n = std::max(1, std::min<int>(workers, static_cast<int>(order.size())));
    std::vector<std::thread> pool;
    for (int i = 1; i < n; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    auto& s = run.summary;
    for (const auto& r : run.reports) {
        ++s.total;
        if (r.status == "suspect") {
            ++s.suspect;
            if (r.outcome == "reproduced") ++s.suspect_reproduced;
        } else if (r.outcome == "pass") {
            ++s.passed;
        } else if (r.outcome == "unconfirmed") {
            ++s.unconfirmed;
        } else {
            ++s.failed;
        }
    }
    return run;
}

int exit_code(const VerificationRun& run) {
    return run.summary.failed == 0 && run.summary.unconfirmed == 0 ? 0 : 1;
}

}  // namespace logint

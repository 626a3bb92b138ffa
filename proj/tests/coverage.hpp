#pragma once

#include "logint/registry.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

namespace testing {

// Registry points that must be present, grouped by what they cover.
inline const std::vector<std::string>& required_ids() {
    static const std::vector<std::string> ids = {
        "eq01", "eq02", "eq03",
        "cor1_q2", "cor1_q3", "cor1_q4", "cor1_q5_2",
        "thm24_m1", "thm24_m2", "thm24_m3", "thm24_m4", "thm24_m5", "thm24_m6", "thm24_m7", "thm24_m8",
        "thm25_m1", "thm25_m2", "thm25_m3", "thm25_m4", "thm25_m5", "thm25_m6", "thm25_m7", "thm25_m8",
        "thm26_m1", "thm26_m2", "thm26_m3", "thm26_m4", "thm26_m5", "thm26_m6", "thm26_m7", "thm26_m8",
        "thm27_q1", "thm27_q2", "thm27_q3", "thm27_q2_3", "thm27_q5_2",
        "thm28_q1", "thm28_q2", "thm28_q3", "thm28_q2_3", "thm28_q5_2",
        "thm29_m1", "thm29_m3", "thm29_m5",
        "thm210_m1", "thm210_m2", "thm210_m3", "thm210_m4",
        "thm211_m1", "thm211_m2", "thm211_m3", "thm211_m4",
        "ex25_m3", "ex25_m5", "ex26_m1", "ex27_m1",
        "eq53_x1_8", "eq54", "eq55", "eq56",
        "eq58", "eq59_partial", "eq60", "eq61", "eq62_a", "eq63", "eq64_x1_5", "eq65", "eq66",
        "eq67", "eq68", "eq69", "eq70_intermediate", "eq71", "eq72_t1", "eq73", "eq74", "eq75",
        "ex17", "eq80", "eq81", "eq82",
    };
    return ids;
}

// Families that need at least three parameter points, by id prefix.
inline const std::vector<std::vector<std::string>>& family_prefixes() {
    static const std::vector<std::vector<std::string>> f = {
        {"thm1_", "cor1_"}, {"thm24_m"}, {"thm25_m"}, {"thm26_m"}, {"thm27_q"}, {"thm28_q"},  {"thm29_m"},
        {"thm210_m"},       {"thm211_m"}, {"thm31_"}, {"thm32_"},  {"thm33_"},  {"thm34_q"},
    };
    return f;
}

// Human-readable coverage gaps; empty when the registry is complete.
inline std::vector<std::string> coverage_gaps(const std::vector<logint::Identity>& entries) {
    std::vector<std::string> gaps;
    auto has_id = [&](const std::string& id) {
        return std::any_of(entries.begin(), entries.end(), [&](const auto& e) { return e.id == id; });
    };
    for (const auto& id : required_ids())
        if (!has_id(id)) gaps.push_back("missing " + id);
    for (int k = 1; k <= 27; ++k) {
        char prefix[8];
        std::snprintf(prefix, sizeof prefix, "ex%02d", k);
        bool found = std::any_of(entries.begin(), entries.end(), [&](const auto& e) {
            return e.id.rfind(prefix, 0) == 0 && e.status == logint::ExpectedStatus::pass;
        });
        if (!found) gaps.push_back(std::string("no entry for ") + prefix);
    }
    for (const auto& prefixes : family_prefixes()) {
        long n = std::count_if(entries.begin(), entries.end(), [&](const auto& e) {
            if (e.status != logint::ExpectedStatus::pass) return false;
            return std::any_of(prefixes.begin(), prefixes.end(),
                               [&](const std::string& p) { return e.id.rfind(p, 0) == 0; });
        });
        if (n < 3) gaps.push_back("fewer than 3 points for " + prefixes.front());
    }
    return gaps;
}

}  // namespace testing

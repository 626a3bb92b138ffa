#include "logint/registry.hpp"

#include "json.hpp"

#include <iomanip>
#include <sstream>

namespace logint {

std::string render_text(const VerificationRun& run, bool show_values) {
    std::ostringstream out;
    std::size_t width = 4;
    for (const auto& r : run.reports) width = std::max(width, r.id.size());
    out << std::left << std::setw(static_cast<int>(width)) << "id"
        << "  " << std::setw(11) << "outcome" << "  " << std::setw(6) << "digits" << "  " << std::setw(14)
        << "abs_diff" << "  ms\n";
    for (const auto& r : run.reports) {
        out << std::left << std::setw(static_cast<int>(width)) << r.id << "  " << std::setw(11) << r.outcome << "  "
            << std::setw(6) << r.digits_agreed << "  " << std::setw(14) << (r.abs_diff.empty() ? "-" : r.abs_diff)
            << "  " << r.elapsed_ms << '\n';
        if (show_values && !r.lhs.empty()) {
            out << "    lhs = " << r.lhs << '\n';
            out << "    rhs = " << r.rhs << '\n';
        }
        if (!r.error.empty()) out << "    error: " << r.error << '\n';
        if (!r.note.empty() && (show_values || r.status == "suspect")) out << "    note: " << r.note << '\n';
    }
    const auto& s = run.summary;
    out << "total " << s.total << ", passed " << s.passed << ", failed " << s.failed << ", unconfirmed "
        << s.unconfirmed << ", suspect " << s.suspect << " (" << s.suspect_reproduced << " reproduced) at "
        << run.digits << " digits\n";
    return out.str();
}

std::string render_json(const VerificationRun& run) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["digits"] = run.digits;
    ordered_json entries = ordered_json::array();
    for (const auto& r : run.reports) {
        ordered_json j;
        j["id"] = r.id;
        j["kind"] = r.kind;
        j["ref"] = r.ref;
        j["status"] = r.status;
        j["outcome"] = r.outcome;
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["abs_diff"] = r.abs_diff;
        j["digits_agreed"] = r.digits_agreed;
        j["pass"] = r.pass;
        j["note"] = r.note;
        if (!r.error.empty()) j["error"] = r.error;
        j["elapsed_ms"] = r.elapsed_ms;
        entries.push_back(std::move(j));
    }
    doc["entries"] = std::move(entries);
    const auto& s = run.summary;
    doc["summary"] = {{"total", s.total},     {"passed", s.passed},   {"failed", s.failed},
                      {"unconfirmed", s.unconfirmed}, {"suspect", s.suspect}, {"suspect_reproduced", s.suspect_reproduced}};
    return doc.dump(2) + "\n";
}

}  // namespace logint

#include <grouplab/report.hpp>

#include <nlohmann/json.hpp>

#include <sstream>

namespace grouplab {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::hypothesis_not_met: return "hypothesis-not-met";
        case Verdict::capability_skipped: return "capability-skipped";
    }
    return "?";
}

std::string report_to_json_line(const DivisibilityReport& r) {
    nlohmann::ordered_json j;
    j["claim"] = r.claim;
    j["group_label"] = r.group_label;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    j["hypothesis_met"] = r.hypothesis_met;
    j["observed"] = r.observed;
    j["required"] = {{"kind", r.required.kind == Requirement::Kind::modulus ? "modulus"
                                                                            : "lower_bound"},
                     {"value", r.required.value}};
    j["verdict"] = to_string(r.verdict);
    j["note"] = r.note;
    return j.dump();
}

std::string report_csv_header() {
    return "claim,group_label,params,hypothesis_met,observed,required_kind,required_value,verdict,note";
}

std::string report_to_csv_row(const DivisibilityReport& r) {
    std::ostringstream os;
    os << r.claim << "," << r.group_label << ",";
    bool first = true;
    for (const auto& [k, v] : r.params) {
        if (!first) os << ';';
        first = false;
        os << k << '=' << v;
    }
    os << "," << (r.hypothesis_met ? "true" : "false") << "," << r.observed << ","
       << (r.required.kind == Requirement::Kind::modulus ? "modulus" : "lower_bound") << ","
       << r.required.value << "," << to_string(r.verdict) << "," << r.note;
    return os.str();
}

std::string verify_line_to_json(const VerifyLine& v) {
    nlohmann::ordered_json j;
    j["check"] = v.check;
    j["subject"] = v.subject;
    j["verdict"] = to_string(v.verdict);
    j["detail"] = v.detail;
    return j.dump();
}

}  // namespace grouplab

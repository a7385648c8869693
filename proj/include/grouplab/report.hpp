#pragma once

#include <grouplab/numeric.hpp>

#include <map>
#include <string>
#include <vector>

namespace grouplab {

enum class Verdict { pass, fail, hypothesis_not_met, capability_skipped };

std::string to_string(Verdict v);

struct Requirement {
    enum class Kind { modulus, lower_bound } kind = Kind::modulus;
    i64 value = 1;

    bool satisfied_by(i64 observed) const {
        return kind == Kind::modulus ? observed % value == 0 : observed >= value;
    }
};

struct DivisibilityReport {
    std::string claim;
    std::string group_label;
    std::map<std::string, i64> params;
    bool hypothesis_met = false;
    i64 observed = 0;
    Requirement required;
    Verdict verdict = Verdict::hypothesis_not_met;
    std::string note;
};

std::string report_to_json_line(const DivisibilityReport& r);
std::string report_csv_header();
std::string report_to_csv_row(const DivisibilityReport& r);

// A single verifier check (psi-rank and bijection suites).
struct VerifyLine {
    std::string check;
    std::string subject;
    Verdict verdict = Verdict::pass;
    std::string detail;
};

std::string verify_line_to_json(const VerifyLine& v);

// Failures are fail verdicts; hypothesis-not-met and capability-skipped do
// not count (capability-skipped surfaces as a warning at the CLI).
template <typename Rows>
int count_failures(const Rows& rows) {
    int failures = 0;
    for (const auto& r : rows)
        if (r.verdict == Verdict::fail) ++failures;
    return failures;
}

}  // namespace grouplab

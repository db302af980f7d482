#pragma once

#include <string>
#include <vector>

#include "grasschar/catalog.hpp"

namespace grasschar {

// One verification check: a recomputed quantity against its recorded value,
// with a citation describing the mathematical fact being checked.
struct CheckResult {
    enum class Status { pass, fail, skipped };

    std::string id;
    std::string citation;
    std::string expected;
    std::string computed;
    Status status = Status::skipped;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    int passed = 0, failed = 0, skipped = 0;
    bool all_passed() const { return failed == 0; }
};

// Runs the full verification suite against a catalog.  `filter` restricts to
// checks whose id contains the pattern as a substring (empty = run all).
VerifyReport run_verification(const Catalog& cat, const std::string& filter = "");

// Human-readable table, one line per check plus a summary line.
std::string render_report(const VerifyReport& r);

// JSON document (schema: {checks: [...], summary: {...}, generated_at}).
// Deterministic for a fixed catalog except for the timestamp field.
std::string report_json(const VerifyReport& r);

} // namespace grasschar

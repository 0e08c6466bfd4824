#pragma once

// Named regression checks: every table row and worked example the library is
// supposed to reproduce, packaged as callable units with stable ids of the
// form "group/name".  The CLI paper-check subcommand and the acceptance
// runner both drive this registry; ids are canonical, so filtering by prefix
// ("tables", "ex5_4", ...) selects a well-defined slice.

#include <functional>
#include <string>
#include <vector>

namespace satcr::chk {

struct CheckResult {
    bool pass = false;
    std::string expected; // short human-readable payloads, not full dumps
    std::string computed;
};

struct Check {
    std::string id;
    int criterion = 0;  // acceptance criterion this check belongs to (1..14)
    double budget_s = 0; // soft time budget inherited from the criterion
    bool big = false;    // skipped unless big jobs are enabled
    std::function<CheckResult()> fn;
};

// registry sorted by id
const std::vector<Check>& all_checks();

struct CheckReport {
    std::string id;
    int criterion = 0;
    std::string status; // "pass" | "fail" | "skipped"
    std::string expected;
    std::string computed;
    double ms = 0;
};

// Runs every check whose id starts with `filter` (empty matches all) on a
// small worker pool; the report is ordered by id regardless of scheduling.
// Checks marked big are reported as skipped unless include_big; a check that
// throws is reported as failed with the error text in `computed`.
std::vector<CheckReport> run_checks(const std::string& filter, bool include_big,
                                    int threads = 4);

} // namespace satcr::chk

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace cglab {

enum class VerifyLevel { fast, full };

VerifyLevel parse_verify_level(const std::string& name); // throws on junk

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
    nlohmann::json metrics;
};

/// Runs the acceptance checks at or below `level` (fast: 1,2,3,4,7,8;
/// full adds the long decay-law and convergence runs 5 and 6).
std::vector<CriterionResult> run_acceptance(VerifyLevel level);

/// One "PASS criterion N (name): detail" line per criterion.
void print_results(std::ostream& os, const std::vector<CriterionResult>& results);

nlohmann::json results_json(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace cglab

#pragma once

#include <string>
#include <vector>

namespace semiwell::validate {

// One acceptance criterion, as run: measured detail plus the per-subcheck
// deviations (|measured - expected|, or margin overshoots) for reporting.
struct CriterionResult {
    int id = 0;
    std::string tag;
    bool pass = false;
    std::string detail;
    std::vector<double> deltas;
};

// Tags in criterion order (index i -> criterion i+1).
const std::vector<std::string>& criterion_tags();

// Run the acceptance criteria; `only` restricts to a single tag ("" = all).
// Unknown tags yield an empty list.
std::vector<CriterionResult> run(const std::string& only = "");

}  // namespace semiwell::validate

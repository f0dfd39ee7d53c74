#pragma once

#include <string>
#include <vector>

namespace zerogeom {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // failure witness, or brief statistics when passing
    double seconds = 0.0;
};

// Runs the thirteen acceptance criteria in order and reports one result per
// criterion. fast_subset shrinks the sampling sizes so the battery finishes
// in interactive time; the full battery uses the pinned sizes and tolerances.
// jobs bounds worker threads for the embarrassingly parallel batches. All
// randomness derives from fixed seeds, so results are reproducible.
std::vector<CriterionResult> run_acceptance(bool fast_subset, unsigned jobs);

}  // namespace zerogeom

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace repglt {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
    double limit_seconds = 0.0;
};

// Runs the acceptance criteria (all of them, or the listed subset) and
// reports one result per criterion. Deterministic for a fixed seed.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 1, const std::vector<int>& only = {});

std::string acceptance_table(const std::vector<CriterionResult>& results);

} // namespace repglt

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace madelung {

struct CheckResult {
    std::string name;
    bool passed;
    double value;
    double threshold;
    std::string comparison;  // how value relates to threshold when passing, e.g. "<=" or ">="
};

// Fast self-check of the main quantitative relations; used by `verify`.
std::vector<CheckResult> run_verification(std::uint64_t seed);

}  // namespace madelung

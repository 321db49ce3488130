#pragma once

#include <string>
#include <vector>

#include "rgt/enumerate.hpp"

namespace rgt {

/// One row of the reproduction table.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Recompute every published value the engine is pinned to and return one
/// pass/fail row per criterion. `threads` feeds the enumeration commands.
std::vector<CriterionResult> run_acceptance_criteria(unsigned threads = 1);

}  // namespace rgt

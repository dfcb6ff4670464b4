#pragma once

#include <string>
#include <vector>

#include "otto/io.hpp"

namespace otto::verify {

/// One row of the verdict table. `measured` is compared against `tolerance`
/// with <= unless the property is a violation count, in which case both are counts.
struct PropertyCheck {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

std::vector<PropertyCheck> run_all(const io::RunConfig& cfg);

bool all_passed(const std::vector<PropertyCheck>& checks);

}  // namespace otto::verify

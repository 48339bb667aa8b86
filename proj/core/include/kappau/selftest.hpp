#pragma once

#include <string>
#include <vector>

namespace kappau {

// One smoke check with a human-readable verdict.  The suite is meant to run
// in about a second and touch every module; the full test suites live in the
// test binaries.
struct SelfCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

std::vector<SelfCheck> run_selftests();

}  // namespace kappau

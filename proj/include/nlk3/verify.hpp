#pragma once

// The verification suite: ten numbered checks with exact expected values,
// runnable one at a time or together (CLI `verify`, acceptance binary).

#include <string>
#include <vector>

namespace nlk3 {

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool pass = true;
    std::string detail;  // failure diagnostics, empty when passing
};

int criteria_count();

// run one criterion (1-based)
CheckResult run_criterion(int k);

// suite names: all, bpsk3, modforms, bridge, mirror, picrank, qseries,
// lattice, properties
std::vector<CheckResult> run_suite(const std::string& which);

}  // namespace nlk3

#pragma once

#include <string>
#include <vector>

namespace hetero {

/// Outcome of a sampling-based validation pass. `passed` refers to hard
/// invariants only; warnings record soft adequacy checks that degrade the
/// diagnostics but do not invalidate a run.
struct ValidationReport {
    struct Violation {
        std::string what;
        double x = 0.0;              // abscissa, when the check is on the line
        std::vector<double> point;   // state-space point, when applicable
    };

    bool passed = true;
    std::vector<Violation> violations;
    std::vector<std::string> warnings;
    std::vector<std::string> checks;   // one line per check performed

    void note(std::string line) { checks.push_back(std::move(line)); }
    void warn(std::string line) { warnings.push_back(std::move(line)); }
};

} // namespace hetero

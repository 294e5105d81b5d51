#pragma once

#include <string>
#include <vector>

namespace ghzsim {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // failure reason or a one-line summary
};

// Invariant suite behind the `validate` subcommand.  Structural checks run at
// the requested atom count; the dynamical cross-checks use the three-atom
// defaults with the given integration step.
std::vector<CheckResult> run_validation(int n_atoms, double dt);

} // namespace ghzsim

#pragma once

// Invariant suites behind the `verify` subcommand.  Each check evaluates one
// library invariant over a deterministic grid or a seeded random ensemble and
// reports its worst residual against the pinned tolerance.  The fast level
// uses reduced grids; the full level runs the oracle comparisons at chain
// half-length 50 d.

#include <cstdint>
#include <string>
#include <vector>

namespace crw::verify {

enum class Level { fast, full };

struct CheckResult {
    std::string name;
    bool passed = false;
    double worst_residual = 0.0;
    double tolerance = 0.0;
    std::string note;
};

std::vector<CheckResult> run_all(Level level, std::uint64_t seed = 20260808u);

// True when every check passed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace crw::verify

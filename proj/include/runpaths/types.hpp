#pragma once

#include <stdexcept>

namespace runpaths {

// Step direction of a forbidden run. In ballot-path coordinates East is the
// step toward the diagonal (the Dyck down step) and North is the step away
// from it (the Dyck up step).
enum class Dir { East, North };

// "No r consecutive steps in `dir`". r = 2 is the fully alternating case.
struct RunRestriction {
    Dir dir;
    int r;

    RunRestriction(Dir d, int run_bound) : dir(d), r(run_bound) {
        if (r < 2) throw std::invalid_argument("RunRestriction: r must be >= 2");
    }
};

}  // namespace runpaths

#pragma once

#include <stdexcept>

namespace afhos {

namespace constants {

// Euler-Mascheroni constant, 0.5772156649015328606...
inline constexpr double euler_gamma = 0.5772156649015328606;

}  // namespace constants

/// Accuracy request shared by all special-function evaluations.
struct AccuracyTarget {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol >= 0.0))
            throw std::invalid_argument("AccuracyTarget: rel_tol must be > 0 and abs_tol >= 0");
    }
};

}  // namespace afhos

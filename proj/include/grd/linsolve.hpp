#pragma once

#include <optional>
#include <vector>

#include "grd/rational.hpp"

namespace grd {

struct LinearSolution {
    std::vector<Rational> values;
    std::size_t free_count = 0;  // variables zeroed after reduced-echelon elimination
};

// Exact Gauss-Jordan over Q. Returns one exact solution of rows * x = rhs with
// free variables set to 0, or nullopt when the system is infeasible.
std::optional<LinearSolution> solve_linear_exact(std::vector<std::vector<Rational>> rows,
                                                 std::vector<Rational> rhs);

}  // namespace grd

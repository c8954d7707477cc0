#ifndef ZECC_SIMPLEX_HPP
#define ZECC_SIMPLEX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "zecc/rational.hpp"

namespace zecc {

// Sparse equality constraint sum_j coeff_j * x_{col_j} = rhs over x >= 0.
struct LinearConstraint {
    std::vector<std::pair<int, Rational>> terms;
    Rational rhs;
};

// Decides feasibility of {x >= 0 : A x = b} by phase-one simplex on exact
// rationals, Bland's rule (termination guaranteed). Returns a feasible
// point, or nullopt when the system is infeasible. The verdict is exact.
std::optional<std::vector<Rational>> exact_lp_feasible_point(
    int variable_count, const std::vector<LinearConstraint>& constraints);

}  // namespace zecc

#endif  // ZECC_SIMPLEX_HPP

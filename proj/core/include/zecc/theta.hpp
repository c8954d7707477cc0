#ifndef ZECC_THETA_HPP
#define ZECC_THETA_HPP

#include <Eigen/Dense>

#include "zecc/graph.hpp"

namespace zecc {

inline constexpr int kDefaultThetaSizeCap = 400;
inline constexpr double kDefaultThetaTol = 1e-7;

struct ThetaResult {
    double value = 0.0;            // dual objective; within duality_gap of sum(X)
    Eigen::MatrixXd primal_matrix; // feasible primal certificate X
    double duality_gap = 0.0;
    int iterations = 0;
};

struct ThetaOptions {
    double tol = kDefaultThetaTol;
    bool complement_first = false;  // solve on complement(g) instead of g
    int size_cap = kDefaultThetaSizeCap;
    int iteration_cap = 200;
};

// Lovasz theta via a dense primal-dual interior-point method on
//   max <J,X>  s.t.  tr X = 1,  X_uv = 0 on edges,  X psd.
// Deterministic: fixed scaled-identity start, no randomized pivoting.
ThetaResult lovasz_theta(const Graph& g, const ThetaOptions& options = {});

}  // namespace zecc

#endif  // ZECC_THETA_HPP

#include "zecc/theta.hpp"

#include <algorithm>
#include <cmath>

#include "zecc/errors.hpp"

namespace zecc {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Constraint operator A(X) = (X_{u1v1}+X_{v1u1}, ..., tr X) for the edge
// list plus the trace row.
VectorXd apply_constraints(const MatrixXd& x, const std::vector<std::pair<int, int>>& edges) {
    VectorXd out(edges.size() + 1);
    for (std::size_t p = 0; p < edges.size(); ++p)
        out(p) = x(edges[p].first, edges[p].second) + x(edges[p].second, edges[p].first);
    out(edges.size()) = x.trace();
    return out;
}

MatrixXd adjoint_constraints(const VectorXd& y, const std::vector<std::pair<int, int>>& edges,
                             int n) {
    MatrixXd out = MatrixXd::Identity(n, n) * y(edges.size());
    for (std::size_t p = 0; p < edges.size(); ++p) {
        out(edges[p].first, edges[p].second) += y(p);
        out(edges[p].second, edges[p].first) += y(p);
    }
    return out;
}

// Largest step in [0,1] keeping base + alpha * dir positive definite,
// by Cholesky backtracking. Deterministic.
double psd_step(const MatrixXd& base, const MatrixXd& dir) {
    double alpha = 1.0;
    for (int tries = 0; tries < 60; ++tries) {
        Eigen::LLT<MatrixXd> llt(base + alpha * dir);
        if (llt.info() == Eigen::Success) {
            return tries == 0 ? 1.0 : 0.95 * alpha;
        }
        alpha *= 0.8;
    }
    return 0.0;
}

// Keeps the primal iterate exactly feasible: edge entries to zero, unit
// trace, symmetric.
void project_feasible(MatrixXd& x, const std::vector<std::pair<int, int>>& edges) {
    x = ((x + x.transpose()) / 2.0).eval();
    for (auto [u, v] : edges) {
        x(u, v) = 0.0;
        x(v, u) = 0.0;
    }
    double tr = x.trace();
    if (tr > 0) x /= tr;
}

ThetaResult solve_theta(const Graph& g, const ThetaOptions& options) {
    const int n = g.vertex_count();
    const auto edges = g.edges();
    const std::size_t m1 = edges.size();
    const std::size_t m = m1 + 1;

    VectorXd b = VectorXd::Zero(m);
    b(m1) = 1.0;

    MatrixXd x = MatrixXd::Identity(n, n) / n;
    VectorXd y = VectorXd::Zero(m);
    y(m1) = n + 1;
    MatrixXd z = (n + 1.0) * MatrixXd::Identity(n, n) - MatrixXd::Ones(n, n);

    double phi = b.dot(y);  // dual objective
    double psi = x.sum();   // primal objective

    ThetaResult result;
    for (int iter = 1; iter <= options.iteration_cap; ++iter) {
        double gap = phi - psi;
        if (gap <= options.tol * std::max(1.0, std::abs(phi))) {
            result.value = phi;
            result.primal_matrix = x;
            result.duality_gap = gap;
            result.iterations = iter - 1;
            return result;
        }

        Eigen::LLT<MatrixXd> z_llt(z);
        if (z_llt.info() != Eigen::Success)
            throw SolverError("dual iterate lost positive definiteness", gap);
        MatrixXd zi = z_llt.solve(MatrixXd::Identity(n, n));
        zi = ((zi + zi.transpose()) / 2.0).eval();

        // Schur complement M(y) = A(Z^{-1} A^T(y) X).
        MatrixXd schur(m, m);
        for (std::size_t p = 0; p < m1; ++p) {
            auto [i, j] = edges[p];
            for (std::size_t q = p; q < m1; ++q) {
                auto [k, l] = edges[q];
                double value = zi(i, k) * x(j, l) + zi(j, k) * x(i, l) + zi(i, l) * x(j, k) +
                               zi(j, l) * x(i, k);
                schur(p, q) = value;
                schur(q, p) = value;
            }
            double edge_trace = 0.0;
            for (int r = 0; r < n; ++r) edge_trace += zi(r, i) * x(r, j) + zi(r, j) * x(r, i);
            schur(p, m1) = edge_trace;
            schur(m1, p) = edge_trace;
        }
        schur(m1, m1) = zi.cwiseProduct(x).sum();

        VectorXd rhs(m);
        for (std::size_t p = 0; p < m1; ++p) rhs(p) = 2.0 * zi(edges[p].first, edges[p].second);
        rhs(m1) = zi.trace();

        Eigen::LDLT<MatrixXd> schur_ldlt(schur);
        if (schur_ldlt.info() != Eigen::Success)
            throw SolverError("Schur system factorization failed", gap);

        // Predictor: affine direction aiming at mu = 0.
        VectorXd dy_aff = schur_ldlt.solve(-b);
        MatrixXd dz_aff = adjoint_constraints(dy_aff, edges, n);
        MatrixXd dx_aff = -x - zi * dz_aff * x;
        dx_aff = ((dx_aff + dx_aff.transpose()) / 2.0).eval();
        double ap_aff = psd_step(x, dx_aff);
        double ad_aff = psd_step(z, dz_aff);
        double gap_aff = (z + ad_aff * dz_aff).cwiseProduct(x + ap_aff * dx_aff).sum();
        gap_aff = std::max(gap_aff, 0.0);
        double current = z.cwiseProduct(x).sum();
        double sigma = current > 0 ? std::pow(gap_aff / current, 3) : 0.1;
        sigma = std::clamp(sigma, 1e-8, 1.0);
        double mu_target = sigma * current / (2.0 * n);

        // Corrector with the second-order term from the predictor.
        MatrixXd second = zi * dz_aff * dx_aff;
        VectorXd correction = apply_constraints(((second + second.transpose()) / 2.0).eval(), edges);
        VectorXd dy = schur_ldlt.solve(mu_target * rhs - b - correction);
        MatrixXd dz = adjoint_constraints(dy, edges, n);
        MatrixXd dx = mu_target * zi - x - zi * dz * x - second;
        dx = ((dx + dx.transpose()) / 2.0).eval();

        double alpha_p = psd_step(x, dx);
        double alpha_d = psd_step(z, dz);
        if (alpha_p <= 0.0 || alpha_d <= 0.0)
            throw SolverError("interior-point step collapsed", gap);

        x += alpha_p * dx;
        project_feasible(x, edges);
        y += alpha_d * dy;
        z = adjoint_constraints(y, edges, n) - MatrixXd::Ones(n, n);

        phi = b.dot(y);
        psi = x.sum();
        result.iterations = iter;
    }
    throw SolverError("theta solver did not converge within the iteration cap", phi - psi);
}

}  // namespace

ThetaResult lovasz_theta(const Graph& g, const ThetaOptions& options) {
    if (g.vertex_count() < 1) throw ArgumentError("theta needs at least one vertex");
    if (options.tol <= 0) throw ArgumentError("tolerance must be positive");
    if (g.vertex_count() > options.size_cap)
        throw SizeError("graph exceeds the theta solver size cap", g.vertex_count(),
                        options.size_cap);
    const Graph* target = &g;
    Graph complemented;
    if (options.complement_first) {
        complemented = complement(g);
        target = &complemented;
    }
    return solve_theta(*target, options);
}

}  // namespace zecc

#include "zecc/simplex.hpp"

#include <stdexcept>

namespace zecc {

namespace {

// Dense phase-one tableau. Artificial variables are dropped for good once
// they leave the basis, which keeps Bland's termination guarantee and stops
// them from re-entering.
struct Tableau {
    int n = 0;               // original variables
    int m = 0;               // rows
    std::vector<std::vector<Rational>> rows;  // m x (n + m)
    std::vector<Rational> rhs;                // >= 0 throughout
    std::vector<Rational> cost;               // phase-one reduced costs
    std::vector<int> basis;                   // column index per row
    std::vector<bool> dropped;                // per column
};

}  // namespace

std::optional<std::vector<Rational>> exact_lp_feasible_point(
    int variable_count, const std::vector<LinearConstraint>& constraints) {
    Tableau t;
    t.n = variable_count;

    std::vector<std::vector<Rational>> raw_rows;
    std::vector<Rational> raw_rhs;
    for (const auto& c : constraints) {
        std::vector<Rational> row(variable_count, Rational(0));
        for (const auto& [col, coeff] : c.terms) {
            if (col < 0 || col >= variable_count)
                throw std::out_of_range("constraint column out of range");
            row[col] += coeff;
        }
        Rational b = c.rhs;
        bool all_zero = true;
        for (const auto& v : row)
            if (v != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) {
            if (b != 0) return std::nullopt;
            continue;
        }
        if (b < 0) {
            for (auto& v : row) v = -v;
            b = -b;
        }
        raw_rows.push_back(std::move(row));
        raw_rhs.push_back(std::move(b));
    }

    t.m = static_cast<int>(raw_rows.size());
    if (t.m == 0) return std::vector<Rational>(variable_count, Rational(0));

    int total_cols = t.n + t.m;
    t.rows.assign(t.m, std::vector<Rational>(total_cols, Rational(0)));
    t.rhs = raw_rhs;
    t.basis.resize(t.m);
    t.dropped.assign(total_cols, false);
    for (int i = 0; i < t.m; ++i) {
        for (int j = 0; j < t.n; ++j) t.rows[i][j] = raw_rows[i][j];
        t.rows[i][t.n + i] = 1;
        t.basis[i] = t.n + i;
    }
    // Phase-one objective: minimize the sum of artificials. Reduced cost of
    // column j under the all-artificial basis is -sum_i T[i][j].
    t.cost.assign(total_cols, Rational(0));
    for (int j = 0; j < t.n; ++j)
        for (int i = 0; i < t.m; ++i) t.cost[j] -= t.rows[i][j];

    while (true) {
        // Bland: entering column is the smallest index with negative cost.
        int entering = -1;
        for (int j = 0; j < total_cols; ++j) {
            if (t.dropped[j]) continue;
            if (t.cost[j] < 0) {
                entering = j;
                break;
            }
        }
        if (entering < 0) break;

        int leaving = -1;
        Rational best_ratio(0);
        for (int i = 0; i < t.m; ++i) {
            const Rational& a = t.rows[i][entering];
            if (a <= 0) continue;
            Rational ratio = t.rhs[i] / a;
            if (leaving < 0 || ratio < best_ratio ||
                (ratio == best_ratio && t.basis[i] < t.basis[leaving])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        if (leaving < 0)
            throw std::logic_error("phase-one objective unbounded; malformed tableau");

        // Pivot.
        int old_basic = t.basis[leaving];
        if (old_basic >= t.n) t.dropped[old_basic] = true;
        t.basis[leaving] = entering;
        auto& prow = t.rows[leaving];
        Rational pivot = prow[entering];
        for (auto& v : prow)
            if (v != 0) v /= pivot;
        prow[entering] = 1;
        t.rhs[leaving] /= pivot;
        for (int i = 0; i < t.m; ++i) {
            if (i == leaving) continue;
            Rational factor = t.rows[i][entering];
            if (factor == 0) continue;
            auto& row = t.rows[i];
            for (int j = 0; j < total_cols; ++j)
                if (prow[j] != 0) row[j] -= factor * prow[j];
            row[entering] = 0;
            t.rhs[i] -= factor * t.rhs[leaving];
        }
        Rational cfactor = t.cost[entering];
        if (cfactor != 0) {
            for (int j = 0; j < total_cols; ++j)
                if (prow[j] != 0) t.cost[j] -= cfactor * prow[j];
            t.cost[entering] = 0;
        }
    }

    Rational objective(0);
    for (int i = 0; i < t.m; ++i)
        if (t.basis[i] >= t.n) objective += t.rhs[i];
    if (objective != 0) return std::nullopt;

    std::vector<Rational> solution(variable_count, Rational(0));
    for (int i = 0; i < t.m; ++i)
        if (t.basis[i] < t.n) solution[t.basis[i]] = t.rhs[i];
    return solution;
}

}  // namespace zecc

#ifndef ZECC_EXACT_PARAMS_HPP
#define ZECC_EXACT_PARAMS_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "zecc/channel.hpp"
#include "zecc/graph.hpp"

namespace zecc {

// Explicit node-count limit so CI behavior is identical across machines.
struct SearchBudget {
    long long node_limit = 100'000'000;
};

struct IndependenceResult {
    int alpha = 0;
    std::vector<int> witness;  // lexicographically smallest maximum independent set
};

struct ColoringResult {
    int chi = 0;
    std::vector<int> coloring;  // coloring[v] in [0, chi)
};

struct CliqueCoverResult {
    int theta_e = 0;        // minimum number of cliques covering all edges
    int theta_e_prime = 0;  // theta_e plus the number of isolated vertices
    int isolated_count = 0;
    CliqueCover cover;  // edge cliques plus isolated singletons, parts and cover sorted
};

struct ParamsReport {
    IndependenceResult independence;
    ColoringResult coloring;
    CliqueCoverResult cover;
    std::optional<int> xi_upper;  // set when an orthogonal representation was verified
};

// Exact independence number with the lexicographically smallest maximum
// independent set as witness. Throws BudgetExhaustedError carrying the best
// lower bound found when the node limit runs out.
IndependenceResult independence_number(const Graph& g, SearchBudget budget = {});

// Exact chromatic number; the witness is the first proper coloring found by
// ordered backtracking at k = chi (DSATUR supplies the initial upper bound).
ColoringResult chromatic_number(const Graph& g, SearchBudget budget = {});

// Exact edge-clique cover number via set cover over the maximal cliques.
// The witness is the lexicographically smallest optimal cover and doubles as
// the deterministic cover used by the non-signaling module.
CliqueCoverResult clique_cover_numbers(const Graph& g, SearchBudget budget = {});

ParamsReport compute_params(const Graph& g, SearchBudget budget = {});

struct OrthRepVerdict {
    bool accepted = false;
    int dimension = 0;  // upper bound on the orthogonal rank when accepted
    std::string reason;  // first violated condition when rejected
};

// Accepts iff every vector is unit-norm within tol and adjacent vertices map
// to vectors with |inner product| <= tol.
OrthRepVerdict verify_orthogonal_representation(
    const Graph& g, const std::vector<std::vector<std::complex<double>>>& vectors,
    double tol = 1e-9);

// The canonical large independent set of quarter_orthogonality_graph(k): all
// vertices whose first (k+3)/2 coordinates are +1. Size is exactly
// 2^((k-3)/2); independence is verified against the constructed graph.
std::vector<int> quarter_orth_independent_set(int k, int vertex_cap = kDefaultVertexCap);

// All maximal cliques (each sorted), sorted lexicographically. Exposed for
// the cover search and tests.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

}  // namespace zecc

#endif  // ZECC_EXACT_PARAMS_HPP

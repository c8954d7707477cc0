#include "zecc/exact_params.hpp"

#include <algorithm>
#include <numeric>

#include "zecc/errors.hpp"

namespace zecc {

namespace {

// Fixed-width bitset over graph vertices.
struct VertexSet {
    std::vector<std::uint64_t> words;

    static VertexSet empty(int n) {
        VertexSet s;
        s.words.assign((n + 63) / 64, 0);
        return s;
    }
    static VertexSet full(int n) {
        VertexSet s = empty(n);
        for (int v = 0; v < n; ++v) s.set(v);
        return s;
    }
    void set(int v) { words[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { words[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool test(int v) const { return (words[v >> 6] >> (v & 63)) & 1u; }
    bool any() const {
        for (auto w : words)
            if (w) return true;
        return false;
    }
    int count() const {
        int c = 0;
        for (auto w : words) c += __builtin_popcountll(w);
        return c;
    }
    int first() const {
        for (std::size_t i = 0; i < words.size(); ++i)
            if (words[i]) return static_cast<int>(i * 64 + __builtin_ctzll(words[i]));
        return -1;
    }
    VertexSet intersect_row(const std::uint64_t* row) const {
        VertexSet out = *this;
        for (std::size_t i = 0; i < words.size(); ++i) out.words[i] &= row[i];
        return out;
    }
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < words.size(); ++i) {
            std::uint64_t w = words[i];
            while (w) {
                int b = __builtin_ctzll(w);
                fn(static_cast<int>(i * 64 + b));
                w &= w - 1;
            }
        }
    }
};

// Budgeted maximum-clique search with a greedy-coloring bound (MCQ style).
// Vertex order is the canonical index order everywhere, so results are
// deterministic.
class MaxCliqueSolver {
public:
    MaxCliqueSolver(const Graph& g, long long node_limit)
        : g_(g), nodes_left_(node_limit) {}

    // Size of the largest clique within `candidates`.
    int solve(const VertexSet& candidates) {
        best_ = 0;
        expand(candidates, 0);
        return best_;
    }

    long long nodes_left() const { return nodes_left_; }
    int best_so_far() const { return best_; }

private:
    void expand(const VertexSet& p, int depth) {
        if (--nodes_left_ < 0)
            throw BudgetExhaustedError("clique search node budget exhausted", best_);
        if (!p.any()) {
            best_ = std::max(best_, depth);
            return;
        }
        // Greedy coloring of p in index order; color numbers bound the
        // clique size extension.
        std::vector<int> verts;
        p.for_each([&](int v) { verts.push_back(v); });
        std::vector<int> color(verts.size(), 0);
        std::vector<VertexSet> classes;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            int c = 0;
            while (true) {
                if (c == static_cast<int>(classes.size())) classes.push_back(VertexSet::empty(g_.vertex_count()));
                bool clash = false;
                classes[c].for_each([&](int u) {
                    if (g_.adjacent(u, verts[i])) clash = true;
                });
                if (!clash) break;
                ++c;
            }
            classes[c].set(verts[i]);
            color[i] = c + 1;
        }
        // Branch in decreasing color order (ties fall back to decreasing
        // index), pruning with depth + color <= best.
        std::vector<std::size_t> order(verts.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });
        VertexSet remaining = p;
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int v = verts[*it];
            if (depth + color[*it] <= best_) return;
            remaining.reset(v);
            VertexSet next = remaining.intersect_row(g_.row(v));
            expand(next, depth + 1);
        }
    }

    const Graph& g_;
    long long nodes_left_;
    int best_ = 0;
};

}  // namespace

IndependenceResult independence_number(const Graph& g, SearchBudget budget) {
    int n = g.vertex_count();
    if (n == 0) return {0, {}};
    Graph gc = complement(g);
    MaxCliqueSolver solver(gc, budget.node_limit);
    int alpha = solver.solve(VertexSet::full(n));

    // Lexicographically smallest maximum independent set: grow a prefix,
    // keeping v iff some maximum independent set extends it.
    std::vector<int> witness;
    VertexSet compatible = VertexSet::full(n);
    int remaining_target = alpha;
    long long left = solver.nodes_left();
    for (int v = 0; v < n && remaining_target > 0; ++v) {
        if (!compatible.test(v)) continue;
        VertexSet after = compatible.intersect_row(gc.row(v));
        for (int w = 0; w <= v; ++w) after.reset(w);
        MaxCliqueSolver sub(gc, left);
        int extend;
        try {
            extend = sub.solve(after);
        } catch (const BudgetExhaustedError&) {
            throw BudgetExhaustedError("independence witness search budget exhausted",
                                       static_cast<long long>(witness.size()));
        }
        left = sub.nodes_left();
        if (1 + extend == remaining_target) {
            witness.push_back(v);
            compatible = after;
            remaining_target -= 1;
        }
    }
    return {alpha, witness};
}

namespace {

// DSATUR upper bound; deterministic tie-breaks (saturation, then degree,
// then smallest index).
int dsatur_upper_bound(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    std::vector<int> color(n, -1);
    std::vector<std::vector<bool>> neighbor_colors(n);
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            int sat = 0;
            for (int c = 0; c < static_cast<int>(neighbor_colors[v].size()); ++c)
                if (neighbor_colors[v][c]) ++sat;
            int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        int c = 0;
        while (c < static_cast<int>(neighbor_colors[pick].size()) && neighbor_colors[pick][c]) ++c;
        color[pick] = c;
        used = std::max(used, c + 1);
        for (int u : g.neighbors(pick)) {
            if (static_cast<int>(neighbor_colors[u].size()) <= c) neighbor_colors[u].resize(c + 1, false);
            neighbor_colors[u][c] = true;
        }
    }
    return used;
}

// Ordered backtracking k-colorability; vertices in canonical order, colors
// tried ascending, new colors introduced at most one at a time.
class KColoring {
public:
    KColoring(const Graph& g, int k, long long& nodes_left)
        : g_(g), k_(k), nodes_left_(nodes_left), color_(g.vertex_count(), -1) {}

    bool search() { return place(0, 0); }
    const std::vector<int>& coloring() const { return color_; }

private:
    bool place(int v, int max_used) {
        if (v == g_.vertex_count()) return true;
        if (--nodes_left_ < 0)
            throw BudgetExhaustedError("coloring search node budget exhausted", -1);
        int limit = std::min(k_ - 1, max_used);
        for (int c = 0; c <= limit; ++c) {
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (color_[u] == c && g_.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color_[v] = c;
            if (place(v + 1, std::max(max_used, c + 1))) return true;
            color_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    long long& nodes_left_;
    std::vector<int> color_;
};

}  // namespace

ColoringResult chromatic_number(const Graph& g, SearchBudget budget) {
    int n = g.vertex_count();
    if (n == 0) return {0, {}};
    long long nodes_left = budget.node_limit;

    MaxCliqueSolver clique(g, nodes_left);
    int lb;
    try {
        lb = clique.solve(VertexSet::full(n));
    } catch (const BudgetExhaustedError&) {
        lb = 1;  // clique bound is optional; fall through with the trivial bound
    }
    nodes_left = std::max<long long>(clique.nodes_left(), 1);
    int ub = dsatur_upper_bound(g);

    for (int k = std::max(lb, 1); k <= ub; ++k) {
        KColoring coloring(g, k, nodes_left);
        bool found;
        try {
            found = coloring.search();
        } catch (const BudgetExhaustedError&) {
            throw BudgetExhaustedError("chromatic search budget exhausted; best upper bound " +
                                           std::to_string(ub),
                                       ub);
        }
        if (found) return {k, coloring.coloring()};
    }
    throw std::logic_error("DSATUR bound was not realizable");  // unreachable
}

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    std::vector<int> r;
    // Bron-Kerbosch with pivoting; pivot = vertex of P + X maximizing
    // |P cap N(u)|, ties to the smallest index.
    auto bk = [&](auto&& self, VertexSet p, VertexSet x) -> void {
        if (!p.any() && !x.any()) {
            out.push_back(r);
            return;
        }
        int pivot = -1, pivot_score = -1;
        auto consider = [&](int u) {
            int score = p.intersect_row(g.row(u)).count();
            if (score > pivot_score) {
                pivot = u;
                pivot_score = score;
            }
        };
        p.for_each(consider);
        x.for_each(consider);
        VertexSet branch = p;
        if (pivot >= 0)
            for (std::size_t i = 0; i < branch.words.size(); ++i)
                branch.words[i] &= ~g.row(pivot)[i];
        branch.for_each([&](int v) {
            r.push_back(v);
            self(self, p.intersect_row(g.row(v)), x.intersect_row(g.row(v)));
            r.pop_back();
            p.reset(v);
            x.set(v);
        });
    };
    VertexSet p = VertexSet::full(n);
    // Isolated vertices form maximal cliques of size one; covers exclude
    // them from the edge count, so keep them out here.
    for (int v = 0; v < n; ++v)
        if (g.is_isolated(v)) p.reset(v);
    bk(bk, p, VertexSet::empty(n));
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

using EdgeMask = std::vector<std::uint64_t>;

EdgeMask empty_mask(std::size_t bits) { return EdgeMask((bits + 63) / 64, 0); }
void mask_set(EdgeMask& m, std::size_t i) { m[i >> 6] |= std::uint64_t{1} << (i & 63); }
bool mask_test(const EdgeMask& m, std::size_t i) { return (m[i >> 6] >> (i & 63)) & 1u; }
bool mask_all_set(const EdgeMask& m, std::size_t bits) {
    for (std::size_t i = 0; i < bits; ++i)
        if (!mask_test(m, i)) return false;
    return true;
}

// Branch and bound for the minimum number of cliques covering all edges.
class SetCoverSearch {
public:
    SetCoverSearch(std::size_t edge_count, std::vector<EdgeMask> clique_edges,
                   std::vector<std::vector<int>> candidates_per_edge, long long& nodes_left)
        : edge_count_(edge_count),
          clique_edges_(std::move(clique_edges)),
          candidates_per_edge_(std::move(candidates_per_edge)),
          nodes_left_(nodes_left) {
        max_cover_per_clique_ = 1;
        for (const auto& m : clique_edges_) {
            int c = 0;
            for (auto w : m) c += __builtin_popcountll(w);
            max_cover_per_clique_ = std::max(max_cover_per_clique_, c);
        }
    }

    int minimum_size(int upper_bound) {
        best_ = upper_bound;
        recurse(empty_mask(edge_count_), 0);
        return best_;
    }

    // Lexicographically smallest cover of exactly `size` cliques, as an
    // ascending list of clique indices.
    std::vector<int> lex_smallest(int size) {
        chosen_.clear();
        found_.clear();
        lex_recurse(empty_mask(edge_count_), 0, size);
        return found_;
    }

private:
    int uncovered_count(const EdgeMask& covered) const {
        int c = 0;
        for (std::size_t i = 0; i < edge_count_; ++i)
            if (!mask_test(covered, i)) ++c;
        return c;
    }

    void recurse(EdgeMask covered, int used) {
        if (--nodes_left_ < 0)
            throw BudgetExhaustedError("clique cover search budget exhausted", best_);
        int uncovered = uncovered_count(covered);
        if (uncovered == 0) {
            best_ = std::min(best_, used);
            return;
        }
        if (used + (uncovered + max_cover_per_clique_ - 1) / max_cover_per_clique_ >= best_)
            return;
        // Branch on the uncovered edge with the fewest candidate cliques.
        std::size_t pick = edge_count_;
        std::size_t pick_options = SIZE_MAX;
        for (std::size_t e = 0; e < edge_count_; ++e) {
            if (mask_test(covered, e)) continue;
            if (candidates_per_edge_[e].size() < pick_options) {
                pick = e;
                pick_options = candidates_per_edge_[e].size();
            }
        }
        for (int c : candidates_per_edge_[pick]) {
            EdgeMask next = covered;
            for (std::size_t i = 0; i < next.size(); ++i) next[i] |= clique_edges_[c][i];
            recurse(std::move(next), used + 1);
        }
    }

    bool lex_recurse(EdgeMask covered, int next_index, int remaining) {
        if (--nodes_left_ < 0)
            throw BudgetExhaustedError("clique cover witness budget exhausted", best_);
        if (mask_all_set(covered, edge_count_)) {
            found_ = chosen_;
            return remaining >= 0;
        }
        if (remaining == 0) return false;
        // Remaining cliques must still be able to cover everything.
        EdgeMask reach = covered;
        for (std::size_t c = next_index; c < clique_edges_.size(); ++c)
            for (std::size_t i = 0; i < reach.size(); ++i) reach[i] |= clique_edges_[c][i];
        if (!mask_all_set(reach, edge_count_)) return false;
        for (std::size_t c = next_index; c < clique_edges_.size(); ++c) {
            EdgeMask next = covered;
            bool helps = false;
            for (std::size_t i = 0; i < next.size(); ++i) {
                std::uint64_t added = clique_edges_[c][i] & ~next[i];
                if (added) helps = true;
                next[i] |= clique_edges_[c][i];
            }
            if (!helps) continue;
            chosen_.push_back(static_cast<int>(c));
            if (lex_recurse(std::move(next), static_cast<int>(c) + 1, remaining - 1)) return true;
            chosen_.pop_back();
        }
        return false;
    }

    std::size_t edge_count_;
    std::vector<EdgeMask> clique_edges_;
    std::vector<std::vector<int>> candidates_per_edge_;
    long long& nodes_left_;
    int max_cover_per_clique_ = 1;
    int best_ = 0;
    std::vector<int> chosen_;
    std::vector<int> found_;
};

}  // namespace

CliqueCoverResult clique_cover_numbers(const Graph& g, SearchBudget budget) {
    int n = g.vertex_count();
    CliqueCoverResult result;
    result.cover.graph_n = n;
    for (int v = 0; v < n; ++v)
        if (g.is_isolated(v)) ++result.isolated_count;

    auto edges = g.edges();
    if (!edges.empty()) {
        auto cliques = maximal_cliques(g);
        std::vector<EdgeMask> clique_edges(cliques.size(), empty_mask(edges.size()));
        std::vector<std::vector<int>> candidates(edges.size());
        for (std::size_t c = 0; c < cliques.size(); ++c) {
            for (std::size_t e = 0; e < edges.size(); ++e) {
                auto [u, v] = edges[e];
                bool has_u = std::binary_search(cliques[c].begin(), cliques[c].end(), u);
                bool has_v = std::binary_search(cliques[c].begin(), cliques[c].end(), v);
                if (has_u && has_v) {
                    mask_set(clique_edges[c], e);
                    candidates[e].push_back(static_cast<int>(c));
                }
            }
        }
        long long nodes_left = budget.node_limit;
        SetCoverSearch search(edges.size(), clique_edges, candidates, nodes_left);
        result.theta_e = search.minimum_size(static_cast<int>(cliques.size()) + 1);
        std::vector<int> picked = search.lex_smallest(result.theta_e);
        for (int c : picked) result.cover.parts.push_back(cliques[c]);
    }
    for (int v = 0; v < n; ++v)
        if (g.is_isolated(v)) result.cover.parts.push_back({v});
    std::sort(result.cover.parts.begin(), result.cover.parts.end());
    result.theta_e_prime = result.theta_e + result.isolated_count;
    validate_clique_cover(g, result.cover);
    return result;
}

ParamsReport compute_params(const Graph& g, SearchBudget budget) {
    ParamsReport report;
    report.independence = independence_number(g, budget);
    report.coloring = chromatic_number(g, budget);
    report.cover = clique_cover_numbers(g, budget);
    return report;
}

OrthRepVerdict verify_orthogonal_representation(
    const Graph& g, const std::vector<std::vector<std::complex<double>>>& vectors, double tol) {
    int n = g.vertex_count();
    if (static_cast<int>(vectors.size()) != n)
        throw ArgumentError("expected one vector per vertex (" + std::to_string(n) + "), got " +
                            std::to_string(vectors.size()));
    if (vectors.empty()) return {true, 0, ""};
    std::size_t d = vectors[0].size();
    if (d < 1) throw ArgumentError("vectors must have dimension at least 1");
    for (int v = 0; v < n; ++v)
        if (vectors[v].size() != d)
            throw ArgumentError("vector for vertex " + std::to_string(v) +
                                " has mismatched dimension");

    OrthRepVerdict verdict;
    verdict.dimension = static_cast<int>(d);
    for (int v = 0; v < n; ++v) {
        double norm_sq = 0;
        for (const auto& z : vectors[v]) norm_sq += std::norm(z);
        if (std::abs(std::sqrt(norm_sq) - 1.0) > tol) {
            verdict.reason = "vertex " + std::to_string(v) + " (" + g.label(v) +
                             ") is not unit norm";
            return verdict;
        }
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) continue;
            std::complex<double> inner = 0;
            for (std::size_t i = 0; i < d; ++i) inner += std::conj(vectors[u][i]) * vectors[v][i];
            if (std::abs(inner) > tol) {
                verdict.reason = "adjacent pair " + std::to_string(u) + "," + std::to_string(v) +
                                 " is not orthogonal";
                return verdict;
            }
        }
    verdict.accepted = true;
    return verdict;
}

std::vector<int> quarter_orth_independent_set(int k, int vertex_cap) {
    Graph gamma = quarter_orthogonality_graph(k, vertex_cap);
    int ones_prefix = (k + 3) / 2;
    std::vector<int> set;
    for (int v = 0; v < gamma.vertex_count(); ++v) {
        const std::string& label = gamma.label(v);
        bool prefix_ones = true;
        for (int p = 0; p < ones_prefix; ++p)
            if (label[p] != '+') {
                prefix_ones = false;
                break;
            }
        if (prefix_ones) set.push_back(v);
    }
    std::uint64_t expected = std::uint64_t{1} << ((k - 3) / 2);
    if (set.size() != expected)
        throw std::logic_error("canonical independent set has unexpected size");
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (gamma.adjacent(set[i], set[j]))
                throw std::logic_error("canonical set is not independent");
    return set;
}

}  // namespace zecc

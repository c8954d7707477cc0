#ifndef ZECC_GRAPH_HPP
#define ZECC_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace zecc {

// Default cap on vertex counts produced by graph constructions. Guards
// against accidental exponential blowup (strong powers, orthogonality
// graphs). Overridable per call and via the ZECC_VERTEX_CAP environment
// variable in the CLI.
inline constexpr int kDefaultVertexCap = 65536;

/// Labeled simple undirected graph with a dense adjacency bitset.
///
/// The adjacency matrix is symmetric with zero diagonal; labels are unique
/// and positional (vertex i carries labels()[i]). All graph constructions in
/// this library fix a canonical vertex order, so identities between
/// constructed graphs hold as labeled-graph equalities, not merely up to
/// isomorphism.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::vector<std::string> labels);

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const;

    bool adjacent(int u, int v) const {
        return u != v && (row(u)[v >> 6] >> (v & 63)) & 1u;
    }
    // Equal-or-adjacent relation used by product constructions.
    bool eq_or_adjacent(int u, int v) const { return u == v || adjacent(u, v); }

    void add_edge(int u, int v);

    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    // Index of the vertex with the given label, -1 if absent.
    int vertex_by_label(const std::string& label) const;

    int degree(int v) const;
    bool is_isolated(int v) const { return degree(v) == 0; }
    std::vector<int> neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const;  // sorted, u < v

    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    int words_per_row() const { return words_; }

    bool operator==(const Graph& other) const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::uint64_t> bits_;
};

enum class BasicGraphKind { kComplete, kEmpty, kCycle };

// K_t, the edgeless graph, or C_t with canonical labels "0".."t-1".
Graph basic_graph(BasicGraphKind kind, int t);

// Same labels, adjacency flipped off the diagonal.
Graph complement(const Graph& g);

// Strong product: vertex (u,x) at index u*|V(H)|+x labeled "u,x"; distinct
// vertices adjacent iff equal-or-adjacent in both coordinates.
Graph strong_product(const Graph& g, const Graph& h, int vertex_cap = kDefaultVertexCap);

// Left-associated iterated strong product; power 1 returns g itself.
Graph strong_power(const Graph& g, int n, int vertex_cap = kDefaultVertexCap);

// t disjoint copies; vertex (u,i) at index u*t+i labeled "u#i"; edges only
// within a copy.
Graph disjoint_union_power(const Graph& g, int t, int vertex_cap = kDefaultVertexCap);

// Plain disjoint union, left graph first; labels suffixed "#0" / "#1".
Graph disjoint_union(const Graph& a, const Graph& b, int vertex_cap = kDefaultVertexCap);

// Cartesian product with K_t: same vertex order and labels as
// disjoint_union_power, plus edges (u,i)~(u,j) for i != j.
Graph cartesian_with_complete(const Graph& g, int t, int vertex_cap = kDefaultVertexCap);

// All sign vectors in {+1,-1}^k in lexicographic order (+1 before -1),
// adjacent iff orthogonal. Labels are sign strings like "++-+".
Graph orthogonality_graph(int k, int vertex_cap = kDefaultVertexCap);

// Induced subgraph of the (k+1)-dimensional orthogonality graph on the
// vectors with first entry +1 and an even number of -1 entries; 2^(k-1)
// vertices. Requires odd k >= 5.
Graph quarter_orthogonality_graph(int k, int vertex_cap = kDefaultVertexCap);

// The sign vector of a vertex of orthogonality_graph(k) /
// quarter_orthogonality_graph(k), recovered from its label.
std::vector<int> sign_vector_of_label(const std::string& label);

}  // namespace zecc

#endif  // ZECC_GRAPH_HPP

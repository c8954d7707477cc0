#include "zecc/graph.hpp"

#include <algorithm>
#include <set>

#include "zecc/errors.hpp"

namespace zecc {

namespace {

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

void check_cap(std::uint64_t requested, int cap, const char* what) {
    if (cap > 0 && requested > static_cast<std::uint64_t>(cap)) {
        throw SizeError(std::string(what) + " would have " + std::to_string(requested) +
                            " vertices, above the cap of " + std::to_string(cap),
                        requested, static_cast<std::uint64_t>(cap));
    }
}

}  // namespace

Graph::Graph(int n) : Graph(n, default_labels(n)) {}

Graph::Graph(int n, std::vector<std::string> labels)
    : n_(n), words_((n + 63) / 64), labels_(std::move(labels)) {
    if (n < 0) throw ArgumentError("vertex count must be non-negative");
    if (static_cast<int>(labels_.size()) != n) {
        throw ArgumentError("label count does not match vertex count");
    }
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (static_cast<int>(seen.size()) != n) throw ArgumentError("labels must be unique");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw ArgumentError("vertex index out of range: " + std::to_string(v));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ArgumentError("self-loops are not allowed (simple graph)");
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

std::int64_t Graph::edge_count() const {
    std::int64_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += __builtin_popcountll(r[w]);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (adjacent(v, u)) out.push_back(u);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

int Graph::vertex_by_label(const std::string& label) const {
    for (int v = 0; v < n_; ++v)
        if (labels_[v] == label) return v;
    return -1;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && labels_ == other.labels_ && bits_ == other.bits_;
}

Graph basic_graph(BasicGraphKind kind, int t) {
    if (t < 1) throw ArgumentError("vertex count must be positive");
    if (kind == BasicGraphKind::kCycle && t < 3) throw ArgumentError("a cycle needs at least 3 vertices");
    Graph g(t);
    switch (kind) {
        case BasicGraphKind::kComplete:
            for (int u = 0; u < t; ++u)
                for (int v = u + 1; v < t; ++v) g.add_edge(u, v);
            break;
        case BasicGraphKind::kEmpty:
            break;
        case BasicGraphKind::kCycle:
            for (int u = 0; u < t; ++u) g.add_edge(u, (u + 1) % t);
            break;
    }
    return g;
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph out(n, g.labels());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

Graph strong_product(const Graph& g, const Graph& h, int vertex_cap) {
    std::uint64_t size = static_cast<std::uint64_t>(g.vertex_count()) * h.vertex_count();
    check_cap(size, vertex_cap, "strong product");
    int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<std::string> labels;
    labels.reserve(size);
    for (int u = 0; u < ng; ++u)
        for (int x = 0; x < nh; ++x) labels.push_back(g.label(u) + "," + h.label(x));
    Graph out(static_cast<int>(size), std::move(labels));
    for (int u = 0; u < ng; ++u)
        for (int x = 0; x < nh; ++x)
            for (int v = u; v < ng; ++v) {
                if (!g.eq_or_adjacent(u, v)) continue;
                int ystart = (v == u) ? x + 1 : 0;
                for (int y = ystart; y < nh; ++y)
                    if (h.eq_or_adjacent(x, y)) out.add_edge(u * nh + x, v * nh + y);
            }
    return out;
}

Graph strong_power(const Graph& g, int n, int vertex_cap) {
    if (n < 1) throw ArgumentError("strong power exponent must be positive");
    std::uint64_t size = 1;
    for (int i = 0; i < n; ++i) {
        size *= static_cast<std::uint64_t>(g.vertex_count());
        check_cap(size, vertex_cap, "strong power");
    }
    Graph out = g;
    for (int i = 1; i < n; ++i) out = strong_product(out, g, vertex_cap);
    return out;
}

Graph disjoint_union_power(const Graph& g, int t, int vertex_cap) {
    if (t < 1) throw ArgumentError("copy count must be positive");
    std::uint64_t size = static_cast<std::uint64_t>(g.vertex_count()) * t;
    check_cap(size, vertex_cap, "disjoint union power");
    int n = g.vertex_count();
    std::vector<std::string> labels;
    labels.reserve(size);
    for (int u = 0; u < n; ++u)
        for (int i = 0; i < t; ++i) labels.push_back(g.label(u) + "#" + std::to_string(i));
    Graph out(static_cast<int>(size), std::move(labels));
    for (auto [u, v] : g.edges())
        for (int i = 0; i < t; ++i) out.add_edge(u * t + i, v * t + i);
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b, int vertex_cap) {
    std::uint64_t size = static_cast<std::uint64_t>(a.vertex_count()) + b.vertex_count();
    check_cap(size, vertex_cap, "disjoint union");
    std::vector<std::string> labels;
    labels.reserve(size);
    for (const auto& l : a.labels()) labels.push_back(l + "#0");
    for (const auto& l : b.labels()) labels.push_back(l + "#1");
    Graph out(static_cast<int>(size), std::move(labels));
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    int off = a.vertex_count();
    for (auto [u, v] : b.edges()) out.add_edge(off + u, off + v);
    return out;
}

Graph cartesian_with_complete(const Graph& g, int t, int vertex_cap) {
    Graph out = disjoint_union_power(g, t, vertex_cap);
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j) out.add_edge(u * t + i, u * t + j);
    return out;
}

namespace {

// Lexicographic sign vectors with +1 before -1: bit 0 of the index means +1.
std::string sign_label(std::uint32_t index, int k) {
    std::string s(k, '+');
    for (int pos = 0; pos < k; ++pos)
        if ((index >> (k - 1 - pos)) & 1u) s[pos] = '-';
    return s;
}

int sign_dot(std::uint32_t a, std::uint32_t b, int k) {
    // Entries multiply to -1 exactly where the sign bits differ.
    int disagreements = __builtin_popcount((a ^ b) & ((1u << k) - 1));
    return k - 2 * disagreements;
}

}  // namespace

std::vector<int> sign_vector_of_label(const std::string& label) {
    std::vector<int> v;
    v.reserve(label.size());
    for (char c : label) {
        if (c == '+')
            v.push_back(1);
        else if (c == '-')
            v.push_back(-1);
        else
            throw ArgumentError("not a sign-vector label: " + label);
    }
    return v;
}

Graph orthogonality_graph(int k, int vertex_cap) {
    if (k < 1) throw ArgumentError("dimension must be positive");
    if (k > 16) throw SizeError("orthogonality graph dimension capped at 16", k, 16);
    std::uint64_t size = std::uint64_t{1} << k;
    check_cap(size, vertex_cap, "orthogonality graph");
    int n = static_cast<int>(size);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(sign_label(i, k));
    Graph out(n, std::move(labels));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (sign_dot(a, b, k) == 0) out.add_edge(a, b);
    return out;
}

Graph quarter_orthogonality_graph(int k, int vertex_cap) {
    if (k % 2 == 0) throw ArgumentError("quarter orthogonality graph needs odd k");
    if (k < 5) throw ArgumentError("quarter orthogonality graph needs k >= 5");
    if (k + 1 > 24) throw SizeError("quarter orthogonality graph dimension capped", k, 23);
    int dim = k + 1;
    std::uint64_t size = std::uint64_t{1} << (k - 1);
    check_cap(size, vertex_cap, "quarter orthogonality graph");

    // First entry +1 (bit of position 0 clear) and an even number of -1s.
    std::vector<std::uint32_t> verts;
    verts.reserve(size);
    for (std::uint32_t idx = 0; idx < (1u << (dim - 1)); ++idx) {
        // idx covers the trailing dim-1 positions; the leading entry is +1.
        if (__builtin_popcount(idx) % 2 == 0) verts.push_back(idx);
    }
    std::vector<std::string> labels;
    labels.reserve(verts.size());
    for (auto v : verts) labels.push_back(sign_label(v, dim));
    Graph out(static_cast<int>(verts.size()), std::move(labels));
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (sign_dot(verts[a], verts[b], dim) == 0)
                out.add_edge(static_cast<int>(a), static_cast<int>(b));
    return out;
}

}  // namespace zecc

#include "zecc/channel.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "zecc/errors.hpp"

namespace zecc {

namespace {

std::string part_to_string(const std::vector<int>& part) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < part.size(); ++i) os << (i ? "," : "") << part[i];
    os << "}";
    return os.str();
}

}  // namespace

Channel::Channel(std::vector<std::string> inputs, std::vector<std::string> outputs,
                 std::vector<std::vector<double>> matrix)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)), matrix_(std::move(matrix)) {
    if (matrix_.size() != inputs_.size())
        throw ValidationError("channel matrix row count does not match input count");
    for (std::size_t v = 0; v < matrix_.size(); ++v) {
        const auto& r = matrix_[v];
        if (r.size() != outputs_.size())
            throw ValidationError("channel row " + std::to_string(v) +
                                  " has wrong number of entries");
        double sum = 0.0;
        for (double p : r) {
            if (p < 0.0 || p > 1.0)
                throw ValidationError("channel row " + std::to_string(v) +
                                      " has an entry outside [0,1]");
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw ValidationError("channel row " + std::to_string(v) + " sums to " +
                                  std::to_string(sum) + ", expected 1");
    }
}

void validate_clique_cover(const Graph& g, const CliqueCover& cover) {
    int n = g.vertex_count();
    if (cover.graph_n != n) throw ValidationError("cover declared for a different vertex count");
    for (const auto& part : cover.parts) {
        if (part.empty()) throw ValidationError("cover contains an empty part");
        std::set<int> distinct(part.begin(), part.end());
        if (distinct.size() != part.size())
            throw ValidationError("cover part " + part_to_string(part) + " repeats a vertex");
        for (int v : part)
            if (v < 0 || v >= n)
                throw ValidationError("cover part " + part_to_string(part) +
                                      " has a vertex out of range");
        if (part.size() == 1) {
            if (!g.is_isolated(part[0]))
                throw ValidationError("singleton part " + part_to_string(part) +
                                      " is only allowed for isolated vertices");
            continue;
        }
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = i + 1; j < part.size(); ++j)
                if (!g.adjacent(part[i], part[j]))
                    throw ValidationError("part " + part_to_string(part) + " is not a clique: " +
                                          std::to_string(part[i]) + " and " +
                                          std::to_string(part[j]) + " are non-adjacent");
    }
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& part : cover.parts) {
            if (std::find(part.begin(), part.end(), u) != part.end() &&
                std::find(part.begin(), part.end(), v) != part.end()) {
                covered = true;
                break;
            }
        }
        if (!covered)
            throw ValidationError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                  " is not covered by any part");
    }
    for (int v = 0; v < n; ++v) {
        if (!g.is_isolated(v)) continue;
        bool present = false;
        for (const auto& part : cover.parts)
            if (part.size() == 1 && part[0] == v) present = true;
        if (!present)
            throw ValidationError("isolated vertex " + std::to_string(v) +
                                  " has no singleton part");
    }
}

Graph confusability_graph(const Channel& channel) {
    int n = channel.input_count();
    Graph g(n, channel.inputs());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = 0; w < channel.output_count(); ++w)
                if (channel.probability(w, u) > kPositivityThreshold &&
                    channel.probability(w, v) > kPositivityThreshold) {
                    g.add_edge(u, v);
                    break;
                }
    return g;
}

Channel minimal_channel_from_cover(const Graph& g, const CliqueCover& cover) {
    validate_clique_cover(g, cover);
    int n = g.vertex_count();
    std::vector<int> containing(n, 0);
    for (const auto& part : cover.parts)
        for (int v : part) ++containing[v];
    for (int v = 0; v < n; ++v)
        if (containing[v] == 0)
            throw ValidationError("vertex " + std::to_string(v) + " is in no part");

    std::vector<std::string> outputs;
    outputs.reserve(cover.parts.size());
    for (const auto& part : cover.parts) outputs.push_back(part_to_string(part));

    std::vector<std::vector<double>> matrix(n, std::vector<double>(cover.parts.size(), 0.0));
    for (std::size_t c = 0; c < cover.parts.size(); ++c)
        for (int v : cover.parts[c]) matrix[v][c] = 1.0 / containing[v];
    return Channel(g.labels(), std::move(outputs), std::move(matrix));
}

}  // namespace zecc

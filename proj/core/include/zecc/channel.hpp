#ifndef ZECC_CHANNEL_HPP
#define ZECC_CHANNEL_HPP

#include <string>
#include <vector>

#include "zecc/graph.hpp"

namespace zecc {

// Probabilities at or below this are treated as exact zeros when deciding
// confusability. Channel files carry decimal text, so parse round-off must
// not introduce phantom edges.
inline constexpr double kPositivityThreshold = 1e-12;

/// Discrete memoryless channel: a row-stochastic matrix N(w|v) over finite
/// input and output alphabets.
class Channel {
public:
    Channel() = default;
    // Throws ValidationError unless every row is a probability vector
    // (entries in [0,1], sum within 1e-9 of 1).
    Channel(std::vector<std::string> inputs, std::vector<std::string> outputs,
            std::vector<std::vector<double>> matrix);

    int input_count() const { return static_cast<int>(inputs_.size()); }
    int output_count() const { return static_cast<int>(outputs_.size()); }
    const std::vector<std::string>& inputs() const { return inputs_; }
    const std::vector<std::string>& outputs() const { return outputs_; }
    double probability(int output, int input) const { return matrix_[input][output]; }
    const std::vector<std::vector<double>>& matrix() const { return matrix_; }

private:
    std::vector<std::string> inputs_;
    std::vector<std::string> outputs_;
    std::vector<std::vector<double>> matrix_;  // matrix_[input][output]
};

/// A family of vertex subsets that covers every edge with cliques and every
/// isolated vertex with a singleton. Serves both as a channel blueprint and
/// as the receiver-side input alphabet of the non-signaling LP.
struct CliqueCover {
    int graph_n = 0;
    std::vector<std::vector<int>> parts;  // each sorted ascending

    int size() const { return static_cast<int>(parts.size()); }
};

// Throws ValidationError naming the offending part or uncovered edge/vertex.
void validate_clique_cover(const Graph& g, const CliqueCover& cover);

// Vertices u,v are adjacent iff some output has strictly positive
// probability under both.
Graph confusability_graph(const Channel& channel);

// The channel with one output per cover part and N(part|v) uniform over the
// parts containing v. Its confusability graph is exactly g.
Channel minimal_channel_from_cover(const Graph& g, const CliqueCover& cover);

}  // namespace zecc

#endif  // ZECC_CHANNEL_HPP

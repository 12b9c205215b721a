#pragma once

#include <cstddef>
#include <vector>

namespace bsroots {

using AdjacencyMatrix = std::vector<std::vector<bool>>;

/// Maximum clique by branch and bound with greedy-coloring bounds. Returns
/// the vertex ids of one maximum clique in increasing order; the choice is
/// deterministic. Intended for graphs with at most a few dozen vertices.
std::vector<std::size_t> maximum_clique(const AdjacencyMatrix& adj);

}  // namespace bsroots

#pragma once

#include <vector>

#include "mstci/graph.hpp"
#include "mstci/rng.hpp"

namespace mstci {

// Random connected graph: a random-attachment spanning tree plus each
// remaining pair independently with probability edge_prob.
Graph random_connected_graph(int n, double edge_prob, SplitMix64& rng);

// Random graph with vertex 0 universal; other pairs independently with
// probability edge_prob. Always connected.
Graph random_universal_graph(int n, double edge_prob, SplitMix64& rng);

// Edge indices of a random spanning tree of g (randomized Kruskal over a
// shuffled edge order; not uniform over trees). g must be connected.
std::vector<int> random_spanning_tree_edges(const Graph& g, SplitMix64& rng);

}  // namespace mstci

#pragma once

#include <vector>

#include "mstci/edge_set.hpp"
#include "mstci/graph.hpp"
#include "mstci/spanning_tree.hpp"

namespace mstci {

// Fundamental cycle induced by one non-tree edge: the cycle edge plus the
// tree path between its endpoints. Vertices are derived on demand from
// path_edges and the cycle-edge endpoints rather than stored.
struct TreeCycle {
    int cycle_edge = -1;
    EdgeSet path_edges;
    int length = 0;  // |path_edges| + 1, always >= 3 in a simple graph
};

// Cycle for non-tree edge e. Throws std::invalid_argument if e is a tree
// edge (a tree edge induces no cycle).
TreeCycle fundamental_cycle(const Graph& g, const SpanningTree& t, int e);

// One cycle per non-tree edge, ordered by cycle-edge index; exactly
// m - (n-1) entries.
std::vector<TreeCycle> all_tree_cycles(const Graph& g, const SpanningTree& t);

// Vertices of the cycle in path order, starting at one cycle-edge endpoint
// and ending at the other.
std::vector<int> cycle_vertices(const Graph& g, const SpanningTree& t,
                                const TreeCycle& c);

// Per-vertex membership mask for the cycle's vertex set.
std::vector<char> cycle_vertex_mask(const Graph& g, const SpanningTree& t,
                                    const TreeCycle& c);

// The unique cycle vertex at minimal tree distance from v; v itself when v
// lies on the cycle.
int closest_point(const Graph& g, const SpanningTree& t, int v, const TreeCycle& c);

// Partition of the off-cycle vertices by closest point. sets[i] holds the
// vertices whose closest point is vertices[i]; sizes q_i sum to n - k.
struct ClosestPointSets {
    std::vector<int> vertices;            // cycle vertices in path order
    std::vector<std::vector<int>> sets;   // aligned with `vertices`
    std::vector<int> sizes() const;
};

ClosestPointSets closest_point_sets(const Graph& g, const SpanningTree& t,
                                    const TreeCycle& c);

}  // namespace mstci

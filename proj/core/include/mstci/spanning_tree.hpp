#pragma once

#include <span>
#include <vector>

#include "mstci/edge_set.hpp"
#include "mstci/graph.hpp"

namespace mstci {

// Spanning tree of a host graph: n-1 host edge indices plus a rooted view
// (parent/depth arrays). Immutable; re-rooting returns a new tree with the
// same edge set.
class SpanningTree {
public:
    SpanningTree() = default;

    int vertex_count() const { return static_cast<int>(parent_.size()); }
    int root() const { return root_; }

    const EdgeSet& tree_edges() const { return tree_edges_; }
    bool contains(int edge) const { return tree_edges_.test(edge); }
    std::vector<int> edge_indices() const { return tree_edges_.to_vector(); }

    int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
    int parent_edge(int v) const { return parent_edge_[static_cast<std::size_t>(v)]; }
    int depth(int v) const { return depth_[static_cast<std::size_t>(v)]; }

    // Degree of v restricted to the tree.
    int tree_degree(int v) const { return tree_degree_[static_cast<std::size_t>(v)]; }

    friend SpanningTree validate_spanning_tree(const Graph& g,
                                               std::span<const int> edge_set, int root);

private:
    int root_ = 0;
    EdgeSet tree_edges_;
    std::vector<int> parent_;       // -1 at the root
    std::vector<int> parent_edge_;  // -1 at the root
    std::vector<int> depth_;
    std::vector<int> tree_degree_;
};

// Checks that edge_set is a spanning tree of g and computes the rooted view.
// Throws std::invalid_argument naming the failure (wrong size, cycle,
// unreached vertex).
SpanningTree validate_spanning_tree(const Graph& g, std::span<const int> edge_set,
                                    int root);
SpanningTree validate_spanning_tree(const Graph& g, std::initializer_list<int> edge_set,
                                    int root);

// Same edge set, parent/depth recomputed from the new root.
SpanningTree reroot(const Graph& g, const SpanningTree& t, int new_root);

// Unique tree path between u and w as an ordered list of edge indices
// (u-side first); empty iff u == w. Walks both endpoints to their lowest
// common ancestor under the current root.
std::vector<int> tree_path(const SpanningTree& t, int u, int w);

// All edges incident to center, rooted at center. Requires center adjacent
// to every other vertex.
SpanningTree star_tree(const Graph& g, int center);

// Rebuilds t (given by its edge endpoints) as a spanning tree of `to`, which
// must contain every tree edge. Used when edges are removed from a host
// graph and indices compact.
SpanningTree transfer_spanning_tree(const Graph& from, const SpanningTree& t,
                                    const Graph& to);

}  // namespace mstci

#pragma once

#include <span>
#include <vector>

namespace mstci {

// Unordered pair of vertex ids; (u, w) and (w, u) name the same edge.
struct VertexPair {
    int u = 0;
    int w = 0;

    friend bool operator==(const VertexPair& a, const VertexPair& b) {
        return (a.u == b.u && a.w == b.w) || (a.u == b.w && a.w == b.u);
    }
};

struct IncidentEdge {
    int neighbor = 0;
    int edge = 0;
};

// Simple undirected graph. Edge indices are dense 0..m-1, assigned in build
// order, and stable for the lifetime of the graph; all higher layers refer
// to edges by index. Immutable after construction.
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    VertexPair endpoints(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    std::span<const VertexPair> edges() const { return edges_; }
    std::span<const IncidentEdge> adjacency(int v) const {
        return adjacency_[static_cast<std::size_t>(v)];
    }
    int degree(int v) const {
        return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
    }

    // Index of the edge joining u and w, or -1 when absent.
    int find_edge(int u, int w) const;

    bool is_connected() const;
    bool is_universal(int v) const { return degree(v) == n_ - 1; }

    friend Graph build_graph(int n, std::span<const VertexPair> pairs);

private:
    int n_ = 0;
    std::vector<VertexPair> edges_;
    std::vector<std::vector<IncidentEdge>> adjacency_;
};

// Builds a simple graph on vertices 0..n-1. Rejects self-loops, duplicate
// unordered pairs and out-of-range endpoints; connectivity is not required
// here (spanning-tree validation checks it lazily).
Graph build_graph(int n, std::span<const VertexPair> pairs);
Graph build_graph(int n, std::initializer_list<VertexPair> pairs);

Graph complete_graph(int n);

// New graph with the given edge indices dropped; remaining edges keep their
// relative order (indices compact downward).
Graph remove_edges(const Graph& g, std::span<const int> edge_indices);

}  // namespace mstci

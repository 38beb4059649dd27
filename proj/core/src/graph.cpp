#include "mstci/graph.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mstci {

int Graph::find_edge(int u, int w) const {
    if (u < 0 || u >= n_ || w < 0 || w >= n_) return -1;
    const auto& adj = adjacency_[static_cast<std::size_t>(u)];
    for (const IncidentEdge& ie : adj)
        if (ie.neighbor == w) return ie.edge;
    return -1;
}

bool Graph::is_connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const IncidentEdge& ie : adjacency(v)) {
            if (!seen[static_cast<std::size_t>(ie.neighbor)]) {
                seen[static_cast<std::size_t>(ie.neighbor)] = 1;
                ++reached;
                stack.push_back(ie.neighbor);
            }
        }
    }
    return reached == n_;
}

Graph build_graph(int n, std::span<const VertexPair> pairs) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adjacency_.resize(static_cast<std::size_t>(n));
    g.edges_.reserve(pairs.size());
    for (const VertexPair& p : pairs) {
        if (p.u < 0 || p.u >= n || p.w < 0 || p.w >= n)
            throw std::invalid_argument("edge (" + std::to_string(p.u) + "," +
                                        std::to_string(p.w) + ") out of range for n=" +
                                        std::to_string(n));
        if (p.u == p.w)
            throw std::invalid_argument("self-loop (" + std::to_string(p.u) + "," +
                                        std::to_string(p.w) + ") rejected");
        if (g.find_edge(p.u, p.w) != -1)
            throw std::invalid_argument("duplicate edge (" + std::to_string(p.u) + "," +
                                        std::to_string(p.w) + ") rejected");
        const int e = static_cast<int>(g.edges_.size());
        g.edges_.push_back(p);
        g.adjacency_[static_cast<std::size_t>(p.u)].push_back({p.w, e});
        g.adjacency_[static_cast<std::size_t>(p.w)].push_back({p.u, e});
    }
    return g;
}

Graph build_graph(int n, std::initializer_list<VertexPair> pairs) {
    return build_graph(n, std::span<const VertexPair>(pairs.begin(), pairs.size()));
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<VertexPair> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) pairs.push_back({u, w});
    return build_graph(n, pairs);
}

Graph remove_edges(const Graph& g, std::span<const int> edge_indices) {
    std::vector<char> drop(static_cast<std::size_t>(g.edge_count()), 0);
    for (int e : edge_indices) {
        if (e < 0 || e >= g.edge_count())
            throw std::invalid_argument("edge index " + std::to_string(e) + " out of range");
        drop[static_cast<std::size_t>(e)] = 1;
    }
    std::vector<VertexPair> kept;
    kept.reserve(g.edges().size());
    for (int e = 0; e < g.edge_count(); ++e)
        if (!drop[static_cast<std::size_t>(e)]) kept.push_back(g.endpoints(e));
    return build_graph(g.vertex_count(), kept);
}

}  // namespace mstci

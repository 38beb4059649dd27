#include "mstci/random_graphs.hpp"

#include <stdexcept>

#include "mstci/enumeration.hpp"

namespace mstci {

Graph random_connected_graph(int n, double edge_prob, SplitMix64& rng) {
    if (n < 1) throw std::invalid_argument("graph needs n >= 1");
    if (n == 1) return build_graph(1, std::initializer_list<VertexPair>{});
    std::vector<VertexPair> pairs = random_tree(n, rng);
    std::vector<std::vector<char>> present(static_cast<std::size_t>(n),
                                           std::vector<char>(static_cast<std::size_t>(n), 0));
    for (const VertexPair& p : pairs) {
        present[static_cast<std::size_t>(p.u)][static_cast<std::size_t>(p.w)] = 1;
        present[static_cast<std::size_t>(p.w)][static_cast<std::size_t>(p.u)] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (!present[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] &&
                rng.bernoulli(edge_prob))
                pairs.push_back({u, w});
    return build_graph(n, pairs);
}

Graph random_universal_graph(int n, double edge_prob, SplitMix64& rng) {
    if (n < 2) throw std::invalid_argument("universal-vertex graph needs n >= 2");
    std::vector<VertexPair> pairs;
    for (int u = 1; u < n; ++u) pairs.push_back({0, u});
    for (int u = 1; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (rng.bernoulli(edge_prob)) pairs.push_back({u, w});
    return build_graph(n, pairs);
}

std::vector<int> random_spanning_tree_edges(const Graph& g, SplitMix64& rng) {
    std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) order[static_cast<std::size_t>(e)] = e;
    rng.shuffle(order);

    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) parent[static_cast<std::size_t>(v)] = v;
    const auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    std::vector<int> tree;
    tree.reserve(static_cast<std::size_t>(g.vertex_count()) - 1);
    for (int e : order) {
        const VertexPair p = g.endpoints(e);
        const int a = find(p.u);
        const int b = find(p.w);
        if (a == b) continue;
        parent[static_cast<std::size_t>(a)] = b;
        tree.push_back(e);
    }
    if (static_cast<int>(tree.size()) != g.vertex_count() - 1)
        throw std::invalid_argument("graph is not connected");
    std::sort(tree.begin(), tree.end());
    return tree;
}

}  // namespace mstci

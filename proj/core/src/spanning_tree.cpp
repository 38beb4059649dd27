#include "mstci/spanning_tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mstci {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

}  // namespace

SpanningTree validate_spanning_tree(const Graph& g, std::span<const int> edge_set,
                                    int root) {
    const int n = g.vertex_count();
    if (root < 0 || root >= n)
        throw std::invalid_argument("root " + std::to_string(root) + " out of range");

    EdgeSet edges(g.edge_count());
    int distinct = 0;
    for (int e : edge_set) {
        if (e < 0 || e >= g.edge_count())
            throw std::invalid_argument("tree edge index " + std::to_string(e) +
                                        " out of range");
        if (!edges.test(e)) {
            edges.set(e);
            ++distinct;
        }
    }
    if (distinct != n - 1)
        throw std::invalid_argument("not a spanning tree: " + std::to_string(distinct) +
                                    " distinct edges, expected " + std::to_string(n - 1));

    Dsu dsu(n);
    edges.for_each([&](int e) {
        const VertexPair p = g.endpoints(e);
        if (!dsu.unite(p.u, p.w))
            throw std::invalid_argument("not a spanning tree: edge set contains a cycle");
    });

    SpanningTree t;
    t.root_ = root;
    t.tree_edges_ = edges;
    t.parent_.assign(static_cast<std::size_t>(n), -1);
    t.parent_edge_.assign(static_cast<std::size_t>(n), -1);
    t.depth_.assign(static_cast<std::size_t>(n), -1);
    t.tree_degree_.assign(static_cast<std::size_t>(n), 0);

    std::vector<int> queue{root};
    t.depth_[static_cast<std::size_t>(root)] = 0;
    int reached = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (const IncidentEdge& ie : g.adjacency(v)) {
            if (!edges.test(ie.edge)) continue;
            if (t.depth_[static_cast<std::size_t>(ie.neighbor)] != -1) continue;
            t.parent_[static_cast<std::size_t>(ie.neighbor)] = v;
            t.parent_edge_[static_cast<std::size_t>(ie.neighbor)] = ie.edge;
            t.depth_[static_cast<std::size_t>(ie.neighbor)] =
                t.depth_[static_cast<std::size_t>(v)] + 1;
            queue.push_back(ie.neighbor);
            ++reached;
        }
    }
    if (reached != n) {
        int missing = 0;
        while (t.depth_[static_cast<std::size_t>(missing)] != -1) ++missing;
        throw std::invalid_argument("not a spanning tree: vertex " +
                                    std::to_string(missing) + " not reached");
    }
    edges.for_each([&](int e) {
        const VertexPair p = g.endpoints(e);
        ++t.tree_degree_[static_cast<std::size_t>(p.u)];
        ++t.tree_degree_[static_cast<std::size_t>(p.w)];
    });
    return t;
}

SpanningTree validate_spanning_tree(const Graph& g, std::initializer_list<int> edge_set,
                                    int root) {
    return validate_spanning_tree(g, std::span<const int>(edge_set.begin(), edge_set.size()),
                                  root);
}

SpanningTree reroot(const Graph& g, const SpanningTree& t, int new_root) {
    return validate_spanning_tree(g, t.edge_indices(), new_root);
}

std::vector<int> tree_path(const SpanningTree& t, int u, int w) {
    std::vector<int> from_u;
    std::vector<int> from_w;
    while (t.depth(u) > t.depth(w)) {
        from_u.push_back(t.parent_edge(u));
        u = t.parent(u);
    }
    while (t.depth(w) > t.depth(u)) {
        from_w.push_back(t.parent_edge(w));
        w = t.parent(w);
    }
    while (u != w) {
        from_u.push_back(t.parent_edge(u));
        from_w.push_back(t.parent_edge(w));
        u = t.parent(u);
        w = t.parent(w);
    }
    from_u.insert(from_u.end(), from_w.rbegin(), from_w.rend());
    return from_u;
}

SpanningTree star_tree(const Graph& g, int center) {
    if (center < 0 || center >= g.vertex_count())
        throw std::invalid_argument("center " + std::to_string(center) + " out of range");
    if (!g.is_universal(center))
        throw std::invalid_argument("graph admits no star tree at this vertex");
    std::vector<int> edges;
    edges.reserve(static_cast<std::size_t>(g.degree(center)));
    for (const IncidentEdge& ie : g.adjacency(center)) edges.push_back(ie.edge);
    return validate_spanning_tree(g, edges, center);
}

SpanningTree transfer_spanning_tree(const Graph& from, const SpanningTree& t,
                                    const Graph& to) {
    std::vector<int> edges;
    edges.reserve(static_cast<std::size_t>(to.vertex_count()) - 1);
    t.tree_edges().for_each([&](int e) {
        const VertexPair p = from.endpoints(e);
        const int mapped = to.find_edge(p.u, p.w);
        if (mapped == -1)
            throw std::invalid_argument("tree edge (" + std::to_string(p.u) + "," +
                                        std::to_string(p.w) + ") missing from target graph");
        edges.push_back(mapped);
    });
    return validate_spanning_tree(to, edges, t.root());
}

}  // namespace mstci

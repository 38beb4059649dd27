#include "mstci/tree_cycle.hpp"

#include <stdexcept>
#include <string>

namespace mstci {

TreeCycle fundamental_cycle(const Graph& g, const SpanningTree& t, int e) {
    if (e < 0 || e >= g.edge_count())
        throw std::invalid_argument("edge index " + std::to_string(e) + " out of range");
    if (t.contains(e))
        throw std::invalid_argument("edge " + std::to_string(e) +
                                    " is a tree edge and induces no cycle");
    const VertexPair p = g.endpoints(e);
    const std::vector<int> path = tree_path(t, p.u, p.w);
    TreeCycle c;
    c.cycle_edge = e;
    c.path_edges = EdgeSet(g.edge_count());
    for (int pe : path) c.path_edges.set(pe);
    c.length = static_cast<int>(path.size()) + 1;
    return c;
}

std::vector<TreeCycle> all_tree_cycles(const Graph& g, const SpanningTree& t) {
    std::vector<TreeCycle> cycles;
    cycles.reserve(static_cast<std::size_t>(g.edge_count() - (g.vertex_count() - 1)));
    for (int e = 0; e < g.edge_count(); ++e)
        if (!t.contains(e)) cycles.push_back(fundamental_cycle(g, t, e));
    return cycles;
}

std::vector<int> cycle_vertices(const Graph& g, const SpanningTree& t,
                                const TreeCycle& c) {
    const VertexPair p = g.endpoints(c.cycle_edge);
    const std::vector<int> path = tree_path(t, p.u, p.w);
    std::vector<int> vertices{p.u};
    int at = p.u;
    for (int e : path) {
        const VertexPair q = g.endpoints(e);
        at = (q.u == at) ? q.w : q.u;
        vertices.push_back(at);
    }
    return vertices;
}

std::vector<char> cycle_vertex_mask(const Graph& g, const SpanningTree& t,
                                    const TreeCycle& c) {
    std::vector<char> mask(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : cycle_vertices(g, t, c)) mask[static_cast<std::size_t>(v)] = 1;
    return mask;
}

namespace {

int tree_distance(const SpanningTree& t, int u, int w) {
    int d = 0;
    while (t.depth(u) > t.depth(w)) {
        u = t.parent(u);
        ++d;
    }
    while (t.depth(w) > t.depth(u)) {
        w = t.parent(w);
        ++d;
    }
    while (u != w) {
        u = t.parent(u);
        w = t.parent(w);
        d += 2;
    }
    return d;
}

}  // namespace

int closest_point(const Graph& g, const SpanningTree& t, int v, const TreeCycle& c) {
    int best = -1;
    int best_dist = 0;
    for (int u : cycle_vertices(g, t, c)) {
        const int d = tree_distance(t, v, u);
        if (best == -1 || d < best_dist) {
            best = u;
            best_dist = d;
        }
    }
    return best;
}

std::vector<int> ClosestPointSets::sizes() const {
    std::vector<int> q;
    q.reserve(sets.size());
    for (const auto& s : sets) q.push_back(static_cast<int>(s.size()));
    return q;
}

ClosestPointSets closest_point_sets(const Graph& g, const SpanningTree& t,
                                    const TreeCycle& c) {
    ClosestPointSets out;
    out.vertices = cycle_vertices(g, t, c);
    out.sets.assign(out.vertices.size(), {});
    std::vector<int> slot(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < out.vertices.size(); ++i)
        slot[static_cast<std::size_t>(out.vertices[i])] = static_cast<int>(i);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (slot[static_cast<std::size_t>(v)] != -1) continue;  // on the cycle
        const int cp = closest_point(g, t, v, c);
        out.sets[static_cast<std::size_t>(slot[static_cast<std::size_t>(cp)])].push_back(v);
    }
    return out;
}

}  // namespace mstci

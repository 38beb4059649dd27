#include "mstci/intersection.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace mstci {

bool cycles_intersect(const TreeCycle& c1, const TreeCycle& c2) {
    return c1.cycle_edge != c2.cycle_edge && c1.path_edges.intersects(c2.path_edges);
}

long long cycle_intersection_number(std::span<const TreeCycle> cycles,
                                    const TreeCycle& c) {
    long long count = 0;
    for (const TreeCycle& other : cycles)
        if (cycles_intersect(c, other)) ++count;
    return count;
}

long long tree_intersection_number(const Graph& g, const SpanningTree& t) {
    const std::vector<TreeCycle> cycles = all_tree_cycles(g, t);
    long long pairs = 0;
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i + 1; j < cycles.size(); ++j)
            if (cycles[i].path_edges.intersects(cycles[j].path_edges)) ++pairs;
    return pairs;
}

CycleClass classify(const Graph& g, const SpanningTree& t, const TreeCycle& c,
                    const TreeCycle& c2) {
    if (c.cycle_edge == c2.cycle_edge)
        throw std::invalid_argument("classify requires two distinct tree-cycles");
    const std::vector<char> on_c = cycle_vertex_mask(g, t, c);
    const VertexPair p = g.endpoints(c2.cycle_edge);
    const int endpoints_on_c = (on_c[static_cast<std::size_t>(p.u)] ? 1 : 0) +
                               (on_c[static_cast<std::size_t>(p.w)] ? 1 : 0);
    if (endpoints_on_c == 2) return CycleClass::Internal;
    if (!cycles_intersect(c, c2)) return CycleClass::Disjoint;
    return endpoints_on_c == 1 ? CycleClass::External : CycleClass::Transit;
}

IntersectionReport intersection_report(const Graph& g, const SpanningTree& t) {
    const std::vector<TreeCycle> cycles = all_tree_cycles(g, t);
    IntersectionReport report;
    report.per_cycle.reserve(cycles.size());
    for (const TreeCycle& c : cycles) {
        IntersectionReport::PerCycle row;
        row.cycle_edge = c.cycle_edge;
        row.length = c.length;
        for (const TreeCycle& other : cycles) {
            if (other.cycle_edge == c.cycle_edge) continue;
            switch (classify(g, t, c, other)) {
                case CycleClass::Internal: ++row.internal_count; break;
                case CycleClass::External: ++row.external_count; break;
                case CycleClass::Transit: ++row.transit_count; break;
                case CycleClass::Disjoint: break;
            }
        }
        row.intersections = row.internal_count + row.external_count + row.transit_count;
        report.total += row.intersections;
        report.per_cycle.push_back(row);
    }
    report.total /= 2;
    return report;
}

long long complete_graph_cycle_formula(int n, int k, std::span<const int> q) {
    if (k < 3 || k > n)
        throw std::invalid_argument("cycle length k=" + std::to_string(k) +
                                    " out of range [3, n]");
    if (static_cast<int>(q.size()) != k)
        throw std::invalid_argument("expected k=" + std::to_string(k) +
                                    " closest-point-set sizes, got " +
                                    std::to_string(q.size()));
    long long q_sum = 0;
    for (int qi : q) q_sum += qi;
    if (q_sum != n - k)
        throw std::invalid_argument("closest-point-set sizes sum to " +
                                    std::to_string(q_sum) + ", expected n-k=" +
                                    std::to_string(n - k));
    const long long internal = static_cast<long long>(k - 3) * k / 2;
    const long long external = static_cast<long long>(n - k) * (k - 1);
    long long transit2 = 0;  // twice the transit count
    for (int qi : q) transit2 += static_cast<long long>(qi) * (n - k - qi);
    return internal + external + transit2 / 2;
}

long long star_cycle_intersection(const Graph& g, int center, int e) {
    if (!g.is_universal(center))
        throw std::invalid_argument("graph admits no star tree at this vertex");
    const VertexPair p = g.endpoints(e);
    if (p.u == center || p.w == center)
        throw std::invalid_argument("edge " + std::to_string(e) +
                                    " is a star tree edge, not a cycle edge");
    return static_cast<long long>(g.degree(p.u)) + g.degree(p.w) - 4;
}

long long star_tree_intersection(const Graph& g, int center) {
    if (!g.is_universal(center))
        throw std::invalid_argument("graph admits no star tree at this vertex");
    const int n = g.vertex_count();
    const long long m = g.edge_count();
    long long by_vertex = 0;   // sum over u != center of (d(u)-1)(d(u)-2)
    long long norm_sq = 0;     // ||d||^2
    for (int u = 0; u < n; ++u) {
        const long long d = g.degree(u);
        norm_sq += d * d;
        if (u != center) by_vertex += (d - 1) * (d - 2);
    }
    const long long form1 = by_vertex / 2;
    const long long form2 =
        (norm_sq - 6 * m - static_cast<long long>(n - 1) * (n - 6)) / 2;
    if (form1 != form2)
        throw std::logic_error("star intersection closed forms disagree: " +
                               std::to_string(form1) + " vs " + std::to_string(form2));
    return form1;
}

std::pair<long long, long long> edge_removal_delta(const Graph& g, const SpanningTree& t,
                                                   int e) {
    if (t.contains(e))
        throw std::invalid_argument("edge " + std::to_string(e) +
                                    " is a tree edge; removing it would disconnect T");
    const TreeCycle c = fundamental_cycle(g, t, e);
    const std::vector<TreeCycle> cycles = all_tree_cycles(g, t);
    const long long cycle_number = cycle_intersection_number(cycles, c);
    const long long before = tree_intersection_number(g, t);

    const int removed[] = {e};
    const Graph reduced = remove_edges(g, removed);
    const SpanningTree t2 = transfer_spanning_tree(g, t, reduced);
    const long long after = tree_intersection_number(reduced, t2);

    if (after != before - cycle_number)
        throw std::logic_error("edge-removal identity violated: " + std::to_string(after) +
                               " != " + std::to_string(before) + " - " +
                               std::to_string(cycle_number));
    return {after, cycle_number};
}

}  // namespace mstci

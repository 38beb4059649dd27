#pragma once

#include <span>
#include <utility>
#include <vector>

#include "mstci/graph.hpp"
#include "mstci/spanning_tree.hpp"
#include "mstci/tree_cycle.hpp"

namespace mstci {

// Classification of an intersecting tree-cycle c2 relative to c, by how many
// endpoints of c2's cycle edge lie on c: both (internal), exactly one
// (external), none (transit). Non-intersecting pairs are disjoint.
enum class CycleClass { Internal, External, Transit, Disjoint };

// True iff the two distinct tree-cycles of one tree share at least one tree
// edge. Self-pairs are excluded by definition.
bool cycles_intersect(const TreeCycle& c1, const TreeCycle& c2);

// Number of tree-cycles in `cycles` intersecting c.
long long cycle_intersection_number(std::span<const TreeCycle> cycles,
                                    const TreeCycle& c);

// Tree intersection number: the count of unordered pairs of distinct
// tree-cycles with non-empty intersection. This naive pairwise computation
// is the project-wide oracle that every closed form is checked against.
long long tree_intersection_number(const Graph& g, const SpanningTree& t);

CycleClass classify(const Graph& g, const SpanningTree& t, const TreeCycle& c,
                    const TreeCycle& c2);

// Per-cycle intersection numbers with the internal/external/transit
// breakdown, plus the tree intersection number.
struct IntersectionReport {
    struct PerCycle {
        int cycle_edge = -1;
        int length = 0;
        long long intersections = 0;
        long long internal_count = 0;
        long long external_count = 0;
        long long transit_count = 0;
    };
    std::vector<PerCycle> per_cycle;
    long long total = 0;
};

IntersectionReport intersection_report(const Graph& g, const SpanningTree& t);

// Closed form for the cycle intersection number in a complete graph K_n:
//   (k-3)k/2 + (n-k)(k-1) + (1/2) sum_i q_i (n-k-q_i)
// where k is the cycle length and q the closest-point-set sizes along the
// cycle. Only valid when the host graph is complete. Throws when the q
// vector is inconsistent (|q| != k or sum != n-k) or k is out of range.
long long complete_graph_cycle_formula(int n, int k, std::span<const int> q);

// Cycle intersection number of the star-tree cycle through non-tree edge
// e = (u, w): d(u) + d(w) - 4, degrees taken in g. Requires a star tree at
// center; throws if e is incident to the center (a tree edge).
long long star_cycle_intersection(const Graph& g, int center, int e);

// Tree intersection number of the star tree at center, by two closed forms
// that must agree:
//   (1/2) sum_{u != center} (d(u)-1)(d(u)-2)
//   (1/2) [ ||d||^2 - 6m - (n-1)(n-6) ]
long long star_tree_intersection(const Graph& g, int center);

// For a non-tree edge e with tree-cycle c, returns the pair
// (tree intersection number of t in g - e, cycle intersection number of c).
// The identity  |g-e| = |g| - |c|  is verified internally.
std::pair<long long, long long> edge_removal_delta(const Graph& g,
                                                   const SpanningTree& t, int e);

}  // namespace mstci

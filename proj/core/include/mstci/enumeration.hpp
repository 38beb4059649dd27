#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mstci/graph.hpp"
#include "mstci/rng.hpp"
#include "mstci/spanning_tree.hpp"

namespace mstci {

// A labeled tree given by its edge list (vertices 0..n-1, n-1 edges).
using TreeEdges = std::vector<VertexPair>;

// Visits each spanning tree of g exactly once, as a sorted list of edge
// indices. Binary edge partition: each undecided edge is either forced in
// (if it closes no cycle) or forced out (if the rest of the graph stays
// connected without it, i.e. it is not a bridge of the remainder). Returning
// false from the visitor stops the enumeration.
void for_each_spanning_tree(const Graph& g,
                            const std::function<bool(const std::vector<int>&)>& visit);

// Materialized enumeration. Throws when the tree count exceeds `cap`.
std::vector<std::vector<int>> all_spanning_trees(const Graph& g,
                                                 std::uint64_t cap = 1'000'000);

// Spanning-tree count by the determinant of a Laplacian cofactor, computed
// with fraction-free (Bareiss) integer elimination. Returns 0 for
// disconnected graphs. Exact for desk-scale graphs (intermediate values are
// held in 128-bit integers).
std::int64_t kirchhoff_count(const Graph& g);

// Standard Prufer bijection on labeled trees with n = seq.size() + 2.
TreeEdges prufer_decode(std::span<const int> seq);
std::vector<int> prufer_encode(const TreeEdges& tree);

// Canonical string form of a free tree: AHU parenthesization rooted at the
// tree center (lexicographic minimum of the two rootings for bicentral
// trees). Two labeled trees get the same code iff they are isomorphic.
struct TreeCode {
    std::string code;
    auto operator<=>(const TreeCode&) const = default;
    int order() const;  // number of vertices
};

TreeCode canonical_code(const TreeEdges& tree);

// A labeled representative of the code's isomorphism class, vertices
// numbered in preorder. canonical_code(tree_from_code(c)) == c.
TreeEdges tree_from_code(const TreeCode& code);

// One labeled representative per isomorphism class of trees on n vertices,
// obtained by enumerating all n^(n-2) Prufer sequences and deduplicating by
// canonical code. Practical for n <= 9 or so.
std::vector<TreeEdges> all_free_trees(int n);

// Random-attachment tree: vertices join one at a time, each attached to a
// uniformly chosen earlier vertex. Not uniform over labeled trees. When
// leaf_constrained >= 0, that vertex is attached last, so its degree is
// exactly 1.
TreeEdges random_tree(int n, SplitMix64& rng, int leaf_constrained = -1);

// All spanning trees differing from t by exactly one edge replacement
// (remove tree edge e, insert non-tree edge e' whose fundamental cycle
// contains e). Each neighbor is yielded once.
std::vector<SpanningTree> st_neighbors(const Graph& g, const SpanningTree& t);

// Visitor form; arguments are (removed edge, inserted edge, neighbor edge
// indices). Returning false stops the scan.
void for_each_st_neighbor(const Graph& g, const SpanningTree& t,
                          const std::function<bool(int, int, const std::vector<int>&)>& visit);

struct Minimization {
    long long best_value = 0;
    std::vector<std::vector<int>> minimizers;  // edge-index lists
    std::uint64_t explored = 0;                // trees evaluated
    std::uint64_t steps = 0;                   // improving moves (local search)
};

// Global minimum of the tree intersection number over all spanning trees,
// with every minimizer. Throws when the spanning-tree count exceeds `cap`,
// advising local search.
Minimization exact_minimize(const Graph& g, std::uint64_t cap = 1'000'000);

// Steepest-descent local search over the spanning-tree graph, starting at
// t0, until no neighbor strictly improves. Ties between equally good moves
// are broken by lowest replaced-edge index, then lowest inserted-edge index,
// so traces are reproducible.
Minimization local_search(const Graph& g, const SpanningTree& t0);

}  // namespace mstci

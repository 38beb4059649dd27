#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "mstci/enumeration.hpp"
#include "mstci/graph.hpp"
#include "mstci/rng.hpp"
#include "mstci/spanning_tree.hpp"

namespace mstci {

// A search instance in reduced form: a graph with universal vertex `center`,
// a candidate spanning tree rooted there, the set of candidate
// non-interbranch cycle edges, and the subset actually present in the graph.
struct ReducedInstance {
    Graph graph;
    SpanningTree tree;
    std::vector<VertexPair> candidate_edges;
    std::vector<VertexPair> phi;
    int center = 0;
};

struct SearchOutcome {
    std::uint64_t instances = 0;
    std::vector<ReducedInstance> counterexamples;  // expected empty
    std::uint64_t equalities = 0;                  // instances with equal values
    std::uint64_t seed = 0;                        // random search only
    std::chrono::milliseconds wall_time{0};
};

struct SearchOptions {
    int jobs = 0;           // worker threads; 0 = hardware concurrency
    int candidate_cap = 30; // exhaustive search enumerates 2^|candidates|
};

// True iff the non-tree edge e = (u, w), with u, w distinct from the root
// center v, induces a tree-cycle whose closest point to v is neither u nor
// w; equivalently, u and w are incomparable in t rooted at v. Throws if e is
// a tree edge or incident to v.
bool is_interbranch(const Graph& g, const SpanningTree& t, int e);

// All interbranch cycle-edges of t with respect to its root.
std::vector<int> interbranch_set(const Graph& g, const SpanningTree& t);

// One entry per tree neighbor w of the root v: the subtree spanned by v, w
// and every vertex whose root path passes through w. Distinct subtrees share
// only v.
struct PrincipalSubtree {
    int branch = -1;            // w
    std::vector<int> vertices;  // sorted, includes the root
};

std::vector<PrincipalSubtree> principal_subtrees(const SpanningTree& t);

// With no interbranch cycle-edges, the tree intersection number splits as
// the sum of the intersection numbers of the principal subtrees inside the
// subgraphs they span. Verifies that identity exactly with the oracle on
// both sides. Throws if interbranch edges are present.
bool partition_check(const Graph& g, const SpanningTree& t);

// Instance generator for the exhaustive search: put a new vertex v on top of
// the tree t' (attached at w), complete v to a universal vertex, and list
// the candidate cycle edges, i.e. non-tree pairs of t'-vertices in
// ancestor-descendant relation under the root v.
struct GeneratedInstance {
    Graph base;                           // tree + star edges, no candidates yet
    std::vector<VertexPair> tree_pairs;   // candidate tree T, includes (v, w)
    std::vector<VertexPair> candidates;   // lexicographically ordered
    int center = 0;                       // v = n-1
    int attach = 0;                       // w
};

GeneratedInstance generate_graph_alg1(int w, const TreeEdges& tprime);

// Exhaustive search over reduced instances on n vertices: every free tree on
// n-1 vertices, every attachment point, every candidate subset. Each
// instance compares the oracle intersection number of the candidate tree
// against the star formula; strict "<" is a counterexample (re-verified with
// the oracle before being reported), equality is tallied.
SearchOutcome counterexample_search(int n, const SearchOptions& options = {});

// Randomized search: k random leaf-rooted trees; for each density, a
// Bernoulli subset of the candidate edges is drawn and the same check runs.
// Instances = k * densities.size(). A pure function of (n, k, densities,
// seed): per-sample generator streams are split by sample index, so results
// do not depend on scheduling.
SearchOutcome counterexample_random_search(int n, int samples,
                                           const std::vector<double>& densities,
                                           std::uint64_t seed,
                                           const SearchOptions& options = {});

// Random reduced instance (graph = tree + star at the center + Bernoulli
// subset of candidate edges). Center is vertex 0; when center_leaf is set
// the tree meets it in exactly one edge.
ReducedInstance random_reduced_instance(int n, double density, SplitMix64& rng,
                                        bool center_leaf = false);

// Per-edge inequality behind the interbranch reduction: removing interbranch
// edges one at a time, each removed edge e = (u, w) satisfies
// cycle#(c'_e in t) >= d(u) + d(w) - 4 = cycle#(c_e in star), and both trees
// obey the edge-removal identity at every step.
bool reduction_lemma_check(const Graph& g, const SpanningTree& t);

// The two-graph construction showing the tree intersection number is not
// determined by the tree shape alone: in G = K_n the star beats the re-hung
// star strictly, while in H (K_n with n-3 edges stripped from one vertex)
// the two trees tie.
struct IntrinsicInvariantExample {
    Graph g;                      // K_n
    Graph h;                      // K_n minus n-3 edges at the almost-disconnected vertex
    std::vector<VertexPair> t1;   // star at vertex 0
    std::vector<VertexPair> t2;   // star with vertex 1 re-hung under vertex 2
    long long g_t1 = 0, g_t2 = 0; // intersection numbers in G
    long long h_t1 = 0, h_t2 = 0; // intersection numbers in H
};

IntrinsicInvariantExample intrinsic_invariant_construction(int n);

}  // namespace mstci

#include "mstci/conjecture.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "mstci/intersection.hpp"
#include "mstci/tree_cycle.hpp"

namespace mstci {

namespace {

// Rooted view of a labeled tree given as an edge list; `edge_pos[u]` is the
// position (within the edge list) of the edge joining u to its parent.
struct RootedView {
    std::vector<int> parent;
    std::vector<int> depth;
    std::vector<int> edge_pos;
};

RootedView root_tree(const TreeEdges& tree, int n, int root) {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < tree.size(); ++i) {
        const VertexPair p = tree[i];
        adj[static_cast<std::size_t>(p.u)].push_back({p.w, static_cast<int>(i)});
        adj[static_cast<std::size_t>(p.w)].push_back({p.u, static_cast<int>(i)});
    }
    RootedView rv;
    rv.parent.assign(static_cast<std::size_t>(n), -1);
    rv.depth.assign(static_cast<std::size_t>(n), -1);
    rv.edge_pos.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> queue{root};
    rv.depth[static_cast<std::size_t>(root)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (const auto& [u, pos] : adj[static_cast<std::size_t>(v)]) {
            if (rv.depth[static_cast<std::size_t>(u)] != -1) continue;
            rv.parent[static_cast<std::size_t>(u)] = v;
            rv.depth[static_cast<std::size_t>(u)] = rv.depth[static_cast<std::size_t>(v)] + 1;
            rv.edge_pos[static_cast<std::size_t>(u)] = pos;
            queue.push_back(u);
        }
    }
    if (static_cast<int>(queue.size()) != n || static_cast<int>(tree.size()) != n - 1)
        throw std::invalid_argument("edge list is not a tree on " + std::to_string(n) +
                                    " vertices");
    return rv;
}

// a and b are in ancestor-descendant relation.
bool comparable(const RootedView& rv, int a, int b) {
    if (rv.depth[static_cast<std::size_t>(a)] > rv.depth[static_cast<std::size_t>(b)])
        std::swap(a, b);
    while (rv.depth[static_cast<std::size_t>(b)] > rv.depth[static_cast<std::size_t>(a)])
        b = rv.parent[static_cast<std::size_t>(b)];
    return a == b;
}

EdgeSet path_mask(const RootedView& rv, int tree_edges, int a, int b) {
    EdgeSet mask(tree_edges);
    while (rv.depth[static_cast<std::size_t>(a)] > rv.depth[static_cast<std::size_t>(b)]) {
        mask.set(rv.edge_pos[static_cast<std::size_t>(a)]);
        a = rv.parent[static_cast<std::size_t>(a)];
    }
    while (rv.depth[static_cast<std::size_t>(b)] > rv.depth[static_cast<std::size_t>(a)]) {
        mask.set(rv.edge_pos[static_cast<std::size_t>(b)]);
        b = rv.parent[static_cast<std::size_t>(b)];
    }
    while (a != b) {
        mask.set(rv.edge_pos[static_cast<std::size_t>(a)]);
        mask.set(rv.edge_pos[static_cast<std::size_t>(b)]);
        a = rv.parent[static_cast<std::size_t>(a)];
        b = rv.parent[static_cast<std::size_t>(b)];
    }
    return mask;
}

std::vector<VertexPair> comparable_non_tree_pairs(const TreeEdges& tree, int n,
                                                  const RootedView& rv, int center) {
    std::vector<std::vector<char>> is_tree_edge(static_cast<std::size_t>(n),
                                                std::vector<char>(static_cast<std::size_t>(n), 0));
    for (const VertexPair& p : tree) {
        is_tree_edge[static_cast<std::size_t>(p.u)][static_cast<std::size_t>(p.w)] = 1;
        is_tree_edge[static_cast<std::size_t>(p.w)][static_cast<std::size_t>(p.u)] = 1;
    }
    std::vector<VertexPair> out;
    for (int a = 0; a < n; ++a) {
        if (a == center) continue;
        for (int b = a + 1; b < n; ++b) {
            if (b == center) continue;
            if (is_tree_edge[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
            if (comparable(rv, a, b)) out.push_back({a, b});
        }
    }
    return out;
}

// Evaluates reduced instances that share a tree and differ only in the
// candidate subset phi. Cycle paths are masks over tree-edge positions, so
// they are independent of how the instance graph numbers its edges.
struct ReducedEvaluator {
    int n = 0;
    int center = 0;
    TreeEdges tree_pairs;
    std::vector<VertexPair> candidates;
    std::vector<EdgeSet> base_paths;   // cycles of the star completion edges
    std::vector<EdgeSet> cand_paths;   // cycles of the candidate edges
    std::vector<long long> base_degree;

    // scratch, reused across instances
    mutable std::vector<long long> degree_scratch;

    void build(const TreeEdges& tree, int n_vertices, int center_vertex) {
        n = n_vertices;
        center = center_vertex;
        tree_pairs = tree;
        const RootedView rv = root_tree(tree, n, center);
        candidates = comparable_non_tree_pairs(tree, n, rv, center);

        base_degree.assign(static_cast<std::size_t>(n), 0);
        for (const VertexPair& p : tree) {
            ++base_degree[static_cast<std::size_t>(p.u)];
            ++base_degree[static_cast<std::size_t>(p.w)];
        }
        const int tree_edges = n - 1;
        base_paths.clear();
        for (int u = 0; u < n; ++u) {
            if (u == center) continue;
            const bool tree_neighbor =
                rv.parent[static_cast<std::size_t>(u)] == center &&
                rv.depth[static_cast<std::size_t>(u)] == 1;
            if (tree_neighbor) continue;  // (center,u) is the tree edge, not a cycle edge
            base_paths.push_back(path_mask(rv, tree_edges, center, u));
            ++base_degree[static_cast<std::size_t>(u)];
            ++base_degree[static_cast<std::size_t>(center)];
        }
        cand_paths.clear();
        cand_paths.reserve(candidates.size());
        for (const VertexPair& p : candidates)
            cand_paths.push_back(path_mask(rv, tree_edges, p.u, p.w));
    }

    // (oracle intersection number of the candidate tree,
    //  star formula value) for the instance selecting `selected` candidates.
    std::pair<long long, long long> evaluate(const std::vector<char>& selected) const {
        std::vector<const EdgeSet*> cycles;
        cycles.reserve(base_paths.size() + cand_paths.size());
        for (const EdgeSet& p : base_paths) cycles.push_back(&p);
        for (std::size_t i = 0; i < cand_paths.size(); ++i)
            if (selected[i]) cycles.push_back(&cand_paths[i]);
        long long oracle = 0;
        for (std::size_t i = 0; i < cycles.size(); ++i)
            for (std::size_t j = i + 1; j < cycles.size(); ++j)
                if (cycles[i]->intersects(*cycles[j])) ++oracle;

        degree_scratch = base_degree;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (!selected[i]) continue;
            ++degree_scratch[static_cast<std::size_t>(candidates[i].u)];
            ++degree_scratch[static_cast<std::size_t>(candidates[i].w)];
        }
        long long star2 = 0;
        for (int u = 0; u < n; ++u) {
            if (u == center) continue;
            const long long d = degree_scratch[static_cast<std::size_t>(u)];
            star2 += (d - 1) * (d - 2);
        }
        return {oracle, star2 / 2};
    }

    std::vector<VertexPair> selected_pairs(const std::vector<char>& selected) const {
        std::vector<VertexPair> phi;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (selected[i]) phi.push_back(candidates[i]);
        return phi;
    }
};

ReducedInstance make_reduced_instance(int n, const TreeEdges& tree_pairs, int center,
                                      std::vector<VertexPair> candidates,
                                      std::vector<VertexPair> phi) {
    std::vector<VertexPair> all = tree_pairs;
    std::vector<char> center_adjacent(static_cast<std::size_t>(n), 0);
    for (const VertexPair& p : tree_pairs) {
        if (p.u == center) center_adjacent[static_cast<std::size_t>(p.w)] = 1;
        if (p.w == center) center_adjacent[static_cast<std::size_t>(p.u)] = 1;
    }
    for (int u = 0; u < n; ++u)
        if (u != center && !center_adjacent[static_cast<std::size_t>(u)])
            all.push_back({center, u});
    for (const VertexPair& p : phi) all.push_back(p);

    ReducedInstance inst;
    inst.graph = build_graph(n, all);
    std::vector<int> tree_idx(static_cast<std::size_t>(n) - 1);
    std::iota(tree_idx.begin(), tree_idx.end(), 0);  // tree pairs occupy the first slots
    inst.tree = validate_spanning_tree(inst.graph, tree_idx, center);
    inst.candidate_edges = std::move(candidates);
    inst.phi = std::move(phi);
    inst.center = center;
    return inst;
}

// Full-oracle confirmation of a suspected counterexample: both intersection
// numbers recomputed from scratch on the materialized instance.
bool confirm_counterexample(const ReducedInstance& inst) {
    const long long tree_value = tree_intersection_number(inst.graph, inst.tree);
    const SpanningTree star = star_tree(inst.graph, inst.center);
    const long long star_value = tree_intersection_number(inst.graph, star);
    if (star_value != star_tree_intersection(inst.graph, inst.center))
        throw std::logic_error("star formula disagrees with the oracle on a reduced instance");
    return tree_value < star_value;
}

struct KeyedCounterexample {
    std::uint64_t key0 = 0, key1 = 0;
    ReducedInstance instance;
};

void run_parallel(std::uint64_t items, int jobs, const std::function<void(std::uint64_t)>& work) {
    int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (workers == 1 || items <= 1) {
        for (std::uint64_t i = 0; i < items; ++i) work(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            if (failed.load(std::memory_order_relaxed)) return;
            const std::uint64_t i = next.fetch_add(1);
            if (i >= items) return;
            try {
                work(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int spawn = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), items));
    pool.reserve(static_cast<std::size_t>(spawn));
    for (int i = 0; i < spawn; ++i) pool.emplace_back(body);
    for (std::thread& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

bool is_interbranch(const Graph& g, const SpanningTree& t, int e) {
    const int v = t.root();
    if (!g.is_universal(v))
        throw std::invalid_argument("graph admits no star tree at the tree root");
    if (t.contains(e))
        throw std::invalid_argument("edge " + std::to_string(e) +
                                    " is a tree edge, not a cycle edge");
    const VertexPair p = g.endpoints(e);
    if (p.u == v || p.w == v)
        throw std::invalid_argument("edge " + std::to_string(e) +
                                    " is incident to the star center");
    const TreeCycle c = fundamental_cycle(g, t, e);
    const int cp = closest_point(g, t, v, c);
    return cp != p.u && cp != p.w;
}

std::vector<int> interbranch_set(const Graph& g, const SpanningTree& t) {
    const int v = t.root();
    if (!g.is_universal(v))
        throw std::invalid_argument("graph admits no star tree at the tree root");
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (t.contains(e)) continue;
        const VertexPair p = g.endpoints(e);
        if (p.u == v || p.w == v) continue;  // never interbranch
        if (is_interbranch(g, t, e)) out.push_back(e);
    }
    return out;
}

std::vector<PrincipalSubtree> principal_subtrees(const SpanningTree& t) {
    const int v = t.root();
    const int n = t.vertex_count();
    std::vector<std::vector<int>> members;
    std::vector<int> branch_of(static_cast<std::size_t>(n), -1);
    std::vector<int> branches;
    for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        int x = u;
        while (t.depth(x) > 1) x = t.parent(x);
        branch_of[static_cast<std::size_t>(u)] = x;
    }
    for (int u = 0; u < n; ++u)
        if (t.depth(u) == 1) branches.push_back(u);
    std::sort(branches.begin(), branches.end());
    std::vector<PrincipalSubtree> out;
    out.reserve(branches.size());
    for (int w : branches) {
        PrincipalSubtree ps;
        ps.branch = w;
        ps.vertices.push_back(v);
        for (int u = 0; u < n; ++u)
            if (u != v && branch_of[static_cast<std::size_t>(u)] == w)
                ps.vertices.push_back(u);
        std::sort(ps.vertices.begin(), ps.vertices.end());
        out.push_back(std::move(ps));
    }
    return out;
}

bool partition_check(const Graph& g, const SpanningTree& t) {
    if (!interbranch_set(g, t).empty())
        throw std::invalid_argument("partition identity requires no interbranch cycle-edges");
    const long long whole = tree_intersection_number(g, t);
    long long sum = 0;
    for (const PrincipalSubtree& ps : principal_subtrees(t)) {
        // induced subgraph on the subtree's vertex set, relabeled 0..|S|-1
        std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
        for (std::size_t i = 0; i < ps.vertices.size(); ++i)
            local[static_cast<std::size_t>(ps.vertices[i])] = static_cast<int>(i);
        std::vector<VertexPair> sub_edges;
        std::vector<int> sub_tree_idx;
        for (int e = 0; e < g.edge_count(); ++e) {
            const VertexPair p = g.endpoints(e);
            const int lu = local[static_cast<std::size_t>(p.u)];
            const int lw = local[static_cast<std::size_t>(p.w)];
            if (lu == -1 || lw == -1) continue;
            if (t.contains(e)) sub_tree_idx.push_back(static_cast<int>(sub_edges.size()));
            sub_edges.push_back({lu, lw});
        }
        const Graph sub = build_graph(static_cast<int>(ps.vertices.size()), sub_edges);
        const SpanningTree sub_tree =
            validate_spanning_tree(sub, sub_tree_idx, local[static_cast<std::size_t>(t.root())]);
        sum += tree_intersection_number(sub, sub_tree);
    }
    return sum == whole;
}

GeneratedInstance generate_graph_alg1(int w, const TreeEdges& tprime) {
    const int n_prime = static_cast<int>(tprime.size()) + 1;
    if (w < 0 || w >= n_prime)
        throw std::invalid_argument("attachment vertex " + std::to_string(w) +
                                    " out of range");
    const int v = n_prime;  // the new central vertex
    const int n = n_prime + 1;
    TreeEdges tree = tprime;
    tree.push_back({w, v});

    const RootedView rv = root_tree(tree, n, v);
    GeneratedInstance out;
    out.tree_pairs = tree;
    out.candidates = comparable_non_tree_pairs(tree, n, rv, v);
    out.center = v;
    out.attach = w;

    std::vector<VertexPair> base = tree;
    for (int u = 0; u < n_prime; ++u)
        if (u != w) base.push_back({v, u});
    out.base = build_graph(n, base);
    return out;
}

SearchOutcome counterexample_search(int n, const SearchOptions& options) {
    if (n < 4) throw std::invalid_argument("exhaustive search needs n >= 4");
    const auto start = std::chrono::steady_clock::now();
    const std::vector<TreeEdges> trees = all_free_trees(n - 1);
    const std::uint64_t items = trees.size() * static_cast<std::uint64_t>(n - 1);

    SearchOutcome outcome;
    std::vector<KeyedCounterexample> found;
    std::mutex merge_mutex;

    run_parallel(items, options.jobs, [&](std::uint64_t item) {
        const std::size_t tree_index = static_cast<std::size_t>(item / static_cast<std::uint64_t>(n - 1));
        const int w = static_cast<int>(item % static_cast<std::uint64_t>(n - 1));
        TreeEdges tree = trees[tree_index];
        tree.push_back({w, n - 1});

        ReducedEvaluator eval;
        eval.build(tree, n, n - 1);
        const std::size_t c = eval.candidates.size();
        if (static_cast<int>(c) > options.candidate_cap)
            throw std::invalid_argument("candidate set of size " + std::to_string(c) +
                                        " exceeds cap " + std::to_string(options.candidate_cap) +
                                        " (2^|candidates| instances would be enumerated)");

        std::uint64_t local_instances = 0;
        std::uint64_t local_equalities = 0;
        std::vector<KeyedCounterexample> local_found;
        std::vector<char> selected(c, 0);
        const std::uint64_t subsets = 1ULL << c;
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            for (std::size_t i = 0; i < c; ++i) selected[i] = (mask >> i) & 1;
            const auto [oracle, formula] = eval.evaluate(selected);
            ++local_instances;
            if (oracle == formula) {
                ++local_equalities;
            } else if (oracle < formula) {
                ReducedInstance inst = make_reduced_instance(
                    n, eval.tree_pairs, eval.center, eval.candidates,
                    eval.selected_pairs(selected));
                if (confirm_counterexample(inst))
                    local_found.push_back({item, mask, std::move(inst)});
            }
        }

        std::lock_guard<std::mutex> lock(merge_mutex);
        outcome.instances += local_instances;
        outcome.equalities += local_equalities;
        for (KeyedCounterexample& kc : local_found) found.push_back(std::move(kc));
    });

    std::sort(found.begin(), found.end(), [](const KeyedCounterexample& a, const KeyedCounterexample& b) {
        return a.key0 != b.key0 ? a.key0 < b.key0 : a.key1 < b.key1;
    });
    for (KeyedCounterexample& kc : found)
        outcome.counterexamples.push_back(std::move(kc.instance));
    outcome.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return outcome;
}

SearchOutcome counterexample_random_search(int n, int samples,
                                           const std::vector<double>& densities,
                                           std::uint64_t seed, const SearchOptions& options) {
    if (n < 4) throw std::invalid_argument("random search needs n >= 4");
    if (samples < 1) throw std::invalid_argument("sample count must be positive");
    for (double d : densities)
        if (!(d > 0.0 && d <= 1.0))
            throw std::invalid_argument("densities must lie in (0, 1]");

    const auto start = std::chrono::steady_clock::now();
    const SplitMix64 base(seed);
    SearchOutcome outcome;
    outcome.seed = seed;
    std::vector<KeyedCounterexample> found;
    std::mutex merge_mutex;

    run_parallel(static_cast<std::uint64_t>(samples), options.jobs, [&](std::uint64_t sample) {
        SplitMix64 rng = base.split(sample);
        const TreeEdges tree = random_tree(n, rng, 0);  // center 0 is a leaf of the tree

        ReducedEvaluator eval;
        eval.build(tree, n, 0);
        const std::size_t c = eval.candidates.size();

        std::uint64_t local_instances = 0;
        std::uint64_t local_equalities = 0;
        std::vector<KeyedCounterexample> local_found;
        std::vector<char> selected(c, 0);
        for (std::size_t di = 0; di < densities.size(); ++di) {
            for (std::size_t i = 0; i < c; ++i)
                selected[i] = rng.bernoulli(densities[di]) ? 1 : 0;
            const auto [oracle, formula] = eval.evaluate(selected);
            ++local_instances;
            if (oracle == formula) {
                ++local_equalities;
            } else if (oracle < formula) {
                ReducedInstance inst = make_reduced_instance(
                    n, eval.tree_pairs, eval.center, eval.candidates,
                    eval.selected_pairs(selected));
                if (confirm_counterexample(inst))
                    local_found.push_back({sample, di, std::move(inst)});
            }
        }

        std::lock_guard<std::mutex> lock(merge_mutex);
        outcome.instances += local_instances;
        outcome.equalities += local_equalities;
        for (KeyedCounterexample& kc : local_found) found.push_back(std::move(kc));
    });

    std::sort(found.begin(), found.end(), [](const KeyedCounterexample& a, const KeyedCounterexample& b) {
        return a.key0 != b.key0 ? a.key0 < b.key0 : a.key1 < b.key1;
    });
    for (KeyedCounterexample& kc : found)
        outcome.counterexamples.push_back(std::move(kc.instance));
    outcome.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return outcome;
}

ReducedInstance random_reduced_instance(int n, double density, SplitMix64& rng,
                                        bool center_leaf) {
    if (n < 2) throw std::invalid_argument("reduced instance needs n >= 2");
    const int center = 0;
    const TreeEdges tree = random_tree(n, rng, center_leaf ? center : -1);
    const RootedView rv = root_tree(tree, n, center);
    std::vector<VertexPair> candidates = comparable_non_tree_pairs(tree, n, rv, center);
    std::vector<VertexPair> phi;
    for (const VertexPair& p : candidates)
        if (rng.bernoulli(density)) phi.push_back(p);
    return make_reduced_instance(n, tree, center, std::move(candidates), std::move(phi));
}

bool reduction_lemma_check(const Graph& g, const SpanningTree& t) {
    const int v = t.root();
    if (!g.is_universal(v))
        throw std::invalid_argument("graph admits no star tree at the tree root");

    std::vector<VertexPair> delta;
    for (int e : interbranch_set(g, t)) delta.push_back(g.endpoints(e));

    Graph current = g;
    SpanningTree tree = t;
    for (const VertexPair& uw : delta) {
        const int e = current.find_edge(uw.u, uw.w);
        const std::vector<TreeCycle> tree_cycles = all_tree_cycles(current, tree);
        const TreeCycle c_tree = fundamental_cycle(current, tree, e);
        const long long lhs = cycle_intersection_number(tree_cycles, c_tree);
        const long long star_formula = star_cycle_intersection(current, v, e);
        if (lhs < star_formula) return false;  // per-edge inequality

        // the star formula must match the oracle on its own tree
        const SpanningTree star = star_tree(current, v);
        const std::vector<TreeCycle> star_cycles = all_tree_cycles(current, star);
        const TreeCycle c_star = fundamental_cycle(current, star, e);
        if (cycle_intersection_number(star_cycles, c_star) != star_formula) return false;

        // both trees obey the edge-removal identity at this step
        const long long before_tree = tree_intersection_number(current, tree);
        const long long before_star = tree_intersection_number(current, star);
        const long long star_cycle_number = star_formula;
        const int removed[] = {e};
        const Graph next = remove_edges(current, removed);
        const SpanningTree next_tree = transfer_spanning_tree(current, tree, next);
        const SpanningTree next_star = transfer_spanning_tree(current, star, next);
        if (tree_intersection_number(next, next_tree) != before_tree - lhs) return false;
        if (tree_intersection_number(next, next_star) != before_star - star_cycle_number)
            return false;

        current = next;
        tree = next_tree;
    }
    return true;
}

IntrinsicInvariantExample intrinsic_invariant_construction(int n) {
    if (n <= 4)
        throw std::invalid_argument("construction needs n > 4");
    IntrinsicInvariantExample out;
    out.g = complete_graph(n);

    // H: strip n-3 edges at vertex 1, keeping (0,1) and (1,2).
    std::vector<int> dropped;
    for (int j = 3; j < n; ++j) dropped.push_back(out.g.find_edge(1, j));
    out.h = remove_edges(out.g, dropped);

    for (int u = 1; u < n; ++u) out.t1.push_back({0, u});
    out.t2.push_back({1, 2});
    for (int u = 2; u < n; ++u) out.t2.push_back({0, u});

    const auto tree_in = [](const Graph& host, const std::vector<VertexPair>& pairs) {
        std::vector<int> idx;
        idx.reserve(pairs.size());
        for (const VertexPair& p : pairs) idx.push_back(host.find_edge(p.u, p.w));
        return validate_spanning_tree(host, idx, 0);
    };
    out.g_t1 = tree_intersection_number(out.g, tree_in(out.g, out.t1));
    out.g_t2 = tree_intersection_number(out.g, tree_in(out.g, out.t2));
    out.h_t1 = tree_intersection_number(out.h, tree_in(out.h, out.t1));
    out.h_t2 = tree_intersection_number(out.h, tree_in(out.h, out.t2));
    return out;
}

}  // namespace mstci

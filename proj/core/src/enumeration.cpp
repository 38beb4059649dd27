#include "mstci/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "mstci/intersection.hpp"
#include "mstci/tree_cycle.hpp"

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

// Is the graph connected using `included` plus all edges with index >= next?
bool remainder_connected(const Graph& g, const std::vector<int>& included, int next) {
    Dsu dsu(g.vertex_count());
    int components = g.vertex_count();
    for (int e : included) {
        const VertexPair p = g.endpoints(e);
        if (dsu.unite(p.u, p.w)) --components;
    }
    for (int e = next; e < g.edge_count() && components > 1; ++e) {
        const VertexPair p = g.endpoints(e);
        if (dsu.unite(p.u, p.w)) --components;
    }
    return components == 1;
}

struct TreeEnumerator {
    const Graph& g;
    const std::function<bool(const std::vector<int>&)>& visit;
    std::vector<int> included;
    bool stopped = false;

    // Binary partition on edge `next`: include it when it closes no cycle,
    // exclude it when the remainder still connects (it is not a bridge of
    // included + undecided edges). Each spanning tree is reached by exactly
    // one decision path.
    void run(int next, Dsu dsu) {
        if (stopped) return;
        if (static_cast<int>(included.size()) == g.vertex_count() - 1) {
            if (!visit(included)) stopped = true;
            return;
        }
        if (next == g.edge_count()) return;
        const VertexPair p = g.endpoints(next);
        if (dsu.find(p.u) != dsu.find(p.w)) {
            Dsu with = dsu;
            with.unite(p.u, p.w);
            included.push_back(next);
            run(next + 1, std::move(with));
            included.pop_back();
        }
        if (stopped) return;
        if (remainder_connected(g, included, next + 1)) run(next + 1, std::move(dsu));
    }
};

}  // namespace

void for_each_spanning_tree(const Graph& g,
                            const std::function<bool(const std::vector<int>&)>& visit) {
    if (!g.is_connected())
        throw std::invalid_argument("spanning-tree enumeration requires a connected graph");
    TreeEnumerator enumerator{g, visit, {}, false};
    enumerator.included.reserve(static_cast<std::size_t>(g.vertex_count()));
    enumerator.run(0, Dsu(g.vertex_count()));
}

std::vector<std::vector<int>> all_spanning_trees(const Graph& g, std::uint64_t cap) {
    std::vector<std::vector<int>> trees;
    bool over = false;
    for_each_spanning_tree(g, [&](const std::vector<int>& edges) {
        if (static_cast<std::uint64_t>(trees.size()) >= cap) {
            over = true;
            return false;
        }
        trees.push_back(edges);
        return true;
    });
    if (over)
        throw std::runtime_error("spanning-tree count exceeds cap " + std::to_string(cap));
    return trees;
}

std::int64_t kirchhoff_count(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return n == 1 ? 1 : 0;
    if (!g.is_connected()) return 0;

    // Laplacian cofactor: drop the last row/column.
    const int d = n - 1;
    std::vector<std::vector<__int128>> a(static_cast<std::size_t>(d),
                                         std::vector<__int128>(static_cast<std::size_t>(d), 0));
    for (int v = 0; v < d; ++v) a[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = g.degree(v);
    for (const VertexPair& p : g.edges()) {
        if (p.u < d && p.w < d) {
            a[static_cast<std::size_t>(p.u)][static_cast<std::size_t>(p.w)] -= 1;
            a[static_cast<std::size_t>(p.w)][static_cast<std::size_t>(p.u)] -= 1;
        }
    }

    // Bareiss fraction-free elimination: all intermediates are exact minors.
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < d - 1; ++k) {
        if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < d; ++i)
                if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row == -1) return 0;
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < d; ++i) {
            for (int j = k + 1; j < d; ++j) {
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                         a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                     a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                         a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) /
                    prev;
            }
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
        }
        prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    __int128 det = sign * a[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(d - 1)];
    if (det < 0) det = -det;  // tree counts are non-negative
    if (det > static_cast<__int128>(INT64_MAX))
        throw std::overflow_error("spanning-tree count exceeds 64-bit range");
    return static_cast<std::int64_t>(det);
}

TreeEdges prufer_decode(std::span<const int> seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int s : seq) {
        if (s < 0 || s >= n)
            throw std::invalid_argument("Prufer label " + std::to_string(s) +
                                        " out of range for n=" + std::to_string(n));
        ++degree[static_cast<std::size_t>(s)];
    }
    TreeEdges edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    // ptr/leaf scan: O(n) amortized over the sequence
    int ptr = 0;
    while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int s : seq) {
        edges.push_back({leaf, s});
        if (--degree[static_cast<std::size_t>(s)] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    // The last remaining leaf pairs with vertex n-1, which is never consumed
    // inside the loop.
    edges.push_back({leaf, n - 1});
    return edges;
}

std::vector<int> prufer_encode(const TreeEdges& tree) {
    const int n = static_cast<int>(tree.size()) + 1;
    if (n == 1) return {};
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const VertexPair& p : tree) {
        adj[static_cast<std::size_t>(p.u)].push_back(p.w);
        adj[static_cast<std::size_t>(p.w)].push_back(p.u);
    }
    std::vector<int> degree(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        degree[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(n) - 2);
    for (int round = 0; round < n - 2; ++round) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[static_cast<std::size_t>(v)] && degree[static_cast<std::size_t>(v)] == 1) {
                leaf = v;
                break;
            }
        int neighbor = -1;
        for (int u : adj[static_cast<std::size_t>(leaf)])
            if (!removed[static_cast<std::size_t>(u)]) {
                neighbor = u;
                break;
            }
        seq.push_back(neighbor);
        removed[static_cast<std::size_t>(leaf)] = 1;
        --degree[static_cast<std::size_t>(neighbor)];
    }
    return seq;
}

namespace {

std::vector<std::vector<int>> tree_adjacency(const TreeEdges& tree, int n) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const VertexPair& p : tree) {
        adj[static_cast<std::size_t>(p.u)].push_back(p.w);
        adj[static_cast<std::size_t>(p.w)].push_back(p.u);
    }
    return adj;
}

// One or two middle vertices found by peeling leaves.
std::vector<int> tree_centers(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 1) return {0};
    std::vector<int> degree(static_cast<std::size_t>(n));
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        degree[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
        if (degree[static_cast<std::size_t>(v)] == 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(layer.size());
        for (int v : layer)
            for (int u : adj[static_cast<std::size_t>(v)])
                if (--degree[static_cast<std::size_t>(u)] == 1) next.push_back(u);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string ahu_code(const std::vector<std::vector<int>>& adj, int v, int from) {
    std::vector<std::string> child_codes;
    for (int u : adj[static_cast<std::size_t>(v)])
        if (u != from) child_codes.push_back(ahu_code(adj, u, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const std::string& c : child_codes) code += c;
    code += ")";
    return code;
}

}  // namespace

int TreeCode::order() const {
    return static_cast<int>(std::count(code.begin(), code.end(), '('));
}

TreeCode canonical_code(const TreeEdges& tree) {
    const int n = static_cast<int>(tree.size()) + 1;
    const auto adj = tree_adjacency(tree, n);
    const std::vector<int> centers = tree_centers(adj);
    std::string best = ahu_code(adj, centers[0], -1);
    if (centers.size() == 2) {
        std::string other = ahu_code(adj, centers[1], -1);
        if (other < best) best = std::move(other);
    }
    return {std::move(best)};
}

TreeEdges tree_from_code(const TreeCode& code) {
    TreeEdges edges;
    std::vector<int> stack;
    int next_label = 0;
    for (char ch : code.code) {
        if (ch == '(') {
            if (!stack.empty()) edges.push_back({stack.back(), next_label});
            stack.push_back(next_label++);
        } else if (ch == ')') {
            if (stack.empty()) throw std::invalid_argument("unbalanced tree code");
            stack.pop_back();
        } else {
            throw std::invalid_argument("tree code may contain only parentheses");
        }
    }
    if (!stack.empty()) throw std::invalid_argument("unbalanced tree code");
    return edges;
}

std::vector<TreeEdges> all_free_trees(int n) {
    if (n < 1) throw std::invalid_argument("tree order must be positive");
    if (n == 1) return {TreeEdges{}};
    if (n == 2) return {TreeEdges{{0, 1}}};
    std::vector<TreeEdges> representatives;
    std::unordered_set<std::string> seen;
    std::vector<int> seq(static_cast<std::size_t>(n) - 2, 0);
    for (;;) {
        TreeEdges tree = prufer_decode(seq);
        TreeCode code = canonical_code(tree);
        if (seen.insert(code.code).second) representatives.push_back(std::move(tree));
        // odometer over the n^(n-2) sequences
        int pos = static_cast<int>(seq.size()) - 1;
        while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == n - 1) {
            seq[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++seq[static_cast<std::size_t>(pos)];
    }
    return representatives;
}

TreeEdges random_tree(int n, SplitMix64& rng, int leaf_constrained) {
    if (n < 2) throw std::invalid_argument("random tree needs n >= 2");
    if (leaf_constrained >= n)
        throw std::invalid_argument("leaf-constrained vertex out of range");
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        if (v != leaf_constrained) order.push_back(v);
    if (leaf_constrained >= 0) order.push_back(leaf_constrained);  // attached last => leaf
    TreeEdges edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    for (std::size_t i = 1; i < order.size(); ++i) {
        const int attach = order[static_cast<std::size_t>(rng.below(i))];
        edges.push_back({attach, order[i]});
    }
    return edges;
}

void for_each_st_neighbor(const Graph& g, const SpanningTree& t,
                          const std::function<bool(int, int, const std::vector<int>&)>& visit) {
    const std::vector<int> base = t.edge_indices();
    for (int added = 0; added < g.edge_count(); ++added) {
        if (t.contains(added)) continue;
        const TreeCycle c = fundamental_cycle(g, t, added);
        bool stop = false;
        c.path_edges.for_each([&](int removed) {
            if (stop) return;
            std::vector<int> edges;
            edges.reserve(base.size());
            for (int e : base)
                if (e != removed) edges.push_back(e);
            edges.push_back(added);
            if (!visit(removed, added, edges)) stop = true;
        });
        if (stop) return;
    }
}

std::vector<SpanningTree> st_neighbors(const Graph& g, const SpanningTree& t) {
    std::vector<SpanningTree> neighbors;
    for_each_st_neighbor(g, t, [&](int, int, const std::vector<int>& edges) {
        neighbors.push_back(validate_spanning_tree(g, edges, t.root()));
        return true;
    });
    return neighbors;
}

Minimization exact_minimize(const Graph& g, std::uint64_t cap) {
    if (!g.is_connected())
        throw std::invalid_argument("exact minimization requires a connected graph");
    Minimization result;
    result.best_value = -1;
    bool over = false;
    for_each_spanning_tree(g, [&](const std::vector<int>& edges) {
        if (result.explored >= cap) {
            over = true;
            return false;
        }
        ++result.explored;
        const int root = edges.empty() ? 0 : g.endpoints(edges[0]).u;
        const SpanningTree t = validate_spanning_tree(g, edges, root);
        const long long value = tree_intersection_number(g, t);
        if (result.best_value == -1 || value < result.best_value) {
            result.best_value = value;
            result.minimizers.clear();
        }
        if (value == result.best_value) result.minimizers.push_back(edges);
        return true;
    });
    if (over)
        throw std::runtime_error("spanning-tree count exceeds cap " + std::to_string(cap) +
                                 "; use local search instead");
    return result;
}

Minimization local_search(const Graph& g, const SpanningTree& t0) {
    Minimization result;
    SpanningTree current = t0;
    long long current_value = tree_intersection_number(g, t0);
    ++result.explored;
    for (;;) {
        long long best_value = current_value;
        int best_removed = -1;
        int best_added = -1;
        std::vector<int> best_edges;
        for_each_st_neighbor(g, current,
                             [&](int removed, int added, const std::vector<int>& edges) {
            ++result.explored;
            const SpanningTree neighbor = validate_spanning_tree(g, edges, current.root());
            const long long value = tree_intersection_number(g, neighbor);
            if (value < best_value ||
                (value == best_value && best_removed != -1 &&
                 (removed < best_removed ||
                  (removed == best_removed && added < best_added)))) {
                best_value = value;
                best_removed = removed;
                best_added = added;
                best_edges = edges;
            }
            return true;
        });
        if (best_removed == -1) break;  // no strict improvement
        current = validate_spanning_tree(g, best_edges, current.root());
        current_value = best_value;
        ++result.steps;
    }
    result.best_value = current_value;
    result.minimizers.push_back(current.edge_indices());
    return result;
}

}  // namespace mstci

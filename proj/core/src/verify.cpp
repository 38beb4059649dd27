#include "mstci/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "mstci/conjecture.hpp"
#include "mstci/enumeration.hpp"
#include "mstci/intersection.hpp"
#include "mstci/random_graphs.hpp"
#include "mstci/rng.hpp"
#include "mstci/tree_cycle.hpp"

namespace mstci {

namespace {

std::string describe_graph(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.vertex_count() << " edges=";
    for (const VertexPair& p : g.edges()) os << "(" << p.u << "," << p.w << ")";
    return os.str();
}

std::string describe_tree(const Graph& g, const SpanningTree& t) {
    std::ostringstream os;
    os << "tree=";
    t.tree_edges().for_each([&](int e) {
        const VertexPair p = g.endpoints(e);
        os << "(" << p.u << "," << p.w << ")";
    });
    os << " root=" << t.root();
    return os.str();
}

// checks formula == oracle for every tree-cycle of t; fills detail on failure
bool formula_matches_oracle(const Graph& g, const SpanningTree& t, std::string& detail) {
    const int n = g.vertex_count();
    const std::vector<TreeCycle> cycles = all_tree_cycles(g, t);
    for (const TreeCycle& c : cycles) {
        const std::vector<int> q = closest_point_sets(g, t, c).sizes();
        const long long expected = cycle_intersection_number(cycles, c);
        const long long got = complete_graph_cycle_formula(n, c.length, q);
        if (got != expected) {
            std::ostringstream os;
            os << describe_graph(g) << " " << describe_tree(g, t) << " cycle-edge "
               << c.cycle_edge << ": formula " << got << " oracle " << expected;
            detail = os.str();
            return false;
        }
    }
    return true;
}

PropertyResult complete_formula_exhaustive() {
    PropertyResult r{"complete-graph cycle formula equals oracle on every tree of K4..K6", true, ""};
    for (int n = 4; n <= 6 && r.pass; ++n) {
        const Graph g = complete_graph(n);
        for_each_spanning_tree(g, [&](const std::vector<int>& edges) {
            const SpanningTree t = validate_spanning_tree(g, edges, 0);
            return r.pass = formula_matches_oracle(g, t, r.detail);
        });
    }
    return r;
}

PropertyResult complete_formula_random(SplitMix64& rng) {
    PropertyResult r{"complete-graph cycle formula equals oracle on 500 random trees each of K7..K9",
                     true, ""};
    for (int n = 7; n <= 9 && r.pass; ++n) {
        const Graph g = complete_graph(n);
        for (int i = 0; i < 500 && r.pass; ++i) {
            const SpanningTree t =
                validate_spanning_tree(g, random_spanning_tree_edges(g, rng), 0);
            r.pass = formula_matches_oracle(g, t, r.detail);
        }
    }
    return r;
}

PropertyResult star_cycle_formula_random(SplitMix64& rng) {
    PropertyResult r{"star per-cycle formula equals oracle on 200 random universal-vertex graphs",
                     true, ""};
    for (int i = 0; i < 200 && r.pass; ++i) {
        const int n = 5 + rng.below_int(26);  // 5..30
        const double p = 0.15 + 0.7 * rng.next_double();
        const Graph g = random_universal_graph(n, p, rng);
        const SpanningTree star = star_tree(g, 0);
        const std::vector<TreeCycle> cycles = all_tree_cycles(g, star);
        for (const TreeCycle& c : cycles) {
            const long long expected = cycle_intersection_number(cycles, c);
            const long long got = star_cycle_intersection(g, 0, c.cycle_edge);
            if (got != expected) {
                r.pass = false;
                r.detail = describe_graph(g) + " cycle-edge " + std::to_string(c.cycle_edge) +
                           ": formula " + std::to_string(got) + " oracle " +
                           std::to_string(expected);
                break;
            }
        }
    }
    return r;
}

PropertyResult star_tree_formula_random(SplitMix64& rng) {
    PropertyResult r{"star tree formulas agree with each other and the oracle on 200 random universal-vertex graphs",
                     true, ""};
    for (int i = 0; i < 200 && r.pass; ++i) {
        const int n = 5 + rng.below_int(26);
        const double p = 0.15 + 0.7 * rng.next_double();
        const Graph g = random_universal_graph(n, p, rng);
        const long long formula = star_tree_intersection(g, 0);  // both closed forms, must agree
        const long long oracle = tree_intersection_number(g, star_tree(g, 0));
        if (formula != oracle) {
            r.pass = false;
            r.detail = describe_graph(g) + ": formula " + std::to_string(formula) +
                       " oracle " + std::to_string(oracle);
        }
    }
    return r;
}

PropertyResult star_local_minimum(SplitMix64& rng) {
    PropertyResult r{"star tree is a local minimum on 100 random universal-vertex graphs (n <= 15)",
                     true, ""};
    for (int i = 0; i < 100 && r.pass; ++i) {
        const int n = 5 + rng.below_int(11);  // 5..15
        const double p = 0.15 + 0.7 * rng.next_double();
        const Graph g = random_universal_graph(n, p, rng);
        const SpanningTree star = star_tree(g, 0);
        const long long star_value = tree_intersection_number(g, star);
        for_each_st_neighbor(g, star, [&](int removed, int added, const std::vector<int>& edges) {
            const SpanningTree neighbor = validate_spanning_tree(g, edges, 0);
            const long long value = tree_intersection_number(g, neighbor);
            if (value < star_value) {
                r.pass = false;
                r.detail = describe_graph(g) + " swap -" + std::to_string(removed) + "+" +
                           std::to_string(added) + ": neighbor " + std::to_string(value) +
                           " < star " + std::to_string(star_value);
                return false;
            }
            return true;
        });
    }
    return r;
}

PropertyResult edge_removal_identity(SplitMix64& rng) {
    PropertyResult r{"edge-removal identity exact on 1000 random (graph, tree, edge) triples",
                     true, ""};
    for (int i = 0; i < 1000 && r.pass; ++i) {
        const int n = 4 + rng.below_int(9);  // 4..12
        const double p = 0.25 + 0.5 * rng.next_double();
        const Graph g = random_connected_graph(n, p, rng);
        if (g.edge_count() == n - 1) continue;  // no cycle edge to remove
        const SpanningTree t =
            validate_spanning_tree(g, random_spanning_tree_edges(g, rng), 0);
        std::vector<int> non_tree;
        for (int e = 0; e < g.edge_count(); ++e)
            if (!t.contains(e)) non_tree.push_back(e);
        const int e = non_tree[static_cast<std::size_t>(rng.below(non_tree.size()))];
        try {
            edge_removal_delta(g, t, e);  // verifies the identity internally
        } catch (const std::logic_error& err) {
            r.pass = false;
            r.detail = describe_graph(g) + " " + describe_tree(g, t) + " edge " +
                       std::to_string(e) + ": " + err.what();
        }
    }
    return r;
}

PropertyResult partition_identity(SplitMix64& rng) {
    PropertyResult r{"partition identity exact on 200 reduced instances without interbranch edges",
                     true, ""};
    for (int i = 0; i < 200 && r.pass; ++i) {
        const int n = 5 + rng.below_int(6);  // 5..10
        const double density = 0.2 + 0.7 * rng.next_double();
        const ReducedInstance inst = random_reduced_instance(n, density, rng, false);
        if (!partition_check(inst.graph, inst.tree)) {
            r.pass = false;
            r.detail = describe_graph(inst.graph) + " " +
                       describe_tree(inst.graph, inst.tree);
        }
    }
    return r;
}

PropertyResult reduction_inequality(SplitMix64& rng) {
    PropertyResult r{"per-edge reduction inequality and removal chain on 200 universal-vertex instances",
                     true, ""};
    for (int i = 0; i < 200 && r.pass; ++i) {
        const int n = 5 + rng.below_int(6);  // 5..10
        const double p = 0.2 + 0.6 * rng.next_double();
        const Graph g = random_universal_graph(n, p, rng);
        const SpanningTree t =
            validate_spanning_tree(g, random_spanning_tree_edges(g, rng), 0);
        if (!reduction_lemma_check(g, t)) {
            r.pass = false;
            r.detail = describe_graph(g) + " " + describe_tree(g, t);
        }
    }
    return r;
}

PropertyResult intrinsic_contract() {
    PropertyResult r{"strict inequality in G and equality in H for n = 5..8", true, ""};
    for (int n = 5; n <= 8 && r.pass; ++n) {
        const IntrinsicInvariantExample ex = intrinsic_invariant_construction(n);
        if (!(ex.g_t1 < ex.g_t2 && ex.h_t1 == ex.h_t2)) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n) + ": G values " + std::to_string(ex.g_t1) +
                       "," + std::to_string(ex.g_t2) + " H values " + std::to_string(ex.h_t1) +
                       "," + std::to_string(ex.h_t2);
        }
    }
    return r;
}

PropertyResult intrinsic_small_values() {
    PropertyResult r{"n=5 construction evaluates to (12, 14, 5, 5)", true, ""};
    const IntrinsicInvariantExample ex = intrinsic_invariant_construction(5);
    if (!(ex.g_t1 == 12 && ex.g_t2 == 14 && ex.h_t1 == 5 && ex.h_t2 == 5)) {
        r.pass = false;
        r.detail = "got (" + std::to_string(ex.g_t1) + ", " + std::to_string(ex.g_t2) + ", " +
                   std::to_string(ex.h_t1) + ", " + std::to_string(ex.h_t2) + ")";
    }
    return r;
}

PropertyResult intrinsic_rehung_cycle() {
    PropertyResult r{"re-hung cycle value is n-3 in H for both trees", true, ""};
    for (int n = 5; n <= 8 && r.pass; ++n) {
        const IntrinsicInvariantExample ex = intrinsic_invariant_construction(n);
        const auto tree_in = [&](const std::vector<VertexPair>& pairs) {
            std::vector<int> idx;
            for (const VertexPair& p : pairs) idx.push_back(ex.h.find_edge(p.u, p.w));
            return validate_spanning_tree(ex.h, idx, 0);
        };
        const SpanningTree t1 = tree_in(ex.t1);
        const SpanningTree t2 = tree_in(ex.t2);
        const auto cycle_value = [&](const SpanningTree& t, int u, int w) {
            const std::vector<TreeCycle> cycles = all_tree_cycles(ex.h, t);
            const TreeCycle c = fundamental_cycle(ex.h, t, ex.h.find_edge(u, w));
            return cycle_intersection_number(cycles, c);
        };
        const long long v1 = cycle_value(t1, 1, 2);  // edge (1,2) is a cycle edge of T1
        const long long v2 = cycle_value(t2, 0, 1);  // edge (0,1) is a cycle edge of T2
        if (v1 != n - 3 || v2 != n - 3) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n) + ": got " + std::to_string(v1) + " and " +
                       std::to_string(v2);
        }
    }
    return r;
}

PropertyResult enumeration_vs_determinant(SplitMix64& rng) {
    PropertyResult r{"spanning-tree enumeration matches the determinant count on 100 random graphs",
                     true, ""};
    for (int i = 0; i < 100 && r.pass; ++i) {
        const int n = 2 + rng.below_int(8);  // 2..9
        const double p = 0.2 + 0.4 * rng.next_double();
        const Graph g = random_connected_graph(n, p, rng);
        std::int64_t enumerated = 0;
        for_each_spanning_tree(g, [&](const std::vector<int>&) {
            ++enumerated;
            return true;
        });
        const std::int64_t determinant = kirchhoff_count(g);
        if (enumerated != determinant) {
            r.pass = false;
            r.detail = describe_graph(g) + ": enumerated " + std::to_string(enumerated) +
                       " determinant " + std::to_string(determinant);
        }
    }
    return r;
}

PropertyResult prufer_round_trip() {
    PropertyResult r{"Prufer encode(decode(s)) = s for every sequence with n <= 6", true, ""};
    for (int n = 2; n <= 6 && r.pass; ++n) {
        std::vector<int> seq(static_cast<std::size_t>(n) - 2, 0);
        for (;;) {
            const TreeEdges tree = prufer_decode(seq);
            const std::vector<int> back = prufer_encode(tree);
            if (back != seq) {
                r.pass = false;
                std::ostringstream os;
                os << "n=" << n << " seq=";
                for (int s : seq) os << s << " ";
                r.detail = os.str();
                break;
            }
            int pos = static_cast<int>(seq.size()) - 1;
            while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == n - 1) {
                seq[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++seq[static_cast<std::size_t>(pos)];
        }
    }
    return r;
}

}  // namespace

bool SuiteReport::all_pass() const {
    for (const PropertyResult& p : properties)
        if (!p.pass) return false;
    return true;
}

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "formulas", "local-min", "edge-removal", "partition",
        "reduction", "intrinsic", "enumeration"};
    return names;
}

SuiteReport run_verify_suite(const std::string& name, std::uint64_t seed) {
    SuiteReport report;
    report.suite = name;
    report.seed = seed;
    SplitMix64 rng(seed);
    if (name == "formulas") {
        report.properties.push_back(complete_formula_exhaustive());
        report.properties.push_back(complete_formula_random(rng));
        report.properties.push_back(star_cycle_formula_random(rng));
        report.properties.push_back(star_tree_formula_random(rng));
    } else if (name == "local-min") {
        report.properties.push_back(star_local_minimum(rng));
    } else if (name == "edge-removal") {
        report.properties.push_back(edge_removal_identity(rng));
    } else if (name == "partition") {
        report.properties.push_back(partition_identity(rng));
    } else if (name == "reduction") {
        report.properties.push_back(reduction_inequality(rng));
    } else if (name == "intrinsic") {
        report.properties.push_back(intrinsic_contract());
        report.properties.push_back(intrinsic_small_values());
        report.properties.push_back(intrinsic_rehung_cycle());
    } else if (name == "enumeration") {
        report.properties.push_back(enumeration_vs_determinant(rng));
        report.properties.push_back(prufer_round_trip());
    } else {
        throw std::invalid_argument("unknown verification suite: " + name);
    }
    return report;
}

}  // namespace mstci

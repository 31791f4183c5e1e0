#include <doctest.h>

#include <set>

#include "snarks/generators.hpp"
#include "snarks/symmetry.hpp"
#include "test_util.hpp"

using namespace snarks;

namespace {

Graph k4() { return Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}); }

Graph prism() { return Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}); }

Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::build(n, edges);
}

Graph two_triangles() { return Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }

// independent oracle: plain vertex-by-vertex backtracking over candidate
// images, no partitions involved; counts every automorphism
uint64_t count_automorphisms_oracle(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> image(static_cast<size_t>(n), -1);
    std::vector<char> used(static_cast<size_t>(n), 0);
    uint64_t count = 0;
    std::function<void(int)> place = [&](int v) {
        if (v == n) {
            ++count;
            return;
        }
        for (int cand = 0; cand < n; ++cand) {
            if (used[static_cast<size_t>(cand)]) continue;
            if (g.degree(cand) != g.degree(v)) continue;
            bool ok = true;
            for (int w = 0; w < v && ok; ++w)
                if (g.has_edge(v, w) != g.has_edge(cand, image[static_cast<size_t>(w)])) ok = false;
            if (!ok) continue;
            image[static_cast<size_t>(v)] = cand;
            used[static_cast<size_t>(cand)] = 1;
            place(v + 1);
            used[static_cast<size_t>(cand)] = 0;
            image[static_cast<size_t>(v)] = -1;
        }
    };
    place(0);
    return count;
}

}  // namespace

TEST_CASE("permutation group order from known generator sets") {
    // S5 from a transposition and a 5-cycle
    Permutation swap01{1, 0, 2, 3, 4};
    Permutation rot{1, 2, 3, 4, 0};
    CHECK(detail::permutation_group_order({swap01, rot}, 5) == 120);
    // cyclic C7
    Permutation rot7{1, 2, 3, 4, 5, 6, 0};
    CHECK(detail::permutation_group_order({rot7}, 7) == 7);
    // dihedral on 5 points
    Permutation refl{0, 4, 3, 2, 1};
    CHECK(detail::permutation_group_order({rot, refl}, 5) == 10);
    CHECK(detail::permutation_group_order({}, 5) == 1);
}

TEST_CASE("automorphism group orders match the backtracking oracle") {
    for (const Graph& g : {petersen(), k4(), prism(), cycle_graph(6), two_triangles(),
                           Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}), flower(5).graph}) {
        AutomorphismGroup grp = automorphism_group(g);
        CHECK(grp.order == count_automorphisms_oracle(g));
        for (const Permutation& p : grp.generators) CHECK(is_automorphism(g, p));
    }
}

TEST_CASE("known group orders and name hints") {
    AutomorphismGroup pet = automorphism_group(petersen());
    CHECK(pet.order == 120);
    CHECK(pet.name_hint == "symmetric");

    AutomorphismGroup j5 = automorphism_group(flower(5).graph);
    CHECK(j5.order == 20);
    CHECK(j5.name_hint == "dihedral");

    AutomorphismGroup j7 = automorphism_group(flower(7).graph);
    CHECK(j7.order == 28);

    AutomorphismGroup c6 = automorphism_group(cycle_graph(6));
    CHECK(c6.order == 12);
    CHECK(c6.name_hint == "dihedral");

    AutomorphismGroup k = automorphism_group(k4());
    CHECK(k.order == 24);
    CHECK(k.name_hint == "symmetric");

    AutomorphismGroup asym = automorphism_group(Graph::build(1, {}));
    CHECK(asym.order == 1);
    CHECK(asym.name_hint == "trivial");
}

TEST_CASE("orbit partitions") {
    OrbitPartition pv = vertex_orbits(petersen());
    CHECK(pv.blocks.size() == 1);
    EdgeOrbitPartition pe = edge_orbits(petersen());
    CHECK(pe.blocks.size() == 1);

    // flower: hubs, the w row, and the merged u/v row
    Flower j5 = flower(5);
    OrbitPartition jv = vertex_orbits(j5.graph);
    CHECK(jv.blocks.size() == 3);
    EdgeOrbitPartition je = edge_orbits(j5.graph);
    CHECK(je.blocks.size() == 4);

    // prism: one vertex orbit; triangle edges vs matching edges
    OrbitPartition prv = vertex_orbits(prism());
    CHECK(prv.blocks.size() == 1);
    EdgeOrbitPartition pre = edge_orbits(prism());
    CHECK(pre.blocks.size() == 2);

    // blocks are sorted by least element and partition the ground set
    std::set<int> seen;
    for (const auto& block : jv.blocks) {
        CHECK(!block.empty());
        CHECK(std::is_sorted(block.begin(), block.end()));
        for (int v : block) CHECK(seen.insert(v).second);
    }
    CHECK(seen.size() == 20);
}

TEST_CASE("orbit counts are invariant under relabeling") {
    test_util::Rng rng(31337);
    for (const Graph& g : {petersen(), prism(), flower(5).graph}) {
        OrbitPartition base_v = vertex_orbits(g);
        EdgeOrbitPartition base_e = edge_orbits(g);
        for (int round = 0; round < 3; ++round) {
            Permutation p = test_util::random_permutation(g.vertex_count(), rng);
            Graph h = apply_permutation(g, p);
            CHECK(vertex_orbits(h).blocks.size() == base_v.blocks.size());
            CHECK(edge_orbits(h).blocks.size() == base_e.blocks.size());
            CHECK(vertex_orbits(h).group_order == base_v.group_order);
        }
    }
}

TEST_CASE("canonical certificates are stable and relabel-invariant") {
    test_util::Rng rng(4242);
    for (int round = 0; round < 30; ++round) {
        Graph g = test_util::random_graph(1 + rng.below(12), 0.4, rng);
        CanonicalForm a = canonical_form(g);
        CanonicalForm again = canonical_form(g);
        CHECK(a.certificate == again.certificate);  // byte-identical across runs
        Permutation p = test_util::random_permutation(g.vertex_count(), rng);
        CanonicalForm b = canonical_form(apply_permutation(g, p));
        CHECK(a.certificate == b.certificate);
        // the labeling actually produces the certificate
        CHECK(emit_graph6(apply_permutation(g, a.labeling)) == a.certificate);
    }
}

TEST_CASE("canonical certificates separate non-isomorphic graphs") {
    CHECK(canonical_form(petersen()).certificate != canonical_form(prism()).certificate);
    CHECK(canonical_form(cycle_graph(6)).certificate != canonical_form(two_triangles()).certificate);
}

TEST_CASE("isomorphism finds explicit mappings") {
    test_util::Rng rng(2718);
    for (const Graph& g : {petersen(), prism(), flower(5).graph}) {
        Permutation p = test_util::random_permutation(g.vertex_count(), rng);
        Graph h = apply_permutation(g, p);
        auto iso = are_isomorphic(g, h);
        REQUIRE(iso.has_value());
        for (const Edge& e : g.edges()) CHECK(h.has_edge((*iso)[static_cast<size_t>(e.u)], (*iso)[static_cast<size_t>(e.v)]));
    }
    CHECK(!are_isomorphic(cycle_graph(6), two_triangles()).has_value());
    CHECK(!are_isomorphic(petersen(), prism()).has_value());
}

TEST_CASE("certificate equality matches brute-force isomorphism on small pairs") {
    test_util::Rng rng(1111);
    auto brute_isomorphic = [](const Graph& g, const Graph& h) {
        if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
        Permutation p = identity_permutation(g.vertex_count());
        do {
            bool ok = true;
            for (const Edge& e : g.edges())
                if (!h.has_edge(p[static_cast<size_t>(e.u)], p[static_cast<size_t>(e.v)])) {
                    ok = false;
                    break;
                }
            if (ok) return true;
        } while (std::next_permutation(p.begin(), p.end()));
        return false;
    };
    int agree_iso = 0, agree_not = 0;
    for (int round = 0; round < 40; ++round) {
        int n = 4 + rng.below(4);
        Graph g = test_util::random_graph(n, 0.45, rng);
        Graph h = rng.chance(0.5) ? apply_permutation(g, test_util::random_permutation(n, rng))
                                  : test_util::random_graph(n, 0.45, rng);
        bool expect = brute_isomorphic(g, h);
        CHECK(are_isomorphic(g, h).has_value() == expect);
        (expect ? agree_iso : agree_not)++;
    }
    CHECK(agree_iso > 0);
    CHECK(agree_not > 0);
}

TEST_CASE("highly symmetric graphs stay tractable") {
    // complete graph: the search must prune via discovered automorphisms
    std::vector<Edge> edges;
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v) edges.emplace_back(u, v);
    Graph k9 = Graph::build(9, edges);
    AutomorphismGroup grp = automorphism_group(k9);
    CHECK(grp.order == 362880);  // 9!
}

#include <doctest.h>

#include <set>

#include "snarks/connectivity.hpp"
#include "snarks/factors.hpp"
#include "snarks/generators.hpp"
#include "test_util.hpp"

using namespace snarks;

namespace {

Graph k4() { return Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}); }

Graph k33() { return Graph::build(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}); }

Graph prism() { return Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}); }

Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::build(n, edges);
}

// test-side oracle, independent of the library path: all edge subsets of
// size <= 5, checked against "at least two components contain a cycle"
std::optional<int> cyclic_connectivity_oracle(const Graph& g) {
    const int m = g.edge_count();
    std::vector<int> comp(static_cast<size_t>(g.vertex_count()));
    auto cyclically_cut = [&](const std::vector<Edge>& removed) {
        std::set<Edge> gone(removed.begin(), removed.end());
        std::fill(comp.begin(), comp.end(), -1);
        int ncomp = 0;
        for (int s = 0; s < g.vertex_count(); ++s) {
            if (comp[static_cast<size_t>(s)] >= 0) continue;
            std::vector<int> stack{s};
            comp[static_cast<size_t>(s)] = ncomp;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : g.neighbors(v)) {
                    if (gone.count(Edge(v, w))) continue;
                    if (comp[static_cast<size_t>(w)] < 0) {
                        comp[static_cast<size_t>(w)] = ncomp;
                        stack.push_back(w);
                    }
                }
            }
            ++ncomp;
        }
        std::vector<int> nv(static_cast<size_t>(ncomp), 0), ne(static_cast<size_t>(ncomp), 0);
        for (int v = 0; v < g.vertex_count(); ++v) ++nv[static_cast<size_t>(comp[static_cast<size_t>(v)])];
        for (const Edge& e : g.edges())
            if (!gone.count(e) && comp[static_cast<size_t>(e.u)] == comp[static_cast<size_t>(e.v)])
                ++ne[static_cast<size_t>(comp[static_cast<size_t>(e.u)])];
        int cyclic = 0;
        for (int c = 0; c < ncomp; ++c)
            if (ne[static_cast<size_t>(c)] >= nv[static_cast<size_t>(c)]) ++cyclic;
        return cyclic >= 2;
    };

    for (int k = 1; k <= 5; ++k) {
        std::vector<int> idx(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
        if (k > m) break;
        while (true) {
            std::vector<Edge> removed;
            for (int i : idx) removed.push_back(g.edges()[static_cast<size_t>(i)]);
            if (cyclically_cut(removed)) return k;
            int i = k - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == m - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return std::nullopt;  // none of size <= 5
}

}  // namespace

TEST_CASE("girth values") {
    CHECK(girth(petersen()) == 5);
    CHECK(girth(flower(5).graph) == 5);
    CHECK(girth(flower(7).graph) == 6);
    CHECK(girth(k4()) == 3);
    CHECK(girth(k33()) == 4);
    Graph tree = Graph::build(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
    CHECK(!girth(tree).has_value());
}

TEST_CASE("bridges") {
    CHECK(bridges(petersen()).empty());
    Graph p3 = Graph::build(3, {{0, 1}, {1, 2}});
    CHECK(bridges(p3) == std::vector<Edge>{{0, 1}, {1, 2}});
    Graph joined = Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    CHECK(bridges(joined) == std::vector<Edge>{{2, 3}});
}

TEST_CASE("cyclic edge connectivity on fixtures") {
    CyclicConnectivity pet = cyclic_edge_connectivity(petersen());
    CHECK(pet.defined);
    CHECK(!pet.is_lower_bound);
    CHECK(pet.value == 5);
    CHECK(pet.cut.size() == 5);

    CHECK(!cyclic_edge_connectivity(k4()).defined);
    CHECK(!cyclic_edge_connectivity(k33()).defined);

    CyclicConnectivity pr = cyclic_edge_connectivity(prism());
    CHECK(pr.defined);
    CHECK(pr.value == 3);

    CHECK_THROWS_AS(cyclic_edge_connectivity(cycle_graph(5)), std::invalid_argument);
}

TEST_CASE("cyclic edge connectivity agrees with the subset oracle") {
    for (const Graph& g : {petersen(), prism(), flower(5).graph}) {
        CyclicConnectivity cc = cyclic_edge_connectivity(g);
        auto oracle = cyclic_connectivity_oracle(g);
        REQUIRE(cc.defined);
        if (oracle) {
            CHECK(!cc.is_lower_bound);
            CHECK(cc.value == *oracle);
        } else {
            CHECK(cc.value >= 6);
        }
    }
}

TEST_CASE("flower snark cyclic connectivity values") {
    CyclicConnectivity j5 = cyclic_edge_connectivity(flower(5).graph);
    CHECK(j5.value == 5);
    CHECK(!j5.is_lower_bound);
    CyclicConnectivity j7 = cyclic_edge_connectivity(flower(7).graph);
    CHECK(j7.value == 6);
    CHECK(!j7.is_lower_bound);
}

TEST_CASE("edge cuts and minimality") {
    Graph c6 = cycle_graph(6);
    EdgeCut two = make_edge_cut(c6, {Edge(0, 1), Edge(3, 4)});
    CHECK(two.minimal);
    EdgeCut three = make_edge_cut(c6, {Edge(0, 1), Edge(2, 3), Edge(4, 5)});
    CHECK(!three.minimal);
    CHECK_THROWS_AS(make_edge_cut(c6, {Edge(0, 1)}), std::invalid_argument);
    CHECK_THROWS_AS(make_edge_cut(c6, {Edge(0, 2)}), std::invalid_argument);
}

TEST_CASE("minimal cuts meet cycles evenly") {
    Graph c6 = cycle_graph(6);
    std::vector<int> whole{0, 1, 2, 3, 4, 5};
    EdgeCut cut = make_edge_cut(c6, {Edge(0, 1), Edge(3, 4)});
    CHECK(verify_cut_cycle_parity(c6, cut, whole));

    // non-minimal cuts are rejected
    EdgeCut bogus;
    bogus.edges = {Edge(0, 1), Edge(2, 3), Edge(4, 5)};
    CHECK_THROWS_AS(verify_cut_cycle_parity(c6, bogus, whole), std::invalid_argument);

    // star cuts, minimalized, against every 2-factor cycle of small fixtures
    for (const Graph& g : {petersen(), prism()}) {
        std::vector<Edge> star;
        for (int w : g.neighbors(0)) star.emplace_back(0, w);
        EdgeCut cut2 = make_edge_cut(g, star);
        REQUIRE(cut2.minimal);
        for (const TwoFactor& f : enumerate_two_factors(g))
            for (const auto& cyc : f.cycles) CHECK(verify_cut_cycle_parity(g, cut2, cyc));
    }
}

TEST_CASE("bridges match the removal oracle under fuzz") {
    test_util::Rng rng(1618);
    auto component_count = [](const Graph& g) {
        return static_cast<int>(detail::component_masks(g).size());
    };
    for (int round = 0; round < 60; ++round) {
        Graph g = test_util::random_graph(2 + rng.below(12), 0.25, rng);
        std::set<Edge> reported;
        for (const Edge& e : bridges(g)) reported.insert(e);
        int base = component_count(g);
        for (const Edge& e : g.edges()) {
            bool is_bridge = component_count(delete_edges(g, {e})) > base;
            CHECK(reported.count(e) == (is_bridge ? 1u : 0u));
        }
    }
}

TEST_CASE("girth matches the edge-deletion oracle under fuzz") {
    test_util::Rng rng(2718);
    for (int round = 0; round < 60; ++round) {
        Graph g = test_util::random_graph(3 + rng.below(10), 0.35, rng);
        std::optional<int> got = girth(g);
        // oracle: shortest cycle through e is the shortest u-v path in g-e plus one
        std::optional<int> expect;
        for (const Edge& e : g.edges()) {
            Graph h = delete_edges(g, {e});
            std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
            std::vector<int> queue{e.u};
            dist[static_cast<size_t>(e.u)] = 0;
            for (size_t i = 0; i < queue.size(); ++i)
                for (int w : h.neighbors(queue[i]))
                    if (dist[static_cast<size_t>(w)] < 0) {
                        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(queue[i])] + 1;
                        queue.push_back(w);
                    }
            if (dist[static_cast<size_t>(e.v)] >= 0) {
                int len = dist[static_cast<size_t>(e.v)] + 1;
                if (!expect || len < *expect) expect = len;
            }
        }
        CHECK(got == expect);
    }
}

TEST_CASE("two disjoint cycles detection") {
    CHECK(has_two_disjoint_cycles(petersen()));
    CHECK(has_two_disjoint_cycles(prism()));
    CHECK(!has_two_disjoint_cycles(k4()));
    CHECK(!has_two_disjoint_cycles(k33()));
    CHECK(!has_two_disjoint_cycles(cycle_graph(6)));
}

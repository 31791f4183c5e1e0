#include <doctest.h>

#include <set>

#include "snarks/coloring.hpp"
#include "snarks/factors.hpp"
#include "snarks/generators.hpp"

using namespace snarks;

namespace {

Graph k4() { return Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}); }

Graph prism() { return Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}); }

// cubic, 3-edge-colorable, with a 2-edge cut: two K4-minus-an-edge blocks
// joined by two edges
Graph two_block() {
    return Graph::build(8, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7},
                            {0, 4}, {1, 5}});
}

// all minimal edge cuts of size <= max_size, by direct subset scan
std::vector<EdgeCut> small_minimal_cuts(const Graph& g, int max_size) {
    std::vector<EdgeCut> out;
    const int m = g.edge_count();
    std::vector<int> idx;
    std::function<void(int, int)> rec = [&](int k, int from) {
        if (static_cast<int>(idx.size()) == k) {
            std::vector<Edge> edges;
            for (int i : idx) edges.push_back(g.edges()[static_cast<size_t>(i)]);
            if (!disconnects(g, edges)) return;
            EdgeCut cut = make_edge_cut(g, edges);
            if (cut.minimal) out.push_back(cut);
            return;
        }
        for (int i = from; i < m; ++i) {
            idx.push_back(i);
            rec(k, i + 1);
            idx.pop_back();
        }
    };
    for (int k = 1; k <= max_size; ++k) rec(k, 0);
    return out;
}

}  // namespace

TEST_CASE("3-edge-coloring found on class-1 fixtures") {
    for (const Graph& g : {k4(), prism(), two_block()}) {
        auto col = find_3_edge_coloring(g);
        REQUIRE(col.has_value());
        CHECK(is_proper_coloring(g, *col));
    }
}

TEST_CASE("3-edge-coloring is deterministic") {
    auto a = find_3_edge_coloring(prism());
    auto b = find_3_edge_coloring(prism());
    REQUIRE(a.has_value());
    CHECK(a->color == b->color);
}

TEST_CASE("no 3-edge-coloring of the petersen graph") {
    CHECK(!find_3_edge_coloring(petersen()).has_value());
}

TEST_CASE("color classes of a coloring are perfect matchings with even-cycle complements") {
    for (const Graph& g : {k4(), prism(), two_block()}) {
        auto col = find_3_edge_coloring(g);
        REQUIRE(col.has_value());
        for (int c = 1; c <= 3; ++c) {
            std::vector<Edge> cls;
            for (int i = 0; i < g.edge_count(); ++i)
                if (col->color[static_cast<size_t>(i)] == c) cls.push_back(g.edges()[static_cast<size_t>(i)]);
            // spanning and 1-regular
            uint64_t covered = 0;
            for (const Edge& e : cls) {
                CHECK((covered & Graph::bit(e.u)) == 0);
                CHECK((covered & Graph::bit(e.v)) == 0);
                covered |= Graph::bit(e.u) | Graph::bit(e.v);
            }
            CHECK(std::popcount(covered) == g.vertex_count());
            // the other two classes form a 2-factor with all cycles even
            Graph complement = delete_edges(g, cls);
            auto factors = enumerate_two_factors(complement);
            REQUIRE(factors.size() == 1);
            for (int len : factors[0].spectrum()) CHECK(len % 2 == 0);
        }
    }
}

TEST_CASE("parity of each color class across a cut matches the cut size") {
    // the 3-cut around a vertex of K4 uses each color exactly once
    Graph g = k4();
    auto col = find_3_edge_coloring(g);
    REQUIRE(col.has_value());
    std::vector<Edge> star;
    for (int w : g.neighbors(0)) star.emplace_back(0, w);
    EdgeCut cut = make_edge_cut(g, star);
    CHECK(verify_parity_lemma(g, *col, cut));
    std::set<int> colors;
    for (const Edge& e : star) colors.insert(col->of(g, e));
    CHECK(colors.size() == 3);

    // every minimal cut of size <= 4 on colorable fixtures
    for (const Graph& h : {k4(), prism(), two_block()}) {
        auto hcol = find_3_edge_coloring(h);
        REQUIRE(hcol.has_value());
        auto cuts = small_minimal_cuts(h, 4);
        CHECK(!cuts.empty());
        for (const EdgeCut& c : cuts) CHECK(verify_parity_lemma(h, *hcol, c));
    }

    // a 2-edge cut forces both cut edges into one color class
    Graph tb = two_block();
    auto tcol = find_3_edge_coloring(tb);
    REQUIRE(tcol.has_value());
    EdgeCut two = make_edge_cut(tb, {Edge(0, 4), Edge(1, 5)});
    CHECK(two.minimal);
    CHECK(verify_parity_lemma(tb, *tcol, two));
    CHECK(tcol->of(tb, Edge(0, 4)) == tcol->of(tb, Edge(1, 5)));
}

TEST_CASE("parity lemma validation rejects bad input") {
    Graph g = k4();
    auto col = find_3_edge_coloring(g);
    REQUIRE(col.has_value());
    EdgeColoring improper = *col;
    improper.color[0] = improper.color[1];
    EdgeCut cut;
    cut.edges = {Edge(0, 1), Edge(0, 2), Edge(0, 3)};
    CHECK_THROWS_AS(verify_parity_lemma(g, improper, cut), std::invalid_argument);
    EdgeCut noncut;
    noncut.edges = {Edge(0, 1)};
    CHECK_THROWS_AS(verify_parity_lemma(g, *col, noncut), std::invalid_argument);
}

TEST_CASE("snark report on fixtures") {
    SnarkReport pet = is_snark(petersen());
    CHECK(pet.cubic);
    CHECK(pet.connected);
    CHECK(pet.bridgeless);
    CHECK(pet.girth == 5);
    CHECK(pet.cyclic_connectivity.defined);
    CHECK(pet.cyclic_connectivity.value >= 4);
    CHECK(pet.class_two);
    CHECK(pet.snark);

    SnarkReport k = is_snark(k4());
    CHECK(k.cubic);
    CHECK(k.girth == 3);
    CHECK(!k.class_two);
    CHECK(!k.snark);

    SnarkReport pr = is_snark(prism());
    CHECK(!pr.snark);

    SnarkReport j5 = is_snark(flower(5).graph);
    CHECK(j5.snark);
    SnarkReport j7 = is_snark(flower(7).graph);
    CHECK(j7.snark);

    // non-cubic input is reported, not crashed on
    SnarkReport path = is_snark(Graph::build(3, {{0, 1}, {1, 2}}));
    CHECK(!path.cubic);
    CHECK(!path.snark);
}

TEST_CASE("snark gate agrees with odd 2-factoredness where the catalog says so") {
    // a cubic 3-connected odd 2-factored graph must be class 2
    for (const Graph& g : {petersen(), flower(5).graph, flower(7).graph}) {
        CHECK(is_odd_two_factored(g).odd);
        CHECK(!find_3_edge_coloring(g).has_value());
    }
}

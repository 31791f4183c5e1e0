#pragma once

#include <array>

#include "snarks/graph.hpp"

namespace snarks {

// Petersen graph in its fixed labeling: outer cycle 0-1-2-3-4, spokes i,i+5,
// inner edges {5,7},{7,9},{9,6},{6,8},{8,5}.
inline Graph petersen() {
    return Graph::build(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                             {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                             {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
}

// The flower graph J(t) together with its structural labeling: per index
// i in 1..t a hub h_i with spokes to u_i, v_i, w_i; the u/v rows close into
// one cycle of length 2t and the w row into a cycle of length t.
struct Flower {
    int t = 0;
    Graph graph;

    int h(int i) const { return idx(i); }
    int u(int i) const { return t + idx(i); }
    int v(int i) const { return 2 * t + idx(i); }
    int w(int i) const { return 3 * t + idx(i); }

    std::array<Edge, 3> spokes(int i) const { return {Edge(h(i), u(i)), Edge(h(i), v(i)), Edge(h(i), w(i))}; }

    std::array<int, 4> interchange(int i) const { return {h(i), u(i), v(i), w(i)}; }

    // The i-th link joins interchange i to interchange i+1 (wrapping at t,
    // where the u and v channels cross).
    std::array<Edge, 3> link(int i) const {
        if (i < t) return {Edge(u(i), u(i + 1)), Edge(v(i), v(i + 1)), Edge(w(i), w(i + 1))};
        return {Edge(u(t), v(1)), Edge(v(t), u(1)), Edge(w(t), w(1))};
    }

    std::vector<int> w_cycle() const {
        std::vector<int> c;
        for (int i = 1; i <= t; ++i) c.push_back(w(i));
        return c;
    }

    std::vector<int> uv_cycle() const {
        std::vector<int> c;
        for (int i = 1; i <= t; ++i) c.push_back(u(i));
        for (int i = 1; i <= t; ++i) c.push_back(v(i));
        return c;
    }

private:
    int idx(int i) const {
        if (i < 1 || i > t) throw std::invalid_argument("flower index " + std::to_string(i) + " outside 1.." + std::to_string(t));
        return i - 1;
    }
};

// J(t) for odd t >= 5. With allow_any_t, any t >= 3 is accepted (the result
// is then not necessarily a snark; callers report its properties honestly).
inline Flower flower(int t, bool allow_any_t = false) {
    if (t < 3) throw std::invalid_argument("flower parameter t must be at least 3");
    if (!allow_any_t && (t < 5 || t % 2 == 0))
        throw std::invalid_argument("flower parameter t must be odd and at least 5 (or pass the override)");
    Flower fl;
    fl.t = t;
    std::vector<Edge> edges;
    for (int i = 1; i <= t; ++i)
        for (const Edge& e : fl.spokes(i)) edges.push_back(e);
    for (int i = 1; i <= t; ++i)
        for (const Edge& e : fl.link(i)) edges.push_back(e);
    fl.graph = Graph::build(4 * t, edges);
    return fl;
}

// The distinguished triple of pairwise independent Petersen edges whose
// removal leaves a bipartite graph; unique up to automorphism. Fixed here as
// a constant; the defining search is kept as a test oracle
// (find_petersen_h_triples below).
using PetersenH = std::array<Edge, 3>;

inline PetersenH petersen_H() { return {Edge(0, 1), Edge(3, 8), Edge(7, 9)}; }

inline bool is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<size_t>(s)] >= 0) continue;
        color[static_cast<size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (color[static_cast<size_t>(w)] < 0) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Exhaustive search for all 3-sets of pairwise independent edges whose
// removal leaves the graph bipartite. On the Petersen graph this pins down
// petersen_H() up to automorphism.
inline std::vector<PetersenH> find_petersen_h_triples(const Graph& g) {
    std::vector<PetersenH> out;
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    auto independent = [&](const Edge& a, const Edge& b) {
        return a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (!independent(edges[i], edges[j])) continue;
            for (int k = j + 1; k < m; ++k) {
                if (!independent(edges[i], edges[k]) || !independent(edges[j], edges[k])) continue;
                Graph rest = delete_edges(g, {edges[i], edges[j], edges[k]});
                if (is_bipartite(rest)) out.push_back({edges[i], edges[j], edges[k]});
            }
        }
    return out;
}

}  // namespace snarks

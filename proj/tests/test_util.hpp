#pragma once

#include <cstdint>
#include <vector>

#include "snarks/graph.hpp"

namespace test_util {

// deterministic xorshift rng for property-style tests
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed * 2654435761u + 1) {}
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
    bool chance(double p) { return static_cast<double>(next() % 1000000) < p * 1000000; }
};

inline snarks::Graph random_graph(int n, double p, Rng& rng) {
    std::vector<snarks::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) edges.emplace_back(u, v);
    return snarks::Graph::build(n, edges);
}

inline std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<size_t>(i)], p[static_cast<size_t>(rng.below(i + 1))]);
    return p;
}

}  // namespace test_util

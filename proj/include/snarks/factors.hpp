#pragma once

#include <array>
#include <functional>
#include <optional>
#include <set>

#include "snarks/graph.hpp"

namespace snarks {

// A spanning 2-regular subgraph, stored as vertex-disjoint cycles covering
// every vertex. Cycles are canonical: each starts at its least vertex and
// runs toward the smaller of that vertex's two cycle neighbors; the list is
// ordered by starting vertex.
struct TwoFactor {
    std::vector<std::vector<int>> cycles;

    std::vector<int> spectrum() const {
        std::vector<int> s;
        for (const auto& c : cycles) s.push_back(static_cast<int>(c.size()));
        std::sort(s.begin(), s.end());
        return s;
    }

    std::vector<Edge> edge_set() const {
        std::vector<Edge> out;
        for (const auto& c : cycles)
            for (size_t i = 0; i < c.size(); ++i) out.emplace_back(c[i], c[(i + 1) % c.size()]);
        std::sort(out.begin(), out.end());
        return out;
    }

    bool contains(const Edge& e) const {
        for (const auto& c : cycles)
            for (size_t i = 0; i < c.size(); ++i)
                if (Edge(c[i], c[(i + 1) % c.size()]) == e) return true;
        return false;
    }

    // Index into `cycles` of the cycle through e, or -1.
    int cycle_of(const Edge& e) const {
        for (size_t k = 0; k < cycles.size(); ++k) {
            const auto& c = cycles[k];
            for (size_t i = 0; i < c.size(); ++i)
                if (Edge(c[i], c[(i + 1) % c.size()]) == e) return static_cast<int>(k);
        }
        return -1;
    }

    std::optional<std::vector<int>> even_cycle() const {
        for (const auto& c : cycles)
            if (c.size() % 2 == 0) return c;
        return std::nullopt;
    }

    friend bool operator==(const TwoFactor&, const TwoFactor&) = default;
};

// Checks the defining invariants of a TwoFactor against its host graph:
// disjoint cycles of length >= 3 covering every vertex, along graph edges.
inline bool validate_two_factor(const Graph& g, const TwoFactor& f) {
    uint64_t seen = 0;
    for (const auto& c : f.cycles) {
        if (c.size() < 3) return false;
        for (size_t i = 0; i < c.size(); ++i) {
            int a = c[i], b = c[(i + 1) % c.size()];
            if (a < 0 || a >= g.vertex_count()) return false;
            if (seen & Graph::bit(a)) return false;
            seen |= Graph::bit(a);
            if (!g.has_edge(a, b)) return false;
        }
    }
    const int n = g.vertex_count();
    uint64_t all = (n == 64) ? ~uint64_t{0} : (Graph::bit(n) - 1);
    return seen == all;
}

// Edge constraints for factor enumeration.
struct FactorConstraint {
    std::vector<Edge> must_contain;
    std::vector<Edge> must_avoid;

    static FactorConstraint containing(std::vector<Edge> keep) { return {std::move(keep), {}}; }
    static FactorConstraint avoiding(std::vector<Edge> drop) { return {{}, std::move(drop)}; }
};

namespace detail {

enum class EdgeState : char { free_edge, forced_in, forced_out };

// Backtracking enumeration of spanning subgraphs in which every vertex has
// degree exactly `target`. Edges are decided in canonical (sorted) order,
// "include" branch first, so output order is deterministic: selections are
// produced in lexicographic order of their sorted edge-index lists.
// The visitor returns false to abort the whole enumeration.
class DegreeFactorSearch {
public:
    DegreeFactorSearch(const Graph& g, int target, const FactorConstraint& c) : g_(g), target_(target) {
        const auto& edges = g.edges();
        state_.assign(edges.size(), EdgeState::free_edge);
        for (const Edge& e : c.must_contain) state_[static_cast<size_t>(g.edge_index(e))] = EdgeState::forced_in;
        for (const Edge& e : c.must_avoid) {
            size_t i = static_cast<size_t>(g.edge_index(e));
            if (state_[i] == EdgeState::forced_in)
                throw std::invalid_argument("constraint lists edge " + to_string(e) + " as both kept and avoided");
            state_[i] = EdgeState::forced_out;
        }
        deg_.assign(static_cast<size_t>(g.vertex_count()), 0);
        avail_.assign(static_cast<size_t>(g.vertex_count()), 0);
        for (const Edge& e : edges) {
            ++avail_[static_cast<size_t>(e.u)];
            ++avail_[static_cast<size_t>(e.v)];
        }
        chosen_.assign(edges.size(), 0);
    }

    void run(const std::function<bool(const std::vector<char>&)>& visit) {
        visit_ = &visit;
        stopped_ = false;
        for (int v = 0; v < g_.vertex_count(); ++v)
            if (avail_[static_cast<size_t>(v)] < target_) return;  // some vertex can never reach target
        descend(0);
    }

private:
    bool feasible(int v) const {
        size_t i = static_cast<size_t>(v);
        return deg_[i] <= target_ && deg_[i] + avail_[i] >= target_;
    }

    void descend(size_t i) {
        if (stopped_) return;
        if (i == state_.size()) {
            for (int d : deg_)
                if (d != target_) return;
            if (!(*visit_)(chosen_)) stopped_ = true;
            return;
        }
        const Edge e = g_.edges()[i];
        size_t u = static_cast<size_t>(e.u), v = static_cast<size_t>(e.v);
        --avail_[u];
        --avail_[v];
        if (state_[i] != EdgeState::forced_out && deg_[u] < target_ && deg_[v] < target_) {
            ++deg_[u];
            ++deg_[v];
            if (feasible(e.u) && feasible(e.v)) {
                chosen_[i] = 1;
                descend(i + 1);
                chosen_[i] = 0;
            }
            --deg_[u];
            --deg_[v];
        }
        if (state_[i] != EdgeState::forced_in && feasible(e.u) && feasible(e.v)) descend(i + 1);
        ++avail_[u];
        ++avail_[v];
    }

    const Graph& g_;
    int target_;
    std::vector<EdgeState> state_;
    std::vector<int> deg_, avail_;
    std::vector<char> chosen_;
    const std::function<bool(const std::vector<char>&)>* visit_ = nullptr;
    bool stopped_ = false;
};

inline TwoFactor cycles_from_selection(const Graph& g, const std::vector<char>& chosen) {
    const int n = g.vertex_count();
    std::vector<std::array<int, 2>> nb(static_cast<size_t>(n), {-1, -1});
    for (size_t i = 0; i < chosen.size(); ++i) {
        if (!chosen[i]) continue;
        const Edge& e = g.edges()[i];
        auto attach = [&](int a, int b) {
            auto& slots = nb[static_cast<size_t>(a)];
            slots[slots[0] < 0 ? 0 : 1] = b;
        };
        attach(e.u, e.v);
        attach(e.v, e.u);
    }
    TwoFactor f;
    uint64_t visited = 0;
    for (int start = 0; start < n; ++start) {
        if (visited & Graph::bit(start)) continue;
        std::vector<int> cycle{start};
        visited |= Graph::bit(start);
        int prev = start;
        int cur = std::min(nb[static_cast<size_t>(start)][0], nb[static_cast<size_t>(start)][1]);
        while (cur != start) {
            cycle.push_back(cur);
            visited |= Graph::bit(cur);
            const auto& slots = nb[static_cast<size_t>(cur)];
            int next = (slots[0] == prev) ? slots[1] : slots[0];
            prev = cur;
            cur = next;
        }
        f.cycles.push_back(std::move(cycle));
    }
    return f;
}

}  // namespace detail

// Streams 2-factors of g satisfying the constraint, in canonical order.
// The visitor returns false to stop enumeration early.
inline void for_each_two_factor(const Graph& g, const FactorConstraint& c,
                                const std::function<bool(const TwoFactor&)>& visit) {
    detail::DegreeFactorSearch search(g, 2, c);
    search.run([&](const std::vector<char>& chosen) { return visit(detail::cycles_from_selection(g, chosen)); });
}

inline std::vector<TwoFactor> enumerate_two_factors(const Graph& g, const FactorConstraint& c = {}) {
    std::vector<TwoFactor> out;
    for_each_two_factor(g, c, [&](const TwoFactor& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

// All spanning 1-regular edge subsets, in lexicographic order of their sorted
// edge lists. Odd-order graphs yield the empty list.
inline std::vector<std::vector<Edge>> enumerate_perfect_matchings(const Graph& g) {
    std::vector<std::vector<Edge>> out;
    detail::DegreeFactorSearch search(g, 1, {});
    search.run([&](const std::vector<char>& chosen) {
        std::vector<Edge> m;
        for (size_t i = 0; i < chosen.size(); ++i)
            if (chosen[i]) m.push_back(g.edges()[i]);
        out.push_back(std::move(m));
        return true;
    });
    return out;
}

// 2-factors of g - v, with cycle labels mapped back to g's vertex labels.
inline std::vector<TwoFactor> two_factors_of_vertex_deleted(const Graph& g, int v) {
    VertexDeletion del = delete_vertices(g, {v});
    std::vector<TwoFactor> out = enumerate_two_factors(del.graph);
    for (TwoFactor& f : out)
        for (auto& cycle : f.cycles)
            for (int& x : cycle) x = del.new_to_old[static_cast<size_t>(x)];
    return out;
}

struct OddTwoFactoredReport {
    bool odd = false;        // every cycle of every 2-factor has odd length
    bool vacuous = false;    // the graph has no 2-factor at all
    std::optional<TwoFactor> witness;  // a 2-factor with an even cycle, when not odd
    std::vector<int> witness_cycle;    // the even cycle inside the witness

    explicit operator bool() const { return odd; }
};

inline OddTwoFactoredReport is_odd_two_factored(const Graph& g) {
    OddTwoFactoredReport rep;
    bool any = false;
    rep.odd = true;
    for_each_two_factor(g, {}, [&](const TwoFactor& f) {
        any = true;
        if (auto even = f.even_cycle()) {
            rep.odd = false;
            rep.witness = f;
            rep.witness_cycle = *even;
            return false;
        }
        return true;
    });
    rep.vacuous = !any;
    return rep;
}

struct TwoFactorBehavior {
    bool two_factor_hamiltonian = false;
    bool two_factor_isomorphic = false;
    bool pseudo_two_factor_isomorphic = false;
    bool odd_two_factored = false;
};

// Classification from the full list of cycle spectra. Throws when the graph
// has no 2-factor.
inline TwoFactorBehavior classify_two_factor_behavior(const Graph& g) {
    std::set<std::vector<int>> spectra;
    std::set<int> cycle_count_parities;
    bool all_odd = true;
    for_each_two_factor(g, {}, [&](const TwoFactor& f) {
        std::vector<int> s = f.spectrum();
        for (int len : s)
            if (len % 2 == 0) all_odd = false;
        cycle_count_parities.insert(static_cast<int>(s.size()) % 2);
        spectra.insert(std::move(s));
        return true;
    });
    if (spectra.empty()) throw std::invalid_argument("graph has no 2-factor");
    TwoFactorBehavior b;
    b.two_factor_hamiltonian =
        spectra.size() == 1 && *spectra.begin() == std::vector<int>{g.vertex_count()};
    b.two_factor_isomorphic = spectra.size() == 1;
    b.pseudo_two_factor_isomorphic = cycle_count_parities.size() == 1;
    b.odd_two_factored = all_odd;
    // all-odd spectra force one cycle-count parity (the parity of n)
    if (b.odd_two_factored && !b.pseudo_two_factor_isomorphic)
        throw std::logic_error("internal: odd 2-factored graph classified as not pseudo 2-factor isomorphic");
    return b;
}

}  // namespace snarks

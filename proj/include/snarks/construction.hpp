#pragma once

#include <array>
#include <map>
#include <sstream>

#include "snarks/coloring.hpp"
#include "snarks/connectivity.hpp"
#include "snarks/factors.hpp"
#include "snarks/generators.hpp"
#include "snarks/graph.hpp"
#include "snarks/symmetry.hpp"

namespace snarks {

// Step 3 of the surgery offers two target pairings for the join edges.
enum class JoinPattern { A, B };

inline std::string to_string(JoinPattern p) { return p == JoinPattern::A ? "A" : "B"; }

// Full description of one surgery: remove adjacent x,y from `left`, remove
// independent edges f,g from `right`, join the four loose ends. `pattern`
// picks which neighbor pair meets which removed edge; the flips choose the
// orientation within each pair. All eight wirings are expressible.
struct DotProductSpec {
    Graph left;
    Edge xy;
    Graph right;
    Edge f, g;
    JoinPattern pattern = JoinPattern::A;
    bool flip_first = false;
    bool flip_second = false;
};

// The four join edges of a dot product, with the vertex bookkeeping needed
// to reason about covers of the cut: r,s are the surviving neighbors of x,
// t,u those of y, and a,b / c,d the endpoints of the removed edges f / g.
// All fields are in the labels of the product graph; vertices below
// left_count form the left side.
struct FourCut {
    std::array<Edge, 4> edges;  // join edges at r, s, t, u in that order
    int r = 0, s = 0, t = 0, u = 0;
    int a = 0, b = 0, c = 0, d = 0;
    int left_count = 0;

    bool on_left(int v) const { return v < left_count; }
    bool f_side(int v) const { return v == a || v == b; }
    bool g_side(int v) const { return v == c || v == d; }
};

struct DotProduct {
    Graph graph;
    FourCut cut;
    std::vector<int> left_map;   // left labels  -> product labels (-1 for x,y)
    std::vector<int> right_map;  // right labels -> product labels
};

// Isaacs' dot product. Operands must be cubic with cyclic edge connectivity
// at least 4 (which also rules out the degenerate join collisions). The
// product keeps the left side first: left vertices minus {x,y} are relabeled
// ascending, then the right vertices follow.
inline DotProduct dot_product(const DotProductSpec& spec) {
    if (!is_cubic(spec.left) || !is_cubic(spec.right))
        throw std::invalid_argument("dot product requires cubic operands");
    if (!spec.left.has_edge(spec.xy)) throw std::invalid_argument("xy is not an edge of the left operand");
    if (!spec.right.has_edge(spec.f) || !spec.right.has_edge(spec.g))
        throw std::invalid_argument("f,g must be edges of the right operand");
    const Edge f = spec.f, g = spec.g;
    if (f.u == g.u || f.u == g.v || f.v == g.u || f.v == g.v)
        throw std::invalid_argument("f and g must be independent edges");
    for (const Graph* side : {&spec.left, &spec.right}) {
        CyclicConnectivity cc = cyclic_edge_connectivity(*side, 4);
        if (!cc.defined || cc.value < 4)
            throw std::invalid_argument("dot product operands must be cyclically 4-edge-connected");
    }

    const int x = spec.xy.u, y = spec.xy.v;
    std::vector<int> rs, tu;
    for (int w : spec.left.neighbors(x))
        if (w != y) rs.push_back(w);
    for (int w : spec.left.neighbors(y))
        if (w != x) tu.push_back(w);
    if (rs.size() != 2 || tu.size() != 2 || rs[0] == tu[0] || rs[0] == tu[1] || rs[1] == tu[0] || rs[1] == tu[1])
        throw std::invalid_argument("x and y must leave four distinct join points");

    VertexDeletion left_cut = delete_vertices(spec.left, {x, y});
    Graph right_cut = delete_edges(spec.right, {f, g});
    const int nl = left_cut.graph.vertex_count();

    DotProduct out;
    out.left_map = left_cut.old_to_new;
    out.right_map.resize(static_cast<size_t>(spec.right.vertex_count()));
    for (int v = 0; v < spec.right.vertex_count(); ++v) out.right_map[static_cast<size_t>(v)] = nl + v;

    std::vector<Edge> edges = left_cut.graph.edges();
    for (const Edge& e : right_cut.edges()) edges.emplace_back(nl + e.u, nl + e.v);

    FourCut& cut = out.cut;
    cut.left_count = nl;
    cut.r = out.left_map[static_cast<size_t>(rs[0])];
    cut.s = out.left_map[static_cast<size_t>(rs[1])];
    cut.t = out.left_map[static_cast<size_t>(tu[0])];
    cut.u = out.left_map[static_cast<size_t>(tu[1])];
    cut.a = out.right_map[static_cast<size_t>(f.u)];
    cut.b = out.right_map[static_cast<size_t>(f.v)];
    cut.c = out.right_map[static_cast<size_t>(g.u)];
    cut.d = out.right_map[static_cast<size_t>(g.v)];

    auto wire = [&](int first, int second, bool flip) {
        return flip ? std::array<int, 2>{second, first} : std::array<int, 2>{first, second};
    };
    std::array<int, 2> rs_targets, tu_targets;
    if (spec.pattern == JoinPattern::A) {
        rs_targets = wire(cut.a, cut.b, spec.flip_first);
        tu_targets = wire(cut.c, cut.d, spec.flip_second);
    } else {
        rs_targets = wire(cut.c, cut.d, spec.flip_first);
        tu_targets = wire(cut.a, cut.b, spec.flip_second);
    }
    cut.edges = {Edge(cut.r, rs_targets[0]), Edge(cut.s, rs_targets[1]), Edge(cut.t, tu_targets[0]),
                 Edge(cut.u, tu_targets[1])};
    for (const Edge& e : cut.edges) edges.push_back(e);

    out.graph = Graph::build(nl + spec.right.vertex_count(), edges);
    if (!is_cubic(out.graph)) throw std::logic_error("internal: dot product produced a non-cubic graph");
    return out;
}

// --------------------------------------------------------------------------
// Bold edges: an edge xy such that deleting either endpoint, keeping the
// edge, or avoiding the edge can only produce all-odd 2-factors.

struct BoldReport {
    Edge edge;
    bool cond_vertex_deleted = false;  // (i)   all 2-factors of G-x and G-y odd
    bool cond_containing = false;      // (ii)  all 2-factors through xy odd
    bool cond_avoiding = false;        // (iii) all 2-factors avoiding xy odd
    bool shortcut_used = false;        // (ii)/(iii) granted: the graph is odd 2-factored
    bool bold = false;

    std::optional<int> witness_deleted_vertex;       // endpoint whose deletion fails (i)
    std::optional<TwoFactor> witness_vertex_deleted; // in the host graph's labels, minus that vertex
    std::optional<TwoFactor> witness_containing;
    std::optional<TwoFactor> witness_avoiding;
};

namespace detail {

// all 2-factors under the constraint are all-odd; otherwise the first
// offender in canonical order
inline std::optional<TwoFactor> first_even_factor(const Graph& g, const FactorConstraint& c) {
    std::optional<TwoFactor> found;
    for_each_two_factor(g, c, [&](const TwoFactor& f) {
        if (f.even_cycle()) {
            found = f;
            return false;
        }
        return true;
    });
    return found;
}

// maps a factor of a vertex-deleted graph back to host labels
inline TwoFactor lift_factor(const TwoFactor& f, const std::vector<int>& new_to_old) {
    TwoFactor out = f;
    for (auto& cycle : out.cycles)
        for (int& v : cycle) v = new_to_old[static_cast<size_t>(v)];
    return out;
}

// all 2-factors of g - v have only odd cycles; otherwise a witness
inline std::optional<TwoFactor> even_factor_of_deleted(const Graph& g, int v) {
    VertexDeletion del = delete_vertices(g, {v});
    if (auto f = first_even_factor(del.graph, {})) return lift_factor(*f, del.new_to_old);
    return std::nullopt;
}

}  // namespace detail

inline BoldReport is_bold_edge(const Graph& g, const Edge& e, bool force_full_eval = false,
                               std::optional<bool> odd_two_factored_hint = std::nullopt) {
    if (!is_cubic(g)) throw std::invalid_argument("bold edges are defined for cubic graphs");
    if (!g.has_edge(e)) throw std::invalid_argument("no such edge " + to_string(e));
    BoldReport rep;
    rep.edge = e;

    rep.cond_vertex_deleted = true;
    for (int v : {e.u, e.v}) {
        if (auto w = detail::even_factor_of_deleted(g, v)) {
            rep.cond_vertex_deleted = false;
            rep.witness_deleted_vertex = v;
            rep.witness_vertex_deleted = *w;
            break;
        }
    }

    bool odd = odd_two_factored_hint ? *odd_two_factored_hint : is_odd_two_factored(g).odd;
    if (odd && !force_full_eval) {
        rep.cond_containing = rep.cond_avoiding = true;
        rep.shortcut_used = true;
    } else {
        auto contain = detail::first_even_factor(g, FactorConstraint::containing({e}));
        rep.cond_containing = !contain.has_value();
        rep.witness_containing = contain;
        auto avoid = detail::first_even_factor(g, FactorConstraint::avoiding({e}));
        rep.cond_avoiding = !avoid.has_value();
        rep.witness_avoiding = avoid;
    }
    rep.bold = rep.cond_vertex_deleted && rep.cond_containing && rep.cond_avoiding;
    return rep;
}

enum class Prune { orbits, none };

// All bold edges. With Prune::orbits, condition (i) is evaluated once per
// vertex orbit and edges once per edge orbit, then expanded through the
// group; the unpruned scan is retained as the cross-check oracle.
inline std::vector<Edge> bold_edges(const Graph& g, Prune prune = Prune::orbits) {
    if (!is_cubic(g)) throw std::invalid_argument("bold edges are defined for cubic graphs");
    const int n = g.vertex_count();
    bool odd = is_odd_two_factored(g).odd;

    std::vector<char> vertex_ok(static_cast<size_t>(n), 0);
    if (prune == Prune::orbits) {
        OrbitPartition orbits = vertex_orbits(g);
        for (const auto& block : orbits.blocks) {
            bool ok = !detail::even_factor_of_deleted(g, block[0]).has_value();
            for (int v : block) vertex_ok[static_cast<size_t>(v)] = ok;
        }
    } else {
        for (int v = 0; v < n; ++v) vertex_ok[static_cast<size_t>(v)] = !detail::even_factor_of_deleted(g, v).has_value();
    }

    auto edge_is_bold = [&](const Edge& e) {
        if (!vertex_ok[static_cast<size_t>(e.u)] || !vertex_ok[static_cast<size_t>(e.v)]) return false;
        if (odd) return true;  // (ii) and (iii) hold outright
        return !detail::first_even_factor(g, FactorConstraint::containing({e})).has_value() &&
               !detail::first_even_factor(g, FactorConstraint::avoiding({e})).has_value();
    };

    std::set<Edge> result;
    if (prune == Prune::orbits) {
        EdgeOrbitPartition eorbits = edge_orbits(g);
        for (const auto& block : eorbits.blocks)
            if (edge_is_bold(block[0])) result.insert(block.begin(), block.end());
    } else {
        for (const Edge& e : g.edges())
            if (edge_is_bold(e)) result.insert(e);
    }
    return {result.begin(), result.end()};
}

// --------------------------------------------------------------------------
// Gadget pairs: two independent edges f,g of a snark satisfying the four
// conditions that drive the odd-preserving surgery, including the
// augmented-graph condition (iv).

struct GadgetReport {
    Edge f, g;
    bool cond_no_avoiding = false;  // (i)   no 2-factor avoids both
    bool cond_exactly_one = false;  // (ii)  factors with exactly one of f,g are odd
    bool cond_both = false;         // (iii) factors with both are odd, f and g on different cycles
    bool cond_augmented = false;    // (iv)  in (R-{f,g}) + {ac,ad,bc,bd}, factors with exactly one
                                    //       new edge have that cycle even and the rest odd
    bool gadget = false;

    bool exactly_one_vacuous = false;  // no factor contains exactly one of f,g
    bool both_vacuous = false;         // no factor contains both
    bool augmented_vacuous = false;    // no factor of the augmented graph uses exactly one new edge
    bool augmented_collision = false;  // some cross pair ac,ad,bc,bd was already an edge of R

    std::optional<TwoFactor> witness_avoiding;   // (i) violator
    std::optional<TwoFactor> witness_exactly_one;
    std::optional<TwoFactor> witness_both;
    bool witness_both_same_cycle = false;  // the (iii) violation was same-cycle rather than parity
    std::optional<TwoFactor> witness_augmented;  // lives in the augmented graph (same vertex labels)
    std::optional<Edge> witness_augmented_edge;  // the one new edge that factor uses
};

namespace detail {

struct AugmentedGraph {
    Graph graph;
    std::vector<Edge> new_edges;  // the cross edges actually added
    bool collision = false;
};

inline AugmentedGraph build_augmented(const Graph& r, const Edge& f, const Edge& g) {
    AugmentedGraph out;
    Graph stripped = delete_edges(r, {f, g});
    std::vector<Edge> cross = {Edge(f.u, g.u), Edge(f.u, g.v), Edge(f.v, g.u), Edge(f.v, g.v)};
    for (const Edge& e : cross) {
        if (stripped.has_edge(e)) {
            out.collision = true;
            continue;
        }
        out.new_edges.push_back(e);
    }
    out.graph = add_edges(stripped, out.new_edges);
    return out;
}

}  // namespace detail

inline GadgetReport is_gadget_pair(const Graph& r, const Edge& f, const Edge& g) {
    if (!is_cubic(r)) throw std::invalid_argument("gadget pairs are defined for cubic graphs");
    if (!r.has_edge(f) || !r.has_edge(g)) throw std::invalid_argument("f,g must be edges of the graph");
    if (f.u == g.u || f.u == g.v || f.v == g.u || f.v == g.v)
        throw std::invalid_argument("f and g must be independent");

    GadgetReport rep;
    rep.f = f;
    rep.g = g;

    // (i)
    rep.witness_avoiding = std::nullopt;
    for_each_two_factor(r, FactorConstraint::avoiding({f, g}), [&](const TwoFactor& fac) {
        rep.witness_avoiding = fac;
        return false;
    });
    rep.cond_no_avoiding = !rep.witness_avoiding.has_value();

    // (ii): containing f avoiding g, and vice versa
    rep.cond_exactly_one = true;
    int exactly_one_count = 0;
    for (const auto& [keep, drop] : {std::pair<Edge, Edge>{f, g}, std::pair<Edge, Edge>{g, f}}) {
        for_each_two_factor(r, FactorConstraint{{keep}, {drop}}, [&](const TwoFactor& fac) {
            ++exactly_one_count;
            if (fac.even_cycle()) {
                rep.cond_exactly_one = false;
                rep.witness_exactly_one = fac;
                return false;
            }
            return true;
        });
        if (!rep.cond_exactly_one) break;
    }
    rep.exactly_one_vacuous = rep.cond_exactly_one && exactly_one_count == 0;

    // (iii)
    rep.cond_both = true;
    int both_count = 0;
    for_each_two_factor(r, FactorConstraint::containing({f, g}), [&](const TwoFactor& fac) {
        ++both_count;
        if (fac.even_cycle()) {
            rep.cond_both = false;
            rep.witness_both = fac;
            rep.witness_both_same_cycle = false;
            return false;
        }
        if (fac.cycle_of(f) == fac.cycle_of(g)) {
            rep.cond_both = false;
            rep.witness_both = fac;
            rep.witness_both_same_cycle = true;
            return false;
        }
        return true;
    });
    rep.both_vacuous = rep.cond_both && both_count == 0;

    // (iv)
    detail::AugmentedGraph aug = detail::build_augmented(r, f, g);
    rep.augmented_collision = aug.collision;
    rep.cond_augmented = true;
    int augmented_count = 0;
    for_each_two_factor(aug.graph, {}, [&](const TwoFactor& fac) {
        std::vector<Edge> present;
        for (const Edge& e : aug.new_edges)
            if (fac.contains(e)) present.push_back(e);
        if (present.size() != 1) return true;
        ++augmented_count;
        bool ok = true;
        int through = fac.cycle_of(present[0]);
        for (size_t k = 0; k < fac.cycles.size(); ++k) {
            bool even = fac.cycles[k].size() % 2 == 0;
            if (static_cast<int>(k) == through ? !even : even) ok = false;
        }
        if (!ok) {
            rep.cond_augmented = false;
            rep.witness_augmented = fac;
            rep.witness_augmented_edge = present[0];
            return false;
        }
        return true;
    });
    rep.augmented_vacuous = rep.cond_augmented && augmented_count == 0;

    rep.gadget = rep.cond_no_avoiding && rep.cond_exactly_one && rep.cond_both && rep.cond_augmented;
    return rep;
}

namespace detail {

// scan path: evaluates the conditions cheapest-first and stops at the first
// failure; the full report above is for reporting on a specific pair
inline bool is_gadget_pair_quick(const Graph& r, const Edge& f, const Edge& g) {
    bool avoiding = false;
    for_each_two_factor(r, FactorConstraint::avoiding({f, g}), [&](const TwoFactor&) {
        avoiding = true;
        return false;
    });
    if (avoiding) return false;

    AugmentedGraph aug = build_augmented(r, f, g);
    bool aug_ok = true;
    for_each_two_factor(aug.graph, {}, [&](const TwoFactor& fac) {
        int present = 0;
        const Edge* the_edge = nullptr;
        for (const Edge& e : aug.new_edges)
            if (fac.contains(e)) {
                ++present;
                the_edge = &e;
            }
        if (present != 1) return true;
        int through = fac.cycle_of(*the_edge);
        for (size_t k = 0; k < fac.cycles.size(); ++k) {
            bool even = fac.cycles[k].size() % 2 == 0;
            if (static_cast<int>(k) == through ? !even : even) {
                aug_ok = false;
                return false;
            }
        }
        return true;
    });
    if (!aug_ok) return false;

    bool thirds_ok = true;
    for_each_two_factor(r, FactorConstraint::containing({f, g}), [&](const TwoFactor& fac) {
        if (fac.even_cycle() || fac.cycle_of(f) == fac.cycle_of(g)) {
            thirds_ok = false;
            return false;
        }
        return true;
    });
    if (!thirds_ok) return false;

    for (const auto& [keep, drop] : {std::pair<Edge, Edge>{f, g}, std::pair<Edge, Edge>{g, f}}) {
        bool ok = true;
        for_each_two_factor(r, FactorConstraint{{keep}, {drop}}, [&](const TwoFactor& fac) {
            if (fac.even_cycle()) {
                ok = false;
                return false;
            }
            return true;
        });
        if (!ok) return false;
    }
    return true;
}

inline bool edges_independent(const Edge& a, const Edge& b) {
    return a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v;
}

}  // namespace detail

using EdgePair = std::pair<Edge, Edge>;  // normalized: first < second

inline EdgePair make_edge_pair(const Edge& a, const Edge& b) {
    return a < b ? EdgePair{a, b} : EdgePair{b, a};
}

// All unordered gadget pairs. With Prune::orbits the first coordinate runs
// over edge-orbit representatives only and results are closed back up under
// the group's generators.
inline std::vector<EdgePair> gadget_pairs(const Graph& r, Prune prune = Prune::orbits) {
    if (!is_cubic(r)) throw std::invalid_argument("gadget pairs are defined for cubic graphs");
    std::set<EdgePair> found;

    if (prune == Prune::orbits) {
        EdgeOrbitPartition orbits = edge_orbits(r);
        for (const auto& block : orbits.blocks) {
            const Edge& f = block[0];
            for (const Edge& g : r.edges()) {
                if (!detail::edges_independent(f, g)) continue;
                if (detail::is_gadget_pair_quick(r, f, g)) found.insert(make_edge_pair(f, g));
            }
        }
        // close under the group
        std::vector<EdgePair> frontier(found.begin(), found.end());
        while (!frontier.empty()) {
            std::vector<EdgePair> next;
            for (const EdgePair& p : frontier)
                for (const Permutation& sigma : orbits.generators) {
                    EdgePair image = make_edge_pair(
                        Edge(sigma[static_cast<size_t>(p.first.u)], sigma[static_cast<size_t>(p.first.v)]),
                        Edge(sigma[static_cast<size_t>(p.second.u)], sigma[static_cast<size_t>(p.second.v)]));
                    if (found.insert(image).second) next.push_back(image);
                }
            frontier = std::move(next);
        }
    } else {
        const auto& edges = r.edges();
        for (size_t i = 0; i < edges.size(); ++i)
            for (size_t j = i + 1; j < edges.size(); ++j) {
                if (!detail::edges_independent(edges[i], edges[j])) continue;
                if (detail::is_gadget_pair_quick(r, edges[i], edges[j])) found.insert(make_edge_pair(edges[i], edges[j]));
            }
    }
    return {found.begin(), found.end()};
}

// --------------------------------------------------------------------------
// The verified surgery: a bold edge on the left, a gadget pair on the right,
// and a post-construction check that the product is an odd 2-factored snark.

struct ConstructionError : std::runtime_error {
    BoldReport bold_report;
    GadgetReport gadget_report;
    ConstructionError(const std::string& msg, BoldReport br, GadgetReport gr)
        : std::runtime_error(msg), bold_report(std::move(br)), gadget_report(std::move(gr)) {}
};

inline DotProduct bold_gadget_dot_product(const Graph& left, const Edge& xy, const Graph& right, const Edge& f,
                                          const Edge& g, JoinPattern pattern = JoinPattern::A,
                                          bool flip_first = false, bool flip_second = false) {
    BoldReport bold = is_bold_edge(left, xy);
    GadgetReport gadget = is_gadget_pair(right, f, g);
    if (!bold.bold || !gadget.gadget) {
        std::string msg = "bold-gadget preconditions failed:";
        if (!bold.bold) msg += " " + to_string(xy) + " is not a bold edge of the left operand;";
        if (!gadget.gadget) msg += " {" + to_string(f) + "," + to_string(g) + "} is not a gadget pair of the right operand;";
        throw ConstructionError(msg, bold, gadget);
    }
    DotProduct dp = dot_product({left, xy, right, f, g, pattern, flip_first, flip_second});
    OddTwoFactoredReport odd = is_odd_two_factored(dp.graph);
    if (!odd.odd)
        throw ConstructionError("construction guarantee violated: product admits an even-cycled 2-factor", bold,
                                gadget);
    SnarkReport snark = is_snark(dp.graph);
    if (!snark.snark)
        throw ConstructionError("construction guarantee violated: product is not a snark", bold, gadget);
    return dp;
}

}  // namespace snarks

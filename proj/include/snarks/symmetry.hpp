#pragma once

#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "snarks/graph.hpp"

namespace snarks {

// A vertex bijection as an image array: p[v] is the image of v.
using Permutation = std::vector<int>;

inline Permutation identity_permutation(int n) {
    Permutation p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// (a * b)[v] = a[b[v]]  — apply b first, then a.
inline Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation out(b.size());
    for (size_t v = 0; v < b.size(); ++v) out[v] = a[static_cast<size_t>(b[v])];
    return out;
}

inline Permutation inverse(const Permutation& p) {
    Permutation out(p.size());
    for (size_t v = 0; v < p.size(); ++v) out[static_cast<size_t>(p[v])] = static_cast<int>(v);
    return out;
}

inline bool is_automorphism(const Graph& g, const Permutation& p) {
    if (p.size() != static_cast<size_t>(g.vertex_count())) return false;
    std::vector<char> hit(p.size(), 0);
    for (int im : p) {
        if (im < 0 || im >= g.vertex_count() || hit[static_cast<size_t>(im)]) return false;
        hit[static_cast<size_t>(im)] = 1;
    }
    for (const Edge& e : g.edges())
        if (!g.has_edge(p[static_cast<size_t>(e.u)], p[static_cast<size_t>(e.v)])) return false;
    return true;
}

// Relabels a graph: vertex v becomes p[v].
inline Graph apply_permutation(const Graph& g, const Permutation& p) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(p[static_cast<size_t>(e.u)], p[static_cast<size_t>(e.v)]);
    return Graph::build(g.vertex_count(), edges);
}

namespace detail {

inline std::vector<std::vector<int>> distance_matrix(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> dist(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), n));
    for (int s = 0; s < n; ++s) {
        auto& d = dist[static_cast<size_t>(s)];
        d[static_cast<size_t>(s)] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : g.neighbors(v))
                if (d[static_cast<size_t>(w)] == n) {
                    d[static_cast<size_t>(w)] = d[static_cast<size_t>(v)] + 1;
                    q.push_back(w);
                }
        }
    }
    return dist;
}

// Ordered partition of the vertex set. Cells keep their relative order under
// refinement; new subcells are ordered by their (label-invariant) split keys.
using OrderedPartition = std::vector<std::vector<int>>;

// Equitable-style refinement. The invariant attached to a vertex is, per
// current cell, the sorted multiset of graph distances to that cell; this
// subsumes neighbor counts (distance-1 entries) and splits regular graphs
// far better than degrees alone. Iterates until no cell splits.
inline void refine(const Graph& g, const std::vector<std::vector<int>>& dist, OrderedPartition& part) {
    const int n = g.vertex_count();
    (void)n;
    bool changed = true;
    while (changed) {
        changed = false;
        OrderedPartition next;
        next.reserve(part.size());
        for (const auto& cell : part) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<std::vector<int>>, std::vector<int>> split;
            for (int v : cell) {
                std::vector<std::vector<int>> key;
                key.reserve(part.size());
                for (const auto& other : part) {
                    std::vector<int> ds;
                    ds.reserve(other.size());
                    for (int w : other) ds.push_back(dist[static_cast<size_t>(v)][static_cast<size_t>(w)]);
                    std::sort(ds.begin(), ds.end());
                    key.push_back(std::move(ds));
                }
                split[std::move(key)].push_back(v);
            }
            if (split.size() > 1) changed = true;
            for (auto& [key, members] : split) {
                std::sort(members.begin(), members.end());
                next.push_back(std::move(members));
            }
        }
        part = std::move(next);
    }
}

inline bool is_discrete(const OrderedPartition& part) {
    for (const auto& cell : part)
        if (cell.size() != 1) return false;
    return true;
}

// Canonical-labeling search: individualize-and-refine on the first
// non-singleton cell, with discovered automorphisms pruning sibling branches
// whose target vertex already lies in the orbit of an explored one (under the
// subgroup fixing the individualized prefix pointwise). Skipped subtrees are
// images of explored ones, so the minimum certificate over visited leaves is
// the minimum over all leaves.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), dist_(distance_matrix(g)) {}

    void run() {
        OrderedPartition part;
        if (g_.vertex_count() > 0) {
            part.push_back(std::vector<int>(static_cast<size_t>(g_.vertex_count())));
            std::iota(part[0].begin(), part[0].end(), 0);
        }
        refine(g_, dist_, part);
        descend(part);
    }

    const std::string& best_certificate() const { return best_cert_; }
    const Permutation& best_labeling() const { return best_labeling_; }
    const std::vector<Permutation>& automorphisms() const { return autos_; }

private:
    void leaf(const OrderedPartition& part) {
        Permutation labeling(static_cast<size_t>(g_.vertex_count()));
        for (size_t k = 0; k < part.size(); ++k) labeling[static_cast<size_t>(part[k][0])] = static_cast<int>(k);
        std::string cert = emit_graph6(apply_permutation(g_, labeling));
        if (!have_first_) {
            have_first_ = true;
            first_cert_ = cert;
            first_labeling_ = labeling;
        } else {
            if (cert == first_cert_) record_automorphism(first_labeling_, labeling);
            if (!best_cert_.empty() && cert == best_cert_ && cert != first_cert_)
                record_automorphism(best_labeling_, labeling);
        }
        if (best_cert_.empty() || cert < best_cert_) {
            best_cert_ = std::move(cert);
            best_labeling_ = std::move(labeling);
        }
    }

    // automorphism mapping: v -> ref^-1(lab(v))
    void record_automorphism(const Permutation& ref, const Permutation& lab) {
        Permutation sigma = compose(inverse(ref), lab);
        bool is_id = true;
        for (size_t v = 0; v < sigma.size() && is_id; ++v) is_id = sigma[v] == static_cast<int>(v);
        if (is_id) return;
        if (!is_automorphism(g_, sigma)) throw std::logic_error("internal: derived permutation is not an automorphism");
        for (const auto& a : autos_)
            if (a == sigma) return;
        autos_.push_back(std::move(sigma));
    }

    // orbit of `seed` vertices under the discovered generators fixing `base_` pointwise
    uint64_t pruning_orbit(uint64_t seed) const {
        uint64_t orbit = seed;
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& a : autos_) {
                bool fixes_base = true;
                for (int b : base_)
                    if (a[static_cast<size_t>(b)] != b) {
                        fixes_base = false;
                        break;
                    }
                if (!fixes_base) continue;
                uint64_t image = 0;
                for (uint64_t m = orbit; m != 0; m &= m - 1)
                    image |= Graph::bit(a[static_cast<size_t>(std::countr_zero(m))]);
                if ((image & ~orbit) != 0) {
                    orbit |= image;
                    grew = true;
                }
            }
        }
        return orbit;
    }

    void descend(const OrderedPartition& part) {
        if (is_discrete(part)) {
            leaf(part);
            return;
        }
        size_t target = 0;
        while (part[target].size() == 1) ++target;
        uint64_t explored = 0;
        for (int v : part[target]) {
            if (explored != 0 && (pruning_orbit(explored) & Graph::bit(v))) {
                explored |= Graph::bit(v);
                continue;
            }
            OrderedPartition child;
            child.reserve(part.size() + 1);
            for (size_t k = 0; k < target; ++k) child.push_back(part[k]);
            child.push_back({v});
            std::vector<int> rest;
            for (int w : part[target])
                if (w != v) rest.push_back(w);
            child.push_back(std::move(rest));
            for (size_t k = target + 1; k < part.size(); ++k) child.push_back(part[k]);
            refine(g_, dist_, child);
            base_.push_back(v);
            descend(child);
            base_.pop_back();
            explored |= Graph::bit(v);
        }
    }

    const Graph& g_;
    std::vector<std::vector<int>> dist_;
    std::vector<int> base_;
    std::vector<Permutation> autos_;
    bool have_first_ = false;
    std::string first_cert_, best_cert_;
    Permutation first_labeling_, best_labeling_;
};

// |<gens>| by the Schreier lemma: orbit size of the first moved point times
// the order of its stabilizer, recursively. Generator lists are deduplicated
// at each level; fine for the small groups this library meets.
inline uint64_t permutation_group_order(std::vector<Permutation> gens, int n) {
    auto is_identity = [](const Permutation& p) {
        for (size_t v = 0; v < p.size(); ++v)
            if (p[v] != static_cast<int>(v)) return false;
        return true;
    };
    gens.erase(std::remove_if(gens.begin(), gens.end(), is_identity), gens.end());
    uint64_t order = 1;
    for (int b = 0; b < n && !gens.empty(); ++b) {
        bool moved = false;
        for (const auto& g : gens)
            if (g[static_cast<size_t>(b)] != b) moved = true;
        if (!moved) continue;
        // orbit of b with a transversal
        std::map<int, Permutation> transversal;
        transversal[b] = identity_permutation(n);
        std::deque<int> q{b};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (const auto& g : gens) {
                int y = g[static_cast<size_t>(x)];
                if (!transversal.count(y)) {
                    transversal[y] = compose(g, transversal[x]);
                    q.push_back(y);
                }
            }
        }
        order *= transversal.size();
        // Schreier generators for the stabilizer of b
        std::set<Permutation> stab;
        for (const auto& [x, tx] : transversal)
            for (const auto& g : gens) {
                Permutation s = compose(inverse(transversal[g[static_cast<size_t>(x)]]), compose(g, tx));
                if (!is_identity(s)) stab.insert(std::move(s));
            }
        gens.assign(stab.begin(), stab.end());
    }
    return order;
}

}  // namespace detail

// Canonical relabeling: isomorphic graphs map to byte-identical certificates.
// The certificate is the graph6 encoding of the relabeled graph.
struct CanonicalForm {
    Permutation labeling;  // original vertex -> canonical vertex
    std::string certificate;
};

inline CanonicalForm canonical_form(const Graph& g) {
    detail::CanonicalSearch search(g);
    search.run();
    CanonicalForm out;
    out.labeling = search.best_labeling();
    out.certificate = search.best_certificate();
    if (g.vertex_count() == 0) out.certificate = emit_graph6(g);
    return out;
}

struct AutomorphismGroup {
    std::vector<Permutation> generators;
    uint64_t order = 1;
    std::string name_hint;  // informational only: "trivial", "cyclic", "dihedral", "symmetric" or ""
};

namespace detail {

// element list of <gens> by closure, abandoned beyond `limit`
inline std::optional<std::vector<Permutation>> enumerate_group(const std::vector<Permutation>& gens, int n,
                                                               size_t limit) {
    std::set<Permutation> seen;
    std::deque<Permutation> q;
    seen.insert(identity_permutation(n));
    q.push_back(identity_permutation(n));
    while (!q.empty()) {
        Permutation p = std::move(q.front());
        q.pop_front();
        for (const auto& g : gens) {
            Permutation pg = compose(g, p);
            if (seen.insert(pg).second) {
                if (seen.size() > limit) return std::nullopt;
                q.push_back(std::move(pg));
            }
        }
    }
    return std::vector<Permutation>(seen.begin(), seen.end());
}

inline int element_order(const Permutation& p) {
    int n = static_cast<int>(p.size());
    std::vector<char> seen(p.size(), 0);
    int ord = 1;
    for (int v = 0; v < n; ++v) {
        if (seen[static_cast<size_t>(v)]) continue;
        int len = 0, x = v;
        do {
            seen[static_cast<size_t>(x)] = 1;
            x = p[static_cast<size_t>(x)];
            ++len;
        } while (x != v);
        ord = static_cast<int>(std::lcm(ord, len));
    }
    return ord;
}

inline std::string group_name_hint(const std::vector<Permutation>& gens, int n, uint64_t order) {
    if (order == 1) return "trivial";
    auto elements = enumerate_group(gens, n, 20000);
    if (!elements) return "";
    std::multiset<int> orders;
    for (const auto& p : *elements) orders.insert(element_order(p));
    if (orders.count(static_cast<int>(order)) > 0 && order <= 20000) return "cyclic";
    // dihedral of order 2m: a rotation of order m plus a reflection inverting it
    if (order % 2 == 0 && order >= 6) {
        int m = static_cast<int>(order / 2);
        for (const auto& r : *elements) {
            if (element_order(r) != m) continue;
            Permutation r_inv = inverse(r);
            for (const auto& s : *elements) {
                if (element_order(s) != 2) continue;
                if (compose(s, compose(r, s)) == r_inv) return "dihedral";
            }
            break;  // one rotation candidate suffices; conjugates behave alike
        }
    }
    // symmetric group S_k: order k! with the matching element-order multiset
    uint64_t fact = 1;
    for (int k = 1; k <= 10; ++k) {
        fact *= static_cast<uint64_t>(k);
        if (fact != order || k < 3) continue;
        std::multiset<int> expect;
        Permutation p = identity_permutation(k);
        do expect.insert(element_order(p));
        while (std::next_permutation(p.begin(), p.end()));
        if (expect == orders) return "symmetric";
    }
    return "";
}

}  // namespace detail

inline AutomorphismGroup automorphism_group(const Graph& g) {
    detail::CanonicalSearch search(g);
    search.run();
    AutomorphismGroup out;
    out.generators = search.automorphisms();
    for (const auto& p : out.generators)
        if (!is_automorphism(g, p)) throw std::logic_error("internal: generator does not preserve adjacency");
    out.order = detail::permutation_group_order(out.generators, g.vertex_count());
    out.name_hint = detail::group_name_hint(out.generators, g.vertex_count(), out.order);
    return out;
}

// Orbit partition of the vertex set; blocks ordered by least element.
struct OrbitPartition {
    std::vector<std::vector<int>> blocks;
    uint64_t group_order = 1;
    std::vector<Permutation> generators;
};

// Orbit partition of the edge set.
struct EdgeOrbitPartition {
    std::vector<std::vector<Edge>> blocks;
    uint64_t group_order = 1;
    std::vector<Permutation> generators;
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

}  // namespace detail

inline OrbitPartition vertex_orbits(const Graph& g) {
    AutomorphismGroup grp = automorphism_group(g);
    detail::UnionFind uf(g.vertex_count());
    for (const auto& p : grp.generators)
        for (int v = 0; v < g.vertex_count(); ++v) uf.unite(v, p[static_cast<size_t>(v)]);
    std::map<int, std::vector<int>> blocks;
    for (int v = 0; v < g.vertex_count(); ++v) blocks[uf.find(v)].push_back(v);
    OrbitPartition out;
    for (auto& [root, members] : blocks) out.blocks.push_back(std::move(members));
    out.group_order = grp.order;
    out.generators = std::move(grp.generators);
    return out;
}

inline EdgeOrbitPartition edge_orbits(const Graph& g) {
    AutomorphismGroup grp = automorphism_group(g);
    const int m = g.edge_count();
    detail::UnionFind uf(m);
    for (const auto& p : grp.generators)
        for (int i = 0; i < m; ++i) {
            const Edge& e = g.edges()[static_cast<size_t>(i)];
            uf.unite(i, g.edge_index(Edge(p[static_cast<size_t>(e.u)], p[static_cast<size_t>(e.v)])));
        }
    std::map<int, std::vector<Edge>> blocks;
    for (int i = 0; i < m; ++i) blocks[uf.find(i)].push_back(g.edges()[static_cast<size_t>(i)]);
    EdgeOrbitPartition out;
    for (auto& [root, members] : blocks) out.blocks.push_back(std::move(members));
    out.group_order = grp.order;
    out.generators = std::move(grp.generators);
    return out;
}

// Explicit adjacency-preserving bijection from g to h, or nullopt.
inline std::optional<Permutation> are_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
    CanonicalForm cg = canonical_form(g);
    CanonicalForm ch = canonical_form(h);
    if (cg.certificate != ch.certificate) return std::nullopt;
    Permutation mapping = compose(inverse(ch.labeling), cg.labeling);
    for (const Edge& e : g.edges())
        if (!h.has_edge(mapping[static_cast<size_t>(e.u)], mapping[static_cast<size_t>(e.v)]))
            throw std::logic_error("internal: certificate collision produced a non-isomorphism");
    return mapping;
}

}  // namespace snarks

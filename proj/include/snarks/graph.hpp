#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace snarks {

// Unordered vertex pair, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
        if (a == b) throw std::invalid_argument("loop edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

// Simple undirected graph on vertices 0..n-1, immutable after construction.
// Adjacency is kept as one 64-bit mask per vertex, so at most 64 vertices.
class Graph {
public:
    static constexpr int max_vertices = 64;

    Graph() = default;

    static Graph build(int n, std::span<const Edge> edges) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        if (n > max_vertices)
            throw std::invalid_argument("vertex count " + std::to_string(n) + " exceeds supported maximum " +
                                        std::to_string(max_vertices));
        Graph g;
        g.n_ = n;
        g.adj_.assign(static_cast<size_t>(n), 0);
        g.edges_.assign(edges.begin(), edges.end());
        std::sort(g.edges_.begin(), g.edges_.end());
        for (size_t i = 0; i < g.edges_.size(); ++i) {
            const Edge& e = g.edges_[i];
            if (e.u < 0 || e.v >= n)
                throw std::invalid_argument("edge " + to_string(e) + " out of range for n=" + std::to_string(n));
            if (i > 0 && g.edges_[i - 1] == e) throw std::invalid_argument("duplicate edge " + to_string(e));
            g.adj_[static_cast<size_t>(e.u)] |= bit(e.v);
            g.adj_[static_cast<size_t>(e.v)] |= bit(e.u);
        }
        return g;
    }

    static Graph build(int n, std::initializer_list<Edge> edges) {
        return build(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Sorted list of edges; the position of an edge in this list is its index.
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && (adj_[static_cast<size_t>(u)] & bit(v)) != 0;
    }

    bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

    uint64_t neighbor_mask(int v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }

    int degree(int v) const { return std::popcount(neighbor_mask(v)); }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (uint64_t m = neighbor_mask(v); m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    int edge_index(const Edge& e) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) throw std::invalid_argument("no such edge " + to_string(e));
        return static_cast<int>(it - edges_.begin());
    }

    friend bool operator==(const Graph&, const Graph&) = default;

    static uint64_t bit(int v) { return uint64_t{1} << v; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    }

    int n_ = 0;
    std::vector<uint64_t> adj_;
    std::vector<Edge> edges_;
};

inline std::vector<int> degrees(const Graph& g) {
    std::vector<int> d(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) d[static_cast<size_t>(v)] = g.degree(v);
    return d;
}

inline bool is_cubic(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) return false;
    return g.vertex_count() > 0;
}

// Vertices reachable from `start`, as a bitmask, restricted to `allowed`.
inline uint64_t reachable_mask(const Graph& g, int start, uint64_t allowed) {
    uint64_t seen = Graph::bit(start) & allowed;
    uint64_t frontier = seen;
    while (frontier != 0) {
        uint64_t next = 0;
        for (uint64_t m = frontier; m != 0; m &= m - 1) next |= g.neighbor_mask(std::countr_zero(m));
        frontier = next & allowed & ~seen;
        seen |= frontier;
    }
    return seen;
}

inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    uint64_t all = (n == 64) ? ~uint64_t{0} : (Graph::bit(n) - 1);
    return reachable_mask(g, 0, all) == all;
}

// Result of removing a vertex set: the induced subgraph plus the label maps.
// Surviving vertices are relabeled 0..n-|S|-1 in ascending original order.
struct VertexDeletion {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for deleted vertices
    std::vector<int> new_to_old;
};

inline VertexDeletion delete_vertices(const Graph& g, std::span<const int> removed) {
    const int n = g.vertex_count();
    uint64_t gone = 0;
    for (int v : removed) {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        gone |= Graph::bit(v);
    }
    VertexDeletion out;
    out.old_to_new.assign(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        if (gone & Graph::bit(v)) continue;
        out.old_to_new[static_cast<size_t>(v)] = static_cast<int>(out.new_to_old.size());
        out.new_to_old.push_back(v);
    }
    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
        int a = out.old_to_new[static_cast<size_t>(e.u)];
        int b = out.old_to_new[static_cast<size_t>(e.v)];
        if (a >= 0 && b >= 0) kept.emplace_back(a, b);
    }
    out.graph = Graph::build(static_cast<int>(out.new_to_old.size()), kept);
    return out;
}

inline VertexDeletion delete_vertices(const Graph& g, std::initializer_list<int> removed) {
    return delete_vertices(g, std::span<const int>(removed.begin(), removed.size()));
}

inline Graph delete_edges(const Graph& g, std::span<const Edge> removed) {
    std::vector<Edge> kept = g.edges();
    for (const Edge& e : removed) {
        auto it = std::find(kept.begin(), kept.end(), e);
        if (it == kept.end()) throw std::invalid_argument("cannot delete non-edge " + to_string(e));
        kept.erase(it);
    }
    return Graph::build(g.vertex_count(), kept);
}

inline Graph delete_edges(const Graph& g, std::initializer_list<Edge> removed) {
    return delete_edges(g, std::span<const Edge>(removed.begin(), removed.size()));
}

inline Graph add_edges(const Graph& g, std::span<const Edge> added) {
    std::vector<Edge> all = g.edges();
    for (const Edge& e : added) {
        if (g.has_edge(e)) throw std::invalid_argument("cannot add existing edge " + to_string(e));
        all.push_back(e);
    }
    return Graph::build(g.vertex_count(), all);
}

inline Graph add_edges(const Graph& g, std::initializer_list<Edge> added) {
    return add_edges(g, std::span<const Edge>(added.begin(), added.size()));
}

// ---------------------------------------------------------------------------
// graph6 interchange format (McKay encoding): printable bytes 63..126,
// optional ">>graph6<<" header on input, upper-triangle bit vector in 6-bit
// groups padded with zeros.

inline std::string emit_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
        out.push_back(static_cast<char>((n & 0x3f) + 63));
    }
    int bits = 0, value = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            value = (value << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(value + 63));
                bits = 0;
                value = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((value << (6 - bits)) + 63));
    return out;
}

inline Graph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());
    while (text.ends_with('\n') || text.ends_with('\r')) text.remove_suffix(1);
    if (text.empty()) throw std::runtime_error("graph6: empty input");
    for (char c : text)
        if (c < 63 || c > 126)
            throw std::runtime_error("graph6: byte " + std::to_string(int(c)) + " outside the graph6 range 63..126");

    size_t pos = 0;
    long n = 0;
    if (text[0] == 126) {
        if (text.size() >= 2 && text[1] == 126) throw std::runtime_error("graph6: 8-byte vertex counts not supported");
        if (text.size() < 4) throw std::runtime_error("graph6: truncated vertex count");
        n = (long(text[1] - 63) << 12) | (long(text[2] - 63) << 6) | long(text[3] - 63);
        pos = 4;
    } else {
        n = text[0] - 63;
        pos = 1;
    }
    if (n > Graph::max_vertices)
        throw std::runtime_error("graph6: " + std::to_string(n) + " vertices exceeds supported maximum " +
                                 std::to_string(Graph::max_vertices));

    const long nbits = n * (n - 1) / 2;
    const size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
    if (text.size() - pos < nbytes) throw std::runtime_error("graph6: truncated edge bits");
    if (text.size() - pos > nbytes) throw std::runtime_error("graph6: trailing garbage after edge bits");

    std::vector<Edge> edges;
    long i = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++i) {
            int byte = text[pos + static_cast<size_t>(i / 6)] - 63;
            if ((byte >> (5 - i % 6)) & 1) edges.emplace_back(u, v);
        }
    }
    // padding bits must be zero
    if (nbits > 0 && nbits % 6 != 0) {
        int last = text[pos + nbytes - 1] - 63;
        int pad = static_cast<int>(6 - nbits % 6);
        if ((last & ((1 << pad) - 1)) != 0) throw std::runtime_error("graph6: nonzero padding bits");
    }
    return Graph::build(static_cast<int>(n), edges);
}

// Splits a multi-record graph6 file into newline-terminated records.
inline std::vector<std::string> split_graph6_records(std::string_view text) {
    std::vector<std::string> records;
    size_t start = 0;
    while (start < text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line != "\r") records.emplace_back(line);
        start = end + 1;
    }
    return records;
}

}  // namespace snarks

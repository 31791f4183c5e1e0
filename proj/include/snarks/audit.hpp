#pragma once

#include "snarks/construction.hpp"

namespace snarks {

// Exhaustive case analysis of how the 2-factors of a dot product meet its
// four-cut T. Every factor must use 0, 2 or 4 cut edges; the audit verifies
// that the 0-edge case never occurs, reconstructs the operand-side cycles in
// the 2- and 4-edge cases, and checks the cycle-length bookkeeping that makes
// every cycle odd. Reattached right-side cycles through f and g must always
// be distinct in the 4-edge case.
struct FourCutAudit {
    int total_factors = 0;
    int meeting_zero = 0;
    int meeting_two_same_pair = 0;   // both active joins land on one removed edge
    int meeting_two_split_pair = 0;  // one lands on f, the other on g
    int meeting_four_one_cycle = 0;  // all four cut edges on a single cycle
    int meeting_four_two_cycles = 0; // cut edges split across two cycles
    bool cut_is_minimal_four = false;
    bool every_cycle_meets_cut_evenly = true;
    bool right_cycles_always_distinct = true;
    bool bookkeeping_ok = true;      // reconstructed lengths match and have the required parities
    bool all_cycles_odd = true;
    std::vector<std::string> violations;

    bool clean() const {
        return meeting_zero == 0 && cut_is_minimal_four && every_cycle_meets_cut_evenly &&
               right_cycles_always_distinct && bookkeeping_ok && all_cycles_odd;
    }
};

namespace detail {

// Paths of the factor restricted to one side of the cut. Endpoints are the
// side's join vertices present in the factor; everything else on the side has
// both factor edges internal, so the restriction is a disjoint union of
// cycles plus paths pairing up the endpoints.
struct SidePath {
    int partner = -1;
    int vertex_count = 0;  // vertices on the path, endpoints included
};

inline std::map<int, SidePath> trace_side_paths(const TwoFactor& f, const FourCut& cut, bool left_side,
                                                const std::vector<int>& endpoints) {
    std::map<int, std::vector<int>> adj;
    for (const Edge& e : f.edge_set()) {
        bool both = cut.on_left(e.u) == left_side && cut.on_left(e.v) == left_side;
        bool is_join = std::find(cut.edges.begin(), cut.edges.end(), e) != cut.edges.end();
        if (!both || is_join) continue;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::map<int, SidePath> out;
    for (int start : endpoints) {
        if (out.count(start)) continue;
        int prev = -1, cur = start, count = 1;
        while (true) {
            int next = -1;
            for (int w : adj[cur])
                if (w != prev) {
                    next = w;
                    break;
                }
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++count;
        }
        out[start] = {cur, count};
        out[cur] = {start, count};
    }
    return out;
}

}  // namespace detail

inline FourCutAudit audit_four_cut(const Graph& g, const FourCut& cut) {
    FourCutAudit audit;
    for (const Edge& e : cut.edges)
        if (!g.has_edge(e)) throw std::invalid_argument("cut edge " + to_string(e) + " is not in the graph");
    EdgeCut checked = make_edge_cut(g, {cut.edges.begin(), cut.edges.end()});
    audit.cut_is_minimal_four = checked.minimal && checked.edges.size() == 4;

    auto note = [&](const std::string& s) {
        if (audit.violations.size() < 32) audit.violations.push_back(s);
    };

    for_each_two_factor(g, {}, [&](const TwoFactor& f) {
        ++audit.total_factors;

        // per-cycle intersection with T must be even
        for (const auto& cyc : f.cycles) {
            int hits = 0;
            for (size_t i = 0; i < cyc.size(); ++i) {
                Edge e(cyc[i], cyc[(i + 1) % cyc.size()]);
                if (std::find(cut.edges.begin(), cut.edges.end(), e) != cut.edges.end()) ++hits;
            }
            if (hits % 2 != 0) {
                audit.every_cycle_meets_cut_evenly = false;
                note("cycle meets the cut an odd number of times");
            }
            if (cyc.size() % 2 != 0) continue;
            audit.all_cycles_odd = false;
        }

        std::vector<int> active;  // indices into cut.edges
        for (int i = 0; i < 4; ++i)
            if (f.contains(cut.edges[static_cast<size_t>(i)])) active.push_back(i);

        auto left_end = [&](int i) {
            const Edge& e = cut.edges[static_cast<size_t>(i)];
            return cut.on_left(e.u) ? e.u : e.v;
        };
        auto right_end = [&](int i) {
            const Edge& e = cut.edges[static_cast<size_t>(i)];
            return cut.on_left(e.u) ? e.v : e.u;
        };

        if (active.empty()) {
            ++audit.meeting_zero;
            note("2-factor avoids the cut entirely");
            return true;
        }

        if (active.size() == 2) {
            int i0 = active[0], i1 = active[1];
            std::vector<int> lends = {left_end(i0), left_end(i1)};
            std::vector<int> rends = {right_end(i0), right_end(i1)};
            auto lpaths = detail::trace_side_paths(f, cut, true, lends);
            auto rpaths = detail::trace_side_paths(f, cut, false, rends);
            if (lpaths[lends[0]].partner != lends[1] || rpaths[rends[0]].partner != rends[1]) {
                audit.bookkeeping_ok = false;
                note("active join endpoints are not joined by factor paths");
                return true;
            }
            int len_l = lpaths[lends[0]].vertex_count;
            int len_r = rpaths[rends[0]].vertex_count;
            int actual = static_cast<int>(f.cycles[static_cast<size_t>(f.cycle_of(cut.edges[static_cast<size_t>(i0)]))].size());
            bool same_pair = (cut.f_side(rends[0]) && cut.f_side(rends[1])) ||
                             (cut.g_side(rends[0]) && cut.g_side(rends[1]));
            if (same_pair) {
                ++audit.meeting_two_same_pair;
                // closing the left path through the deleted vertex gives an odd
                // cycle; closing the right path by the removed edge likewise
                if ((len_l + 1) % 2 == 0 || len_r % 2 == 0 || actual != len_l + len_r || actual % 2 == 0) {
                    audit.bookkeeping_ok = false;
                    note("same-pair case: cycle-length bookkeeping failed");
                }
            } else {
                ++audit.meeting_two_split_pair;
                // left path closes through both deleted vertices (odd), right
                // path closes by a cross edge (even)
                if ((len_l + 2) % 2 == 0 || len_r % 2 != 0 || actual != len_l + len_r || actual % 2 == 0) {
                    audit.bookkeeping_ok = false;
                    note("split-pair case: cycle-length bookkeeping failed");
                }
            }
            return true;
        }

        if (active.size() == 4) {
            auto lpaths = detail::trace_side_paths(f, cut, true, {cut.r, cut.s, cut.t, cut.u});
            auto rpaths = detail::trace_side_paths(f, cut, false, {cut.a, cut.b, cut.c, cut.d});
            if (rpaths[cut.a].partner != cut.b || rpaths[cut.c].partner != cut.d) {
                audit.right_cycles_always_distinct = false;
                note("right-side paths merge the reattached f- and g-cycles");
                return true;
            }
            int len_f = rpaths[cut.a].vertex_count;
            int len_g = rpaths[cut.c].vertex_count;
            if (len_f % 2 == 0 || len_g % 2 == 0) {
                audit.bookkeeping_ok = false;
                note("reattached right-side cycle has even length");
            }
            if (lpaths[cut.r].partner == cut.s) {
                ++audit.meeting_four_two_cycles;
                int len_rs = lpaths[cut.r].vertex_count;
                int len_tu = lpaths[cut.t].vertex_count;
                if (lpaths[cut.t].partner != cut.u || (len_rs + 1) % 2 == 0 || (len_tu + 1) % 2 == 0) {
                    audit.bookkeeping_ok = false;
                    note("two-cycle case: left-side pairing or parity failed");
                }
                // each factor cycle through T couples one left path with the
                // right path its joins land on
                std::set<int> lens;
                for (int i : active) lens.insert(static_cast<int>(
                    f.cycles[static_cast<size_t>(f.cycle_of(cut.edges[static_cast<size_t>(i)]))].size()));
                std::set<int> expect = {len_rs + (cut.f_side(right_end(0)) ? len_f : len_g),
                                        len_tu + (cut.f_side(right_end(2)) ? len_f : len_g)};
                if (lens != expect) {
                    audit.bookkeeping_ok = false;
                    note("two-cycle case: cycle lengths do not match the reconstruction");
                }
            } else {
                ++audit.meeting_four_one_cycle;
                // left pairing is r-t/s-u or r-u/s-t; with both virtual
                // vertices restored those two paths close into one odd cycle
                int len1 = lpaths[cut.r].vertex_count;
                int len2 = lpaths[cut.s].vertex_count;
                int actual = static_cast<int>(
                    f.cycles[static_cast<size_t>(f.cycle_of(cut.edges[static_cast<size_t>(active[0])]))].size());
                if ((len1 + len2 + 2) % 2 == 0 || actual != len1 + len2 + len_f + len_g || actual % 2 == 0) {
                    audit.bookkeeping_ok = false;
                    note("one-cycle case: cycle-length bookkeeping failed");
                }
            }
            return true;
        }

        audit.every_cycle_meets_cut_evenly = false;
        note("2-factor meets the cut in an odd number of edges");
        return true;
    });
    return audit;
}

}  // namespace snarks

#pragma once

#include <cassert>
#include <vector>

#include "mazelab/error.hpp"
#include "mazelab/explore.hpp"
#include "mazelab/graph.hpp"

namespace mazelab {

// Decides whether a closed tour can be drawn without self-intersection.
//
// Every door is a two-lane corridor; its two directed passages use one
// lane each, and the single binary choice per door is which passage
// rides which lane. Around a vertex the rotation order expands into
// 2*deg lane-ends (two per door slot), and each of the deg visits of
// the tour draws a chord from its arrival lane-end to its departure
// lane-end. The tour is drawable exactly when some choice of lanes
// makes every vertex's chords pairwise non-crossing; that is a binary
// CSP with one variable per door, solved by backtracking.
//
// Wall-consistent tours (all Heads / all Tails) always pass: they trace
// the contour of the planar drawing. A tour that mixes faces can be
// genuinely undrawable — turning with the rotation at one junction and
// against it at another twists the lane constraints along the shared
// corridors — so a negative answer is a property of the tour, not a
// solver limitation.
//
// With lanes oriented so that sigma(d) names the lane of the
// owner-to-other passage (owner = smaller endpoint id), the circle
// positions at any endpoint v collapse to a neat rule: through a door
// in rotation slot i of v, the outgoing passage sits at 2i + sigma and
// the incoming one at 2i + 1 - sigma.
struct NoncrossingResult {
    bool ok = false;
    int witness = -1;              // a vertex of the final conflict when !ok
    std::vector<uint8_t> lanes;    // per-door lane choice when ok
};

namespace detail {

// Chords (a1,b1), (a2,b2) on a circle of n distinct points interleave?
inline bool chords_cross(int a1, int b1, int a2, int b2, int n) {
    auto inside = [n](int x, int lo, int hi) {
        int dx = (x - lo + n) % n;
        int dh = (hi - lo + n) % n;
        return 0 < dx && dx < dh;
    };
    return inside(a2, a1, b1) != inside(b2, a1, b1);
}

struct LaneChord {
    int in_slot, in_door;    // arrival: rotation slot at the vertex, door id
    int out_slot, out_door;  // departure
};

}  // namespace detail

inline NoncrossingResult noncrossing_check(const Graph& g, const Trace& t) {
    if (t.mode != TraceMode::Closed ||
        static_cast<int>(t.steps.size()) != 2 * g.door_count())
        throw UsageError("non-crossing check needs a complete closed trace");
    if (!is_planar_embedding(g)) throw UsageError("non-planar input");

    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 3)
            throw UsageError("degree exceeds three at vertex '" + g.names[v] + "'");
    // Door ids in (owner id, rotation slot) order.
    std::vector<std::vector<int>> door_id(n);
    int doors = 0;
    for (int v = 0; v < n; ++v) door_id[v].assign(g.degree(v), -1);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < g.degree(v); ++i) {
            int u = g.rot[v][i];
            if (v < u) {
                door_id[v][i] = doors;
                door_id[u][g.door_index(u, v)] = doors;
                ++doors;
            }
        }

    // One chord per visit: arrival step paired with the cyclically next
    // departure (the root's last arrival wraps to its first departure).
    std::vector<std::vector<detail::LaneChord>> chords(n);
    const int len = static_cast<int>(t.steps.size());
    for (int s = 0; s < len; ++s) {
        int v = t.steps[s].to;
        const auto& next = t.steps[(s + 1) % len];
        assert(next.from == v);
        int in_slot = g.door_index(v, t.steps[s].from);
        int out_slot = g.door_index(v, next.to);
        chords[v].push_back(
            {in_slot, door_id[v][in_slot], out_slot, door_id[v][out_slot]});
    }
    for (int v = 0; v < n; ++v) assert(static_cast<int>(chords[v].size()) == g.degree(v));

    std::vector<int8_t> sigma(doors, -1);

    // All chords at v whose doors are both decided must pairwise clear.
    auto vertex_ok = [&](int v) {
        const auto& cs = chords[v];
        int circle = 2 * g.degree(v);
        int pos[3][2];
        int m = 0;
        for (const auto& c : cs) {
            if (sigma[c.in_door] < 0 || sigma[c.out_door] < 0) continue;
            pos[m][0] = 2 * c.in_slot + 1 - sigma[c.in_door];
            pos[m][1] = 2 * c.out_slot + sigma[c.out_door];
            ++m;
        }
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (detail::chords_cross(pos[i][0], pos[i][1], pos[j][0], pos[j][1], circle))
                    return false;
        return true;
    };

    // Door endpoints, for conflict checks after each assignment.
    std::vector<std::pair<int, int>> ends(doors);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < g.degree(v); ++i)
            if (v < g.rot[v][i]) ends[door_id[v][i]] = {v, g.rot[v][i]};

    NoncrossingResult result;
    auto solve = [&](auto&& self, int d) -> bool {
        if (d == doors) return true;
        for (int bit = 0; bit < 2; ++bit) {
            sigma[d] = static_cast<int8_t>(bit);
            bool clean = true;
            for (int v : {ends[d].first, ends[d].second})
                if (!vertex_ok(v)) {
                    result.witness = v;
                    clean = false;
                    break;
                }
            if (clean && self(self, d + 1)) return true;
        }
        sigma[d] = -1;
        return false;
    };
    result.ok = solve(solve, 0);
    if (result.ok) {
        result.witness = -1;
        result.lanes.assign(sigma.begin(), sigma.end());
    }
    return result;
}

}  // namespace mazelab

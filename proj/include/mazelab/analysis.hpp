#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mazelab/error.hpp"
#include "mazelab/explore.hpp"
#include "mazelab/graph.hpp"
#include "mazelab/grid.hpp"
#include "mazelab/rational.hpp"
#include "mazelab/rng.hpp"

namespace mazelab {

enum class EnumVariant {
    Standard,  // 2^k coin assignments, degree-1 entrance
    Ex1Root,   // 3*2^k: uniform first door at a degree-3 entrance, whose
               // coin then orders its remaining two doors
};

struct EnumerationOptions {
    int max_k = 20;  // refuse enumerations beyond 2^max_k assignments
    int jobs = 1;
};

namespace detail {

// Runs fn(worker, lo, hi) over a partition of [0, total), in parallel
// when jobs > 1. Chunks are contiguous so exact counts are
// scheduling-independent by construction.
template <class Fn>
inline void parallel_ranges(uint64_t total, int jobs, Fn&& fn) {
    uint64_t workers = std::min<uint64_t>(std::max(jobs, 1), std::max<uint64_t>(total, 1));
    if (workers <= 1) {
        fn(0, uint64_t{0}, total);
        return;
    }
    std::vector<std::thread> threads;
    uint64_t chunk = total / workers, rem = total % workers, lo = 0;
    for (uint64_t w = 0; w < workers; ++w) {
        uint64_t hi = lo + chunk + (w < rem ? 1 : 0);
        threads.emplace_back([&fn, w, lo, hi] { fn(static_cast<int>(w), lo, hi); });
        lo = hi;
    }
    for (auto& t : threads) t.join();
}

inline std::vector<char> stop_mask(const Graph& g, const std::vector<int>& targets) {
    if (targets.empty()) throw UsageError("no targets");
    std::vector<char> mask(g.vertex_count(), 0);
    for (int t : targets) {
        if (t < 0 || t >= g.vertex_count()) throw UsageError("target not in graph");
        mask[t] = 1;
    }
    return mask;
}

}  // namespace detail

// --- exhaustive enumeration -------------------------------------------------

struct TargetCount {
    int vertex = -1;
    uint64_t count = 0;
    Rational probability;
};

struct EnumerationReport {
    EnumVariant variant = EnumVariant::Standard;
    int k = 0;
    uint64_t denominator = 0;  // total outcomes: 2^k, or 3*2^k for Ex1Root
    std::vector<TargetCount> targets;
    // Assignment label -> first-arrived target, kept only for small runs.
    std::vector<std::pair<std::string, int>> table;
};

// Runs the closed exploration under every coin assignment and tallies
// which target is reached first. Exact by construction: each outcome
// has weight 1/denominator.
inline EnumerationReport enumerate_first_arrival(const Graph& g, const std::vector<int>& targets,
                                                 EnumVariant variant = EnumVariant::Standard,
                                                 EnumerationOptions opts = {}) {
    std::vector<char> stop = detail::stop_mask(g, targets);
    if (variant == EnumVariant::Ex1Root && g.degree(g.a) != 3)
        throw UsageError("modified-start variant requires a degree-3 entrance");
    if (variant == EnumVariant::Standard && g.degree(g.a) != 1)
        throw UsageError("degree-3 entrance requires the modified-start variant");
    Explorer probe(g);  // also validates degrees
    int k = probe.coin_count();
    if (k > opts.max_k || k > 60)
        throw LimitError("enumeration too large: k=" + std::to_string(k) + " exceeds limit " +
                         std::to_string(std::min(opts.max_k, 60)));
    const uint64_t span = uint64_t{1} << k;
    const uint64_t total = variant == EnumVariant::Ex1Root ? 3 * span : span;

    int jobs = std::max(1, opts.jobs);
    std::vector<std::vector<uint64_t>> counts(
        std::min<uint64_t>(jobs, std::max<uint64_t>(total, 1)),
        std::vector<uint64_t>(g.vertex_count(), 0));
    detail::parallel_ranges(total, jobs, [&](int w, uint64_t lo, uint64_t hi) {
        Explorer ex(g);
        CoinAssignment c;
        c.coins.resize(k);
        for (uint64_t idx = lo; idx < hi; ++idx) {
            uint64_t mask = idx & (span - 1);
            for (int i = 0; i < k; ++i)
                c.coins[i] = (mask >> i) & 1 ? Face::Heads : Face::Tails;
            c.root_choice = variant == EnumVariant::Ex1Root ? static_cast<int>(idx >> k) : -1;
            int winner = ex.run(AssignmentPolicy{&c}, NullSink{}, &stop);
            ++counts[w][winner];
        }
    });

    EnumerationReport report;
    report.variant = variant;
    report.k = k;
    report.denominator = total;
    for (int t : targets) {
        uint64_t n = 0;
        for (const auto& part : counts) n += part[t];
        report.targets.push_back({t, n, make_rational(n, total)});
    }
    if (total <= 64) {
        Explorer ex(g);
        CoinAssignment c;
        c.coins.resize(k);
        for (uint64_t idx = 0; idx < total; ++idx) {
            uint64_t mask = idx & (span - 1);
            for (int i = 0; i < k; ++i)
                c.coins[i] = (mask >> i) & 1 ? Face::Heads : Face::Tails;
            c.root_choice = variant == EnumVariant::Ex1Root ? static_cast<int>(idx >> k) : -1;
            int winner = ex.run(AssignmentPolicy{&c}, NullSink{}, &stop);
            std::string label = c.bits();
            if (variant == EnumVariant::Ex1Root)
                label = "root=" + std::to_string(c.root_choice) + " coins=" + label;
            report.table.emplace_back(label, winner);
        }
    }
    return report;
}

// --- Monte Carlo -------------------------------------------------------------

struct McTarget {
    int vertex = -1;
    uint64_t count = 0;
    double estimate = 0.0;
    double std_error = 0.0;
};

struct McReport {
    uint64_t trials = 0;
    uint64_t seed = 0;
    std::vector<McTarget> targets;
};

namespace detail {

inline McReport mc_report(const Graph&, const std::vector<int>& targets,
                          const std::vector<std::vector<uint64_t>>& counts, uint64_t trials,
                          uint64_t seed) {
    McReport report;
    report.trials = trials;
    report.seed = seed;
    for (int t : targets) {
        uint64_t n = 0;
        for (const auto& part : counts) n += part[t];
        double p = static_cast<double>(n) / static_cast<double>(trials);
        report.targets.push_back(
            {t, n, p, std::sqrt(p * (1.0 - p) / static_cast<double>(trials))});
    }
    return report;
}

}  // namespace detail

// Samples coin assignments lazily: trial i draws its coins from the
// stream derived from (seed, i), so reports are bitwise reproducible
// for a fixed (seed, trials) regardless of the job count.
inline McReport monte_carlo_first_arrival(const Graph& g, const std::vector<int>& targets,
                                          uint64_t trials, uint64_t seed, int jobs = 1) {
    if (trials == 0) throw UsageError("zero trials");
    std::vector<char> stop = detail::stop_mask(g, targets);
    Explorer probe(g);
    std::vector<std::vector<uint64_t>> counts(
        std::min<uint64_t>(std::max(jobs, 1), trials),
        std::vector<uint64_t>(g.vertex_count(), 0));
    detail::parallel_ranges(trials, jobs, [&](int w, uint64_t lo, uint64_t hi) {
        Explorer ex(g);
        for (uint64_t i = lo; i < hi; ++i) {
            SeededPolicy pol{Rng::derive(seed, i)};
            int winner = ex.run(pol, NullSink{}, &stop);
            ++counts[w][winner];
        }
    });
    return detail::mc_report(g, targets, counts, trials, seed);
}

// --- exact random walk --------------------------------------------------------

struct WalkReport {
    std::vector<int> exits;                     // absorbing vertices (B, C, and D when present)
    std::vector<std::vector<Rational>> absorb;  // absorb[v][i]: absorption at exits[i] from v
};

// Absorption probabilities of the uniform random walk: exits absorb,
// every other vertex (the reflecting entrance included) hops through a
// uniformly random door. Solved exactly: for non-absorbing v,
// deg(v)*p(v) - sum of p over neighbors = 0, with exit indicators as
// boundary values, by rational Gaussian elimination.
inline WalkReport random_walk_exit_probabilities(const Graph& g) {
    if (!g.has_exits()) throw UsageError("random walk needs a maze with exits");
    WalkReport report;
    for (int t : {g.b, g.c, g.d})
        if (t >= 0) report.exits.push_back(t);
    const int n = g.vertex_count();
    const int ne = static_cast<int>(report.exits.size());
    std::vector<int> row(n, -1);
    int unknowns = 0;
    for (int v = 0; v < n; ++v)
        if (v != g.b && v != g.c && v != g.d) row[v] = unknowns++;

    // Augmented system [LHS | one RHS column per exit].
    std::vector<std::vector<Rational>> m(unknowns,
                                         std::vector<Rational>(unknowns + ne, Rational(0)));
    for (int v = 0; v < n; ++v) {
        if (row[v] < 0) continue;
        m[row[v]][row[v]] = g.degree(v);
        for (int u : g.rot[v]) {
            if (row[u] >= 0) {
                m[row[v]][row[u]] -= 1;
            } else {
                for (int e = 0; e < ne; ++e)
                    if (report.exits[e] == u) m[row[v]][unknowns + e] += 1;
            }
        }
    }
    for (int col = 0; col < unknowns; ++col) {
        int pivot = -1;
        for (int r = col; r < unknowns; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw Error("singular random-walk system");
        std::swap(m[col], m[pivot]);
        Rational lead = m[col][col];
        for (auto& x : m[col]) x /= lead;
        for (int r = 0; r < unknowns; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int c2 = col; c2 < unknowns + ne; ++c2) m[r][c2] -= f * m[col][c2];
        }
    }

    report.absorb.assign(n, std::vector<Rational>(ne, Rational(0)));
    for (int v = 0; v < n; ++v) {
        for (int e = 0; e < ne; ++e) {
            if (row[v] >= 0)
                report.absorb[v][e] = m[row[v]][unknowns + e];
            else
                report.absorb[v][e] = report.exits[e] == v ? 1 : 0;
        }
    }
    return report;
}

// Seeded simulation counterpart: walks from A until absorption.
inline McReport random_walk_simulate(const Graph& g, uint64_t trials, uint64_t seed,
                                     int jobs = 1) {
    if (trials == 0) throw UsageError("zero trials");
    if (!g.has_exits()) throw UsageError("random walk needs a maze with exits");
    std::vector<int> exits;
    for (int t : {g.b, g.c, g.d})
        if (t >= 0) exits.push_back(t);
    std::vector<char> absorbing(g.vertex_count(), 0);
    for (int t : exits) absorbing[t] = 1;
    std::vector<std::vector<uint64_t>> counts(
        std::min<uint64_t>(std::max(jobs, 1), trials),
        std::vector<uint64_t>(g.vertex_count(), 0));
    detail::parallel_ranges(trials, jobs, [&](int w, uint64_t lo, uint64_t hi) {
        for (uint64_t i = lo; i < hi; ++i) {
            Rng rng = Rng::derive(seed, i);
            int v = g.a;
            while (!absorbing[v]) v = g.rot[v][rng.below(g.degree(v))];
            ++counts[w][v];
        }
    });
    return detail::mc_report(g, exits, counts, trials, seed);
}

// --- door-direction probabilities ---------------------------------------------

// P(the directed door is traversed before its reverse) over all closed
// explorations; the exercise-6 quantity for entrance-only mazes.
inline Rational door_direction_probability(const Graph& g, DirectedDoor door,
                                           EnumerationOptions opts = {}) {
    if (!g.has_edge(door.from, door.to)) throw UsageError("door not in graph");
    if (g.degree(g.a) != 1) throw UsageError("degree-3 entrance requires the modified-start variant");
    Explorer probe(g);
    int k = probe.coin_count();
    if (k > opts.max_k || k > 60)
        throw LimitError("enumeration too large: k=" + std::to_string(k) + " exceeds limit " +
                         std::to_string(std::min(opts.max_k, 60)));
    const uint64_t span = uint64_t{1} << k;

    struct DoorSink {
        int from, to;
        bool forward_first = false;
        bool on_step(int u, int v) {
            if (u == from && v == to) {
                forward_first = true;
                return true;
            }
            if (u == to && v == from) return true;
            return false;
        }
        void on_first_visit(int) {}
        void on_coin(int, Face, int64_t) {}
    };

    int jobs = std::max(1, opts.jobs);
    std::vector<uint64_t> hits(std::min<uint64_t>(jobs, std::max<uint64_t>(span, 1)), 0);
    detail::parallel_ranges(span, jobs, [&](int w, uint64_t lo, uint64_t hi) {
        Explorer ex(g);
        CoinAssignment c;
        c.coins.resize(k);
        for (uint64_t mask = lo; mask < hi; ++mask) {
            for (int i = 0; i < k; ++i)
                c.coins[i] = (mask >> i) & 1 ? Face::Heads : Face::Tails;
            DoorSink sink{door.from, door.to};
            ex.run(AssignmentPolicy{&c}, sink);
            if (sink.forward_first) ++hits[w];
        }
    });
    uint64_t n = 0;
    for (uint64_t h : hits) n += h;
    return make_rational(n, span);
}

// The same probability for every directed door at once, from a single
// sweep over all assignments.
inline std::vector<std::pair<DirectedDoor, Rational>> door_direction_table(
    const Graph& g, EnumerationOptions opts = {}) {
    if (g.degree(g.a) != 1) throw UsageError("degree-3 entrance requires the modified-start variant");
    Explorer probe(g);
    int k = probe.coin_count();
    if (k > opts.max_k || k > 60)
        throw LimitError("enumeration too large: k=" + std::to_string(k) + " exceeds limit " +
                         std::to_string(std::min(opts.max_k, 60)));
    const uint64_t span = uint64_t{1} << k;
    const int n = g.vertex_count();

    // Door ids in (owner, rotation slot) order; owner = smaller vertex id.
    std::vector<std::vector<int>> door_id(n);
    std::vector<DirectedDoor> owner_dart;
    for (int v = 0; v < n; ++v) door_id[v].assign(g.degree(v), -1);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < g.degree(v); ++i) {
            int u = g.rot[v][i];
            if (v < u) {
                door_id[v][i] = static_cast<int>(owner_dart.size());
                door_id[u][g.door_index(u, v)] = door_id[v][i];
                owner_dart.push_back({v, u});
            }
        }
    const int doors = static_cast<int>(owner_dart.size());

    struct OrderSink {
        const Graph* g;
        const std::vector<std::vector<int>>* door_id;
        std::vector<int8_t>* first_from_owner;  // -1 unseen this run
        bool on_step(int u, int v) {
            int id = (*door_id)[u][g->door_index(u, v)];
            if ((*first_from_owner)[id] < 0) (*first_from_owner)[id] = u < v ? 1 : 0;
            return false;
        }
        void on_first_visit(int) {}
        void on_coin(int, Face, int64_t) {}
    };

    int jobs = std::max(1, opts.jobs);
    std::vector<std::vector<uint64_t>> owner_first(
        std::min<uint64_t>(jobs, std::max<uint64_t>(span, 1)),
        std::vector<uint64_t>(doors, 0));
    detail::parallel_ranges(span, jobs, [&](int w, uint64_t lo, uint64_t hi) {
        Explorer ex(g);
        CoinAssignment c;
        c.coins.resize(k);
        std::vector<int8_t> first(doors, -1);
        for (uint64_t mask = lo; mask < hi; ++mask) {
            for (int i = 0; i < k; ++i)
                c.coins[i] = (mask >> i) & 1 ? Face::Heads : Face::Tails;
            std::fill(first.begin(), first.end(), int8_t{-1});
            ex.run(AssignmentPolicy{&c}, OrderSink{&g, &door_id, &first});
            for (int d = 0; d < doors; ++d)
                if (first[d] == 1) ++owner_first[w][d];
        }
    });

    std::vector<std::pair<DirectedDoor, Rational>> table;
    for (int d = 0; d < doors; ++d) {
        uint64_t cnt = 0;
        for (const auto& part : owner_first) cnt += part[d];
        table.emplace_back(owner_dart[d], make_rational(cnt, span));
        table.emplace_back(reverse(owner_dart[d]), make_rational(span - cnt, span));
    }
    return table;
}

// --- paths and comparisons ------------------------------------------------------

// Breadth-first distances from A to each exit present.
inline std::vector<std::pair<int, int>> shortest_path_lengths(const Graph& g) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<int> queue{g.a};
    dist[g.a] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int u : g.rot[v])
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
    }
    std::vector<std::pair<int, int>> out;
    for (int t : {g.b, g.c, g.d})
        if (t >= 0) out.emplace_back(t, dist[t]);
    return out;
}

struct PathComparison {
    std::vector<int> dfs_rooms;
    std::vector<int> wall_rooms;
    bool equal = false;
    int divergence = -1;  // first differing index when not equal
};

struct WallComparisonReport {
    PathComparison right;
    PathComparison left;
};

// Does the handed DFS reach its exit along the same room sequence as
// the same-handed wall follower? (They agree on many mazes but not all.)
inline WallComparisonReport compare_dfs_wallfollower(const Graph& g) {
    WallComparisonReport report;
    for (Handedness hand : {Handedness::Right, Handedness::Left}) {
        PathComparison cmp;
        cmp.dfs_rooms = room_sequence(explore(g, hand, TraceMode::Exit));
        cmp.wall_rooms = room_sequence(wall_follower(g, hand));
        size_t shared = std::min(cmp.dfs_rooms.size(), cmp.wall_rooms.size());
        cmp.equal = cmp.dfs_rooms == cmp.wall_rooms;
        if (!cmp.equal) {
            cmp.divergence = static_cast<int>(shared);
            for (size_t i = 0; i < shared; ++i)
                if (cmp.dfs_rooms[i] != cmp.wall_rooms[i]) {
                    cmp.divergence = static_cast<int>(i);
                    break;
                }
        }
        (hand == Handedness::Right ? report.right : report.left) = cmp;
    }
    return report;
}

inline WallComparisonReport compare_dfs_wallfollower(const GridMaze& m) {
    return compare_dfs_wallfollower(to_room_graph(m));
}

// Exit reached by RDFS and by LDFS (first, second).
inline std::pair<int, int> exit_order_report(const Graph& g) {
    return {trace_exit(explore(g, Handedness::Right, TraceMode::Exit)),
            trace_exit(explore(g, Handedness::Left, TraceMode::Exit))};
}

}  // namespace mazelab

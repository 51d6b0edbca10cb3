#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "mazelab/error.hpp"
#include "mazelab/graph.hpp"
#include "mazelab/grid.hpp"
#include "mazelab/rng.hpp"

namespace mazelab {

enum class GenMode { TreeMaze, GeneralMaze };

// Seeded recipe for a random grid maze. exits counts the openings
// besides the entrance: 2 (B, C), 3 (B, C, D), or 0 for an
// entrance-only maze (door-direction studies). Identical configs give
// byte-identical mazes.
struct GenConfig {
    int rows = 1;
    int cols = 1;
    uint64_t seed = 0;
    GenMode mode = GenMode::TreeMaze;
    int extra_doors = 0;  // GeneralMaze: interior walls to open (at most)
    int exits = 2;
};

namespace detail {

struct BoundarySlotRef {
    bool horizontal;
    int i, j;
    int room;
};

// Boundary slots in the same counterclockwise order the validator uses.
inline std::vector<BoundarySlotRef> boundary_slot_refs(int rows, int cols) {
    std::vector<BoundarySlotRef> out;
    for (int i = 0; i < rows; ++i) out.push_back({false, i, 0, i * cols});
    for (int j = 0; j < cols; ++j) out.push_back({true, rows, j, (rows - 1) * cols + j});
    for (int i = rows - 1; i >= 0; --i) out.push_back({false, i, cols, i * cols + cols - 1});
    for (int j = cols - 1; j >= 0; --j) out.push_back({true, 0, j, j});
    return out;
}

}  // namespace detail

// Randomized depth-first carving of a spanning tree of rooms (capped at
// three doors per room), openings punched into the boundary afterwards
// with labels rotated so they read A, B, C(, D) counterclockwise.
// GeneralMaze mode then opens up to extra_doors interior walls, skipping
// any that would leave a room with no wall.
inline GridMaze generate(const GenConfig& cfg) {
    if (cfg.rows < 1 || cfg.cols < 1) throw UsageError("rows and cols must be positive");
    if (cfg.exits != 0 && cfg.exits != 2 && cfg.exits != 3)
        throw UsageError("exits must be 0, 2 or 3");
    if (cfg.extra_doors < 0) throw UsageError("extra_doors must be nonnegative");
    const int rooms = cfg.rows * cfg.cols;
    const int letters = 1 + cfg.exits;
    auto slots = detail::boundary_slot_refs(cfg.rows, cfg.cols);

    for (uint64_t attempt = 0; attempt < 10000; ++attempt) {
        Rng rng = Rng::derive(cfg.seed, attempt);
        GridMaze m;
        m.rows = cfg.rows;
        m.cols = cfg.cols;
        m.hslot.assign(cfg.rows + 1, std::string(cfg.cols, '-'));
        m.vslot.assign(cfg.rows, std::string(cfg.cols + 1, '|'));
        std::vector<int> deg(rooms, 0);
        std::vector<char> visited(rooms, 0);

        // Spanning-tree carve. A room that already has three doors stops
        // growing; its remaining neighbors must be reached another way,
        // and the rare dead attempt is simply retried.
        std::vector<int> stack{static_cast<int>(rng.below(rooms))};
        visited[stack[0]] = 1;
        int carved = 1;
        while (!stack.empty()) {
            int v = stack.back();
            int vi = v / cfg.cols, vj = v % cfg.cols;
            int cand[4], ncand = 0;
            if (deg[v] < 3) {
                if (vi > 0 && !visited[v - cfg.cols]) cand[ncand++] = v - cfg.cols;
                if (vi + 1 < cfg.rows && !visited[v + cfg.cols]) cand[ncand++] = v + cfg.cols;
                if (vj > 0 && !visited[v - 1]) cand[ncand++] = v - 1;
                if (vj + 1 < cfg.cols && !visited[v + 1]) cand[ncand++] = v + 1;
            }
            if (ncand == 0) {
                stack.pop_back();
                continue;
            }
            int u = cand[rng.below(ncand)];
            int ui = u / cfg.cols, uj = u % cfg.cols;
            if (ui == vi)
                m.vslot[vi][std::max(vj, uj)] = ' ';
            else
                m.hslot[std::max(vi, ui)][vj] = ' ';
            ++deg[v];
            ++deg[u];
            visited[u] = 1;
            ++carved;
            stack.push_back(u);
        }
        if (carved != rooms) continue;

        // Openings: distinct boundary slots, then a random rotation of
        // the labels along the counterclockwise ordering.
        std::vector<int> chosen;
        while (static_cast<int>(chosen.size()) < letters) {
            int pick = static_cast<int>(rng.below(slots.size()));
            if (std::find(chosen.begin(), chosen.end(), pick) == chosen.end())
                chosen.push_back(pick);
        }
        std::sort(chosen.begin(), chosen.end());
        bool fits = true;
        {
            std::vector<int> extra(rooms, 0);
            for (int s : chosen) ++extra[slots[s].room];
            for (int r = 0; r < rooms; ++r)
                if (deg[r] + extra[r] > 3) fits = false;
        }
        if (!fits) continue;
        int shift = static_cast<int>(rng.below(letters));
        for (int t = 0; t < letters; ++t) {
            const auto& s = slots[chosen[(shift + t) % letters]];
            char letter = static_cast<char>('A' + t);
            if (s.horizontal)
                m.hslot[s.i][s.j] = letter;
            else
                m.vslot[s.i][s.j] = letter;
            ++deg[s.room];
        }

        if (cfg.mode == GenMode::GeneralMaze && cfg.extra_doors > 0) {
            struct Wall {
                bool horizontal;
                int i, j, r1, r2;
            };
            std::vector<Wall> walls;
            for (int i = 1; i < cfg.rows; ++i)
                for (int j = 0; j < cfg.cols; ++j)
                    if (m.hslot[i][j] == '-')
                        walls.push_back({true, i, j, (i - 1) * cfg.cols + j, i * cfg.cols + j});
            for (int i = 0; i < cfg.rows; ++i)
                for (int j = 1; j < cfg.cols; ++j)
                    if (m.vslot[i][j] == '|')
                        walls.push_back({false, i, j, i * cfg.cols + j - 1, i * cfg.cols + j});
            for (size_t x = walls.size(); x > 1; --x)
                std::swap(walls[x - 1], walls[rng.below(x)]);
            int opened = 0;
            for (const auto& w : walls) {
                if (opened == cfg.extra_doors) break;
                if (deg[w.r1] >= 3 || deg[w.r2] >= 3) continue;
                if (w.horizontal)
                    m.hslot[w.i][w.j] = ' ';
                else
                    m.vslot[w.i][w.j] = ' ';
                ++deg[w.r1];
                ++deg[w.r2];
                ++opened;
            }
        }

        try {
            validate_grid_maze(m);
        } catch (const Error&) {
            continue;
        }
        return m;
    }
    throw UsageError("no valid maze for rows=" + std::to_string(cfg.rows) +
                     " cols=" + std::to_string(cfg.cols) + " exits=" + std::to_string(cfg.exits));
}

// Seeded recipe for a random graph-form maze: a random tree over
// internal rooms, terminals attached as leaves, optional extra edges
// (kept within the degree bound), and — in hub mode — one vertex blown
// up past degree 4 as ring-transform input. Rotation lists are
// shuffled, so the embeddings vary too.
struct GraphGenConfig {
    int internal = 1;  // room vertices
    uint64_t seed = 0;
    int exits = 2;        // 0, 2 or 3
    int extra_edges = 0;  // cycles to attempt (at most)
    bool general_hub = false;
};

inline Graph generate_graph(const GraphGenConfig& cfg) {
    if (cfg.internal < 1) throw UsageError("need at least one internal vertex");
    if (cfg.exits != 0 && cfg.exits != 2 && cfg.exits != 3)
        throw UsageError("exits must be 0, 2 or 3");

    for (uint64_t attempt = 0; attempt < 10000; ++attempt) {
        Rng rng = Rng::derive(cfg.seed, attempt);
        Graph g;
        auto add_edge = [&g](int u, int v) {
            g.rot[u].push_back(v);
            g.rot[v].push_back(u);
        };
        for (int i = 0; i < cfg.internal; ++i) g.names.push_back("r" + std::to_string(i + 1));
        g.rot.resize(cfg.internal);
        bool dead = false;
        for (int i = 1; i < cfg.internal; ++i) {
            std::vector<int> open;
            for (int j = 0; j < i; ++j)
                if (g.degree(j) < 3) open.push_back(j);
            if (open.empty()) {
                dead = true;
                break;
            }
            add_edge(i, open[rng.below(open.size())]);
        }
        if (dead) continue;

        int hub = -1;
        if (cfg.general_hub) {
            hub = static_cast<int>(rng.below(cfg.internal));
            int want = 4 + static_cast<int>(rng.below(2));
            while (g.degree(hub) < want) {
                int spoke = g.vertex_count();
                g.names.push_back("r" + std::to_string(spoke + 1));
                g.rot.emplace_back();
                add_edge(hub, spoke);
            }
        }

        const char* letters[4] = {"A", "B", "C", "D"};
        const int nletters = 1 + cfg.exits;

        if (cfg.extra_edges > 0) {
            // Every extra edge costs two degree slots the terminals may
            // still need, so only close a cycle while enough slack is left.
            auto slack = [&g, hub] {
                int s = 0;
                for (int j = 0; j < g.vertex_count(); ++j)
                    if (j != hub) s += 3 - g.degree(j);
                return s;
            };
            int added = 0;
            for (int tries = 0; tries < 100 * cfg.extra_edges && added < cfg.extra_edges;
                 ++tries) {
                if (slack() - 2 < nletters) break;
                int u = static_cast<int>(rng.below(g.vertex_count()));
                int v = static_cast<int>(rng.below(g.vertex_count()));
                if (u == v || g.has_edge(u, v)) continue;
                if (u == hub || v == hub) continue;
                if (g.degree(u) >= 3 || g.degree(v) >= 3) continue;
                add_edge(u, v);
                ++added;
            }
        }
        int ids[4] = {-1, -1, -1, -1};
        for (int t = 0; t < nletters && !dead; ++t) {
            std::vector<int> open;
            for (int j = 0; j < g.vertex_count(); ++j)
                if (g.names[j][0] == 'r' && g.degree(j) < 3 && j != hub) open.push_back(j);
            if (open.empty()) {
                dead = true;
                break;
            }
            int host = open[rng.below(open.size())];
            int id = g.vertex_count();
            g.names.push_back(letters[t]);
            g.rot.emplace_back();
            add_edge(host, id);
            ids[t] = id;
        }
        if (dead) continue;
        g.a = ids[0];
        g.b = ids[1];
        g.c = ids[2];
        g.d = ids[3];
        g.general = cfg.general_hub;

        for (int v = 0; v < g.vertex_count(); ++v)
            for (size_t x = g.rot[v].size(); x > 1; --x)
                std::swap(g.rot[v][x - 1], g.rot[v][rng.below(x)]);

        try {
            validate_graph(g);
        } catch (const Error&) {
            continue;
        }
        return g;
    }
    throw UsageError("no valid graph for internal=" + std::to_string(cfg.internal) +
                     " exits=" + std::to_string(cfg.exits));
}

}  // namespace mazelab

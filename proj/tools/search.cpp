// Exhaustive searches for small example mazes used by the test suite.
//
//   ex1              smallest graph with a degree-3 entrance where the
//                    modified-start exploration (uniform first door, coin
//                    per degree-3 vertex) is NOT fair between B and C.
//                    The first hit, in a fixed deterministic scan order,
//                    is committed as fixtures/unequal_exits.gr1.
//
//   wall-divergence  first generator seed whose 3x3 two-extra-door maze
//                    sends the right-hand depth-first walk along a
//                    different room sequence than the right-hand wall
//                    follower. (On tree mazes the two walks provably
//                    coincide, so the scan needs cycles.)
//
// Scan orders are fixed, so reruns reproduce the committed fixtures.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mazelab/mazelab.hpp"

using namespace mazelab;

namespace {

// All graphs on {A, B, C, x1..xt}: deg(A) = 3, deg(B) = deg(C) = 1,
// internal degrees 1..3. Rotation systems vary over the two cyclic
// orders of each degree-3 vertex. Returns true when a counterexample
// was found and printed.
bool search_ex1(int t) {
    const int n = 3 + t;
    const int A = 0, B = 1, C = 2;
    auto name_of = [&](int v) {
        if (v == A) return std::string("A");
        if (v == B) return std::string("B");
        if (v == C) return std::string("C");
        return "x" + std::to_string(v - 2);
    };

    // Edge universe: every unordered pair except B-C (the exits must
    // stay degree-1 leaves, so an exit-exit edge can never be valid).
    std::vector<std::pair<int, int>> universe;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(i == B && j == C)) universe.push_back({i, j});
    const int ne = static_cast<int>(universe.size());

    for (uint64_t subset = 0; subset < (uint64_t{1} << ne); ++subset) {
        std::vector<std::vector<int>> adj(n);
        for (int e = 0; e < ne; ++e)
            if ((subset >> e) & 1) {
                adj[universe[e].first].push_back(universe[e].second);
                adj[universe[e].second].push_back(universe[e].first);
            }
        if (adj[A].size() != 3 || adj[B].size() != 1 || adj[C].size() != 1) continue;
        bool ok = true;
        for (int v = 3; v < n; ++v)
            if (adj[v].empty() || adj[v].size() > 3) ok = false;
        if (!ok) continue;

        std::vector<int> deg3;
        for (int v = 0; v < n; ++v)
            if (adj[v].size() == 3) deg3.push_back(v);

        // One bit per degree-3 vertex: keep or swap the last two
        // neighbors (the two distinct cyclic orders).
        for (uint64_t rmask = 0; rmask < (uint64_t{1} << deg3.size()); ++rmask) {
            Graph g;
            g.general = true;
            for (int v = 0; v < n; ++v) g.names.push_back(name_of(v));
            g.rot = adj;
            for (size_t i = 0; i < deg3.size(); ++i)
                if ((rmask >> i) & 1) {
                    auto& r = g.rot[deg3[i]];
                    std::swap(r[1], r[2]);
                }
            g.a = A;
            g.b = B;
            g.c = C;
            try {
                validate_graph(g);
            } catch (const Error&) {
                continue;
            }
            EnumerationReport rep =
                enumerate_first_arrival(g, {B, C}, EnumVariant::Ex1Root, {20, 1});
            if (rep.targets[0].probability != rep.targets[1].probability) {
                std::cout << serialize_graph(g);
                std::cout << "# P(B) = " << fraction_str(rep.targets[0].probability)
                          << ", P(C) = " << fraction_str(rep.targets[1].probability)
                          << ", outcomes = " << rep.denominator << "\n";
                return true;
            }
        }
    }
    return false;
}

int run_ex1(int max_internal) {
    for (int t = 1; t <= max_internal; ++t) {
        std::cerr << "searching graphs with " << t << " internal vertex(es)...\n";
        if (search_ex1(t)) return 0;
    }
    std::cerr << "no counterexample up to " << max_internal << " internal vertices\n";
    return 1;
}

int run_wall_divergence(uint64_t seed_limit) {
    for (uint64_t seed = 0; seed < seed_limit; ++seed) {
        GridMaze m = generate({3, 3, seed, GenMode::GeneralMaze, 2, 2});
        WallComparisonReport rep = compare_dfs_wallfollower(m);
        if (!rep.right.equal) {
            std::cout << serialize_grid_maze(m);
            std::cout << "# seed = " << seed
                      << ", right-hand walks diverge at index " << rep.right.divergence << "\n";
            return 0;
        }
    }
    std::cerr << "no divergence below seed " << seed_limit << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exhaustive searches for example mazes"};
    app.require_subcommand(1);

    int max_internal = 4;
    uint64_t seed_limit = 10000;
    auto* ex1 = app.add_subcommand("ex1", "unfair degree-3-entrance counterexample");
    ex1->add_option("--max-internal", max_internal, "largest internal vertex count to try");
    auto* wd = app.add_subcommand("wall-divergence", "cyclic maze where DFS leaves the wall");
    wd->add_option("--seed-limit", seed_limit, "scan seeds below this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (*ex1) return run_ex1(max_internal);
        if (*wd) return run_wall_divergence(seed_limit);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

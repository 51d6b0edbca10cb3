// Acceptance suite: one PASS/FAIL line per criterion, exit 0 only if
// all pass. Every input is generated from fixed seeds, so runs are
// deterministic end to end.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "mazelab/mazelab.hpp"

using namespace mazelab;

namespace {

struct Input {
    Graph g;
    bool is_grid = false;
    int k = 0;
};

int coin_count_of(const Graph& g) { return Explorer(g).coin_count(); }

Input make_input(Graph g, bool is_grid) {
    int k = coin_count_of(g);
    return {std::move(g), is_grid, k};
}

// Mixed two-exit population: carved tree mazes, mazes with cycles, and
// tree/cycle graphs in rotation-system form.
std::vector<Input> two_exit_population() {
    std::vector<Input> out;
    auto add_grid = [&out](int rows, int cols, uint64_t seed, GenMode mode, int extra) {
        Input in =
            make_input(to_room_graph(generate({rows, cols, seed, mode, extra, 2})), true);
        if (in.k <= 16) out.push_back(std::move(in));
    };
    const std::pair<int, int> sizes[] = {{2, 2}, {2, 3}, {3, 3}, {3, 4},
                                         {4, 4}, {4, 5}, {5, 5}};
    for (auto [r, c] : sizes)
        for (uint64_t seed = 1; seed <= 9; ++seed) {
            add_grid(r, c, seed, GenMode::TreeMaze, 0);
            add_grid(r, c, seed, GenMode::GeneralMaze, 2);
        }
    for (auto [r, c] : {std::pair{3, 4}, {4, 4}, {4, 5}, {5, 5}})
        for (uint64_t seed = 101; seed <= 106; ++seed)
            add_grid(r, c, seed, GenMode::GeneralMaze, 3);
    for (int internal : {4, 6, 8, 10, 12})
        for (int extra : {0, 1, 2})
            for (uint64_t seed = 1; seed <= 4; ++seed) {
                Input in = make_input(generate_graph({internal, seed, 2, extra, false}), false);
                if (in.k <= 16) out.push_back(std::move(in));
            }
    return out;
}

std::vector<Input> three_exit_population() {
    std::vector<Input> out;
    for (auto [r, c] : {std::pair{2, 2}, {2, 3}, {3, 3}, {3, 4}})
        for (uint64_t seed = 1; seed <= 11; ++seed) {
            Input tree = make_input(
                to_room_graph(generate({r, c, seed, GenMode::TreeMaze, 0, 3})), true);
            if (tree.k <= 14) out.push_back(std::move(tree));
            Input general = make_input(
                to_room_graph(generate({r, c, seed, GenMode::GeneralMaze, 2, 3})), true);
            if (general.k <= 14) out.push_back(std::move(general));
        }
    for (int internal : {3, 5, 7})
        for (uint64_t seed = 1; seed <= 5; ++seed) {
            Input in = make_input(generate_graph({internal, seed, 3, 0, false}), false);
            if (in.k <= 14) out.push_back(std::move(in));
        }
    return out;
}

std::vector<Input> entrance_only_population() {
    std::vector<Input> out;
    for (auto [r, c] : {std::pair{2, 2}, {2, 3}, {3, 3}})
        for (uint64_t seed = 1; seed <= 14; ++seed) {
            Input tree = make_input(
                to_room_graph(generate({r, c, seed, GenMode::TreeMaze, 0, 0})), true);
            if (tree.k <= 12) out.push_back(std::move(tree));
            Input general = make_input(
                to_room_graph(generate({r, c, seed, GenMode::GeneralMaze, 2, 0})), true);
            if (general.k <= 12) out.push_back(std::move(general));
        }
    for (int internal : {3, 5, 8})
        for (uint64_t seed = 1; seed <= 8; ++seed) {
            Input in = make_input(generate_graph({internal, seed, 0, 0, false}), false);
            if (in.k <= 12) out.push_back(std::move(in));
        }
    return out;
}

// Brute-force pivot: the unique tree-degree-3 vertex whose removal
// separates A, B and C.
int pivot_by_deletion(const Graph& g, const DfsTree& t) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v)
        if (t.parent[v] >= 0) {
            adj[v].push_back(t.parent[v]);
            adj[t.parent[v]].push_back(v);
        }
    auto reaches = [&](int from, int to, int skip) {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{from};
        seen[from] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v == to) return true;
            for (int u : adj[v])
                if (u != skip && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        return false;
    };
    int found = -1;
    for (int p = 0; p < n; ++p) {
        if (t.tree_degree(p) != 3 || p == g.a || p == g.b || p == g.c) continue;
        if (!reaches(g.a, g.b, p) && !reaches(g.a, g.c, p) && !reaches(g.b, g.c, p)) {
            if (found >= 0) return -2;  // not unique: report as disagreement
            found = p;
        }
    }
    return found;
}

}  // namespace

int main() {
    bool all_ok = true;
    auto criterion = [&all_ok](int id, const char* name, auto&& fn) {
        std::string note;
        bool ok = false;
        try {
            ok = fn(note);
        } catch (const std::exception& e) {
            ok = false;
            note = std::string("exception: ") + e.what();
        }
        std::printf("%s %2d %s%s%s\n", ok ? "PASS" : "FAIL", id, name,
                    note.empty() ? "" : ": ", note.c_str());
        std::fflush(stdout);
        all_ok = all_ok && ok;
    };

    std::vector<Input> mixed = two_exit_population();
    std::vector<Input> three_exit = three_exit_population();
    std::vector<Input> entrance_only = entrance_only_population();
    Graph corridor = to_room_graph(parse_grid_maze(fixtures::kCorridor1x2));
    Graph c3 = to_room_graph(parse_grid_maze(fixtures::kCycleThreeCoins));
    Graph entrance_cycle = to_room_graph(parse_grid_maze(fixtures::kCycleEntranceOnly));
    Graph t3 = parse_graph(fixtures::kTreeThreeExits);

    // Enumeration outcomes of the mixed population, shared by 1 and 2.
    struct EnumOutcome {
        int k = 0;
        bool half = false;
        bool denom = false;
    };
    std::vector<EnumOutcome> outcomes;

    criterion(1, "exact equal exit probabilities over mixed inputs", [&](std::string& note) {
        bool ok = mixed.size() >= 200;
        int max_k = 0;
        for (const Input& in : mixed) {
            EnumerationReport rep =
                enumerate_first_arrival(in.g, {in.g.b, in.g.c}, EnumVariant::Standard, {16, 1});
            uint64_t halfcount = uint64_t{1} << (in.k - 1);
            EnumOutcome o;
            o.k = in.k;
            o.half = rep.targets[0].count == halfcount && rep.targets[1].count == halfcount &&
                     rep.targets[0].probability == make_rational(1, 2) &&
                     rep.targets[1].probability == make_rational(1, 2);
            o.denom = denominator_divides(rep.targets[0].probability, 2, in.k) &&
                      denominator_divides(rep.targets[1].probability, 2, in.k);
            outcomes.push_back(o);
            ok = ok && o.half;
            max_k = std::max(max_k, in.k);
        }
        note = std::to_string(mixed.size()) + " inputs, max k " + std::to_string(max_k);
        return ok;
    });

    criterion(2, "enumeration denominators divide 2^k", [&](std::string& note) {
        bool ok = !outcomes.empty();
        for (const EnumOutcome& o : outcomes) ok = ok && o.denom;
        EnumerationReport rep = enumerate_first_arrival(c3, {c3.b, c3.c});
        ok = ok && denominator_divides(rep.targets[0].probability, 2, rep.k);
        note = std::to_string(outcomes.size() + 1) + " reports";
        return ok;
    });

    criterion(3, "closed traces use every directed door exactly once", [&](std::string& note) {
        uint64_t sampled = 0;
        bool ok = true;
        for (const Input& in : mixed) {
            int64_t full = 2 * static_cast<int64_t>(in.g.door_count());
            for (uint64_t trial = 0; trial < 24; ++trial) {
                Trace t = detail::explore_with(
                    in.g, SeededPolicy{Rng::derive(trial, sampled)}, TraceMode::Closed);
                ok = ok && static_cast<int64_t>(t.steps.size()) == full;
                ++sampled;
                Trace e = detail::explore_with(
                    in.g, SeededPolicy{Rng::derive(trial, sampled)}, TraceMode::Exit);
                ok = ok && static_cast<int64_t>(e.steps.size()) <= full;
                ++sampled;
            }
        }
        note = std::to_string(sampled) + " policies";
        return ok && sampled >= 10000;
    });

    criterion(4, "pivot coin flip is a tree-preserving exit swapper", [&](std::string& note) {
        uint64_t assignments = 0;
        bool ok = true;
        for (const Input& in : mixed) {
            if (in.k > 10) continue;
            for (uint64_t mask = 0; mask < (uint64_t{1} << in.k); ++mask) {
                CoinAssignment c = CoinAssignment::from_mask(in.g, mask);
                CoinAssignment f = involution_flip(in.g, c);
                Trace t = explore(in.g, c, TraceMode::Closed);
                Trace ft = explore(in.g, f, TraceMode::Closed);
                ok = ok && involution_flip(in.g, f).bits() == c.bits();
                ok = ok && exit_order(in.g, t) != exit_order(in.g, ft);
                ok = ok && dfs_tree(in.g, t) == dfs_tree(in.g, ft);
                ++assignments;
            }
            if (!ok) break;
        }
        note = std::to_string(assignments) + " assignments";
        return ok && assignments > 0;
    });

    criterion(5, "pivot matches the delete-a-vertex oracle", [&](std::string& note) {
        uint64_t trees = 0;
        bool ok = true;
        for (const Input& in : mixed) {
            for (uint64_t trial = 0; trial < 5 && trees < 1200; ++trial) {
                Trace t = detail::explore_with(
                    in.g, SeededPolicy{Rng::derive(0xACCE55, trees)}, TraceMode::Closed);
                DfsTree dt = dfs_tree(in.g, t);
                ok = ok && pivot_vertex(in.g, dt).pivot == pivot_by_deletion(in.g, dt);
                ++trees;
            }
        }
        note = std::to_string(trees) + " trees";
        return ok && trees >= 1000;
    });

    criterion(6, "opposite hands exit at different exits", [&](std::string& note) {
        uint64_t grids = 0;
        bool ok = trace_exit(wall_follower(corridor, Handedness::Right)) == corridor.b &&
                  trace_exit(wall_follower(corridor, Handedness::Left)) == corridor.c;
        auto check = [&](const Input& in) {
            if (!in.is_grid) return;
            int right = trace_exit(wall_follower(in.g, Handedness::Right));
            int left = trace_exit(wall_follower(in.g, Handedness::Left));
            ok = ok && right != left;
            ++grids;
        };
        for (const Input& in : mixed) check(in);
        for (const Input& in : three_exit) check(in);
        note = std::to_string(grids) + " grid mazes";
        return ok && grids > 0;
    });

    criterion(7, "random-walk absorption is exact and simulable", [&](std::string& note) {
        WalkReport w = random_walk_exit_probabilities(corridor);
        bool ok = w.absorb[corridor.a][0] == make_rational(2, 3);
        McReport sim = random_walk_simulate(corridor, 100000, 20260812, 2);
        ok = ok && std::abs(sim.targets[0].estimate - 2.0 / 3.0) <= 4 * sim.targets[0].std_error;
        uint64_t checked = 0;
        for (const std::vector<Input>* pop : {&mixed, &three_exit})
            for (const Input& in : *pop) {
                WalkReport rep = random_walk_exit_probabilities(in.g);
                for (const auto& row : rep.absorb) {
                    Rational sum(0);
                    for (const Rational& p : row) sum += p;
                    ok = ok && sum == Rational(1);
                }
                ++checked;
            }
        note = std::to_string(checked) + " mazes";
        return ok;
    });

    criterion(8, "Monte Carlo matches 1/2 and is thread-count stable", [&](std::string& note) {
        bool ok = true;
        uint64_t inputs = 0;
        auto run = [&](const Graph& g) {
            McReport base = monte_carlo_first_arrival(g, {g.b, g.c}, 100000, 20260819, 1);
            ok = ok && std::abs(base.targets[0].estimate - 0.5) <= 4 * base.targets[0].std_error;
            for (int jobs : {4, 8}) {
                McReport rep = monte_carlo_first_arrival(g, {g.b, g.c}, 100000, 20260819, jobs);
                for (size_t i = 0; i < rep.targets.size(); ++i) {
                    ok = ok && rep.targets[i].count == base.targets[i].count;
                    ok = ok && rep.targets[i].estimate == base.targets[i].estimate;
                    ok = ok && rep.targets[i].std_error == base.targets[i].std_error;
                }
            }
            ++inputs;
        };
        run(c3);
        for (size_t i = 0; i < mixed.size() && i < 20; ++i) run(mixed[i].g);
        note = std::to_string(inputs) + " inputs x 100000 trials x jobs 1/4/8";
        return ok;
    });

    criterion(9, "three-exit probabilities stay within [1/4, 1/2]", [&](std::string& note) {
        EnumerationReport fix = enumerate_first_arrival(t3, {t3.b, t3.c, t3.d});
        bool ok = fix.targets[0].probability == make_rational(1, 4) &&
                  fix.targets[1].probability == make_rational(1, 4) &&
                  fix.targets[2].probability == make_rational(1, 2);
        ok = ok && three_exit.size() >= 100;
        for (const Input& in : three_exit) {
            EnumerationReport rep = enumerate_first_arrival(
                in.g, {in.g.b, in.g.c, in.g.d}, EnumVariant::Standard, {14, 1});
            for (const TargetCount& t : rep.targets)
                ok = ok && t.probability >= make_rational(1, 4) &&
                     t.probability <= make_rational(1, 2);
        }
        note = std::to_string(three_exit.size()) + " three-exit mazes";
        return ok;
    });

    criterion(10, "door directions are 0, 1/2 or 1 without exits", [&](std::string& note) {
        int r2 = entrance_cycle.find_vertex("r2"), r4 = entrance_cycle.find_vertex("r4");
        bool ok = door_direction_probability(entrance_cycle, {r2, r4}) == make_rational(1, 2);
        ok = ok && entrance_only.size() >= 100;
        uint64_t doors = 0;
        for (const Input& in : entrance_only) {
            for (const auto& [door, p] : door_direction_table(in.g, {12, 1})) {
                ok = ok && (p == Rational(0) || p == make_rational(1, 2) || p == Rational(1));
                ++doors;
            }
        }
        note = std::to_string(entrance_only.size()) + " mazes, " + std::to_string(doors) +
               " directed doors";
        return ok;
    });

    criterion(11, "ring transform restores the theorem", [&](std::string& note) {
        uint64_t graphs = 0;
        bool ok = true;
        for (int internal : {3, 4, 5, 6, 7})
            for (uint64_t seed = 1; seed <= 10; ++seed) {
                Graph hub = generate_graph({internal, seed, 2, 0, true});
                Graph ringed = ring_transform(hub);
                validate_graph(ringed);
                if (coin_count_of(ringed) > 16) continue;
                EnumerationReport rep = enumerate_first_arrival(
                    ringed, {ringed.b, ringed.c}, EnumVariant::Standard, {16, 1});
                ok = ok && rep.targets[0].probability == make_rational(1, 2) &&
                     rep.targets[1].probability == make_rational(1, 2);
                ++graphs;
            }
        note = std::to_string(graphs) + " ringed graphs";
        return ok && graphs >= 50;
    });

    criterion(12, "a degree-3 entrance can break the symmetry", [&](std::string& note) {
        Graph g = parse_graph(fixtures::kUnequalExits);
        EnumerationReport rep = enumerate_first_arrival(g, {g.b, g.c}, EnumVariant::Ex1Root);
        note = "P(B) = " + fraction_str(rep.targets[0].probability) +
               ", P(C) = " + fraction_str(rep.targets[1].probability);
        return rep.targets[0].probability != rep.targets[1].probability;
    });

    criterion(13, "handed closed tours are drawable without crossings", [&](std::string& note) {
        uint64_t checked = 0;
        bool ok = true;
        for (const std::vector<Input>* pop : {&mixed, &three_exit, &entrance_only})
            for (const Input& in : *pop) {
                if (!is_planar_embedding(in.g)) continue;
                for (Handedness hand : {Handedness::Right, Handedness::Left}) {
                    Trace t = explore(in.g, hand, TraceMode::Closed);
                    ok = ok && noncrossing_check(in.g, t).ok;
                }
                ++checked;
            }
        note = std::to_string(checked) + " planar mazes x 2 hands";
        return ok && checked > 0;
    });

    std::printf("%s\n", all_ok ? "acceptance: all 13 criteria passed"
                               : "acceptance: FAILURES above");
    return all_ok ? 0 : 1;
}

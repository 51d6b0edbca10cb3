// Command-line front end for the maze exploration toolkit.
//
// Exit codes: 0 success, 1 malformed or invalid input data, 2 usage
// errors (bad flags, impossible requests, exceeded limits).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mazelab/mazelab.hpp"

using nlohmann::ordered_json;

namespace {

using namespace mazelab;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Loaded {
    Graph g;
    bool is_grid = false;
    GridMaze m;
};

Loaded load(const std::string& path) {
    std::string text = read_file(path);
    Loaded out;
    if (text.rfind("MZ1", 0) == 0) {
        out.is_grid = true;
        out.m = parse_grid_maze(text);
        validate_grid_maze(out.m);
        out.g = to_room_graph(out.m);
    } else if (text.rfind("GR1", 0) == 0) {
        out.g = parse_graph(text);
        validate_graph(out.g);
    } else {
        throw ParseError("unknown format (expected MZ1 or GR1 header)");
    }
    return out;
}

std::string openings_string(const Graph& g) {
    std::string s;
    for (int v : {g.a, g.b, g.c, g.d})
        if (v >= 0) s += (s.empty() ? "" : " ") + g.names[v];
    return s;
}

// Policy selection shared by explore/tree/render: explicit coins win,
// then a seed, then constant handedness.
Trace run_trace(const Graph& g, const std::string& hand, const std::string& coins, int root,
                bool have_seed, uint64_t seed, TraceMode mode) {
    if (!coins.empty()) {
        CoinAssignment c = CoinAssignment::from_bits(g, coins);
        c.root_choice = root;
        return explore(g, c, mode);
    }
    if (have_seed) return detail::explore_with(g, SeededPolicy{Rng::derive(seed, 0)}, mode);
    if (hand == "right") return explore(g, Handedness::Right, mode);
    if (hand == "left") return explore(g, Handedness::Left, mode);
    throw UsageError("hand must be right or left");
}

std::vector<int> resolve_targets(const Graph& g, const std::string& spec) {
    std::vector<int> out;
    if (spec.empty()) {
        for (int v : {g.b, g.c, g.d})
            if (v >= 0) out.push_back(v);
        if (out.empty()) throw UsageError("no targets");
        return out;
    }
    std::stringstream ss(spec);
    std::string name;
    while (std::getline(ss, name, ',')) {
        int v = g.find_vertex(name);
        if (v < 0) throw UsageError("target not in graph");
        out.push_back(v);
    }
    return out;
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maze exploration toolkit"};
    app.require_subcommand(1);

    std::string file, hand = "right", coins, targets_spec, overlay, maze_type = "tree";
    int root = -1, jobs = 1, max_k = 20, scale = 12;
    int rows = 1, cols = 1, extra_doors = 0, exits = 2, internal = 1, extra_edges = 0;
    uint64_t seed = 0, mc_trials = 0;
    bool exit_mode = false, ex1 = false, doors = false, exit_orders = false;
    bool compare_wall = false, svg = false, graph_gen = false, hub = false;
    bool have_seed = false, have_mc = false;

    auto* validate = app.add_subcommand("validate", "parse and check a maze file");
    validate->add_option("file", file)->required();

    auto* explore_cmd = app.add_subcommand("explore", "run one exploration and print the trace");
    explore_cmd->add_option("file", file)->required();
    explore_cmd->add_option("--hand", hand, "right or left (default right)");
    explore_cmd->add_option("--coins", coins, "explicit coin bits, one per degree-3 vertex");
    explore_cmd->add_option("--root", root, "first-door index at a degree-3 entrance");
    explore_cmd->add_option("--seed", seed, "draw coins from this seed")
        ->each([&](const std::string&) { have_seed = true; });
    explore_cmd->add_flag("--exit", exit_mode, "stop at the first exit (default: closed walk)");

    auto* stats = app.add_subcommand("stats", "first-arrival statistics over all coin flips");
    stats->add_option("file", file)->required();
    stats->add_option("--mc", mc_trials, "Monte Carlo trials instead of exact enumeration")
        ->each([&](const std::string&) { have_mc = true; });
    stats->add_option("--seed", seed, "Monte Carlo seed");
    stats->add_option("--targets", targets_spec, "comma-separated targets (default: all exits)");
    stats->add_flag("--ex1", ex1, "modified start: uniform first door at a degree-3 entrance");
    stats->add_flag("--doors", doors, "probability each directed door is used before its reverse");
    stats->add_flag("--exit-orders", exit_orders, "exits reached by right/left deterministic runs");
    stats->add_flag("--compare-wallfollower", compare_wall,
                    "compare handed runs with the same-handed wall follower");
    stats->add_option("--jobs", jobs, "worker threads");
    stats->add_option("--max-k", max_k, "refuse enumerations beyond 2^max-k assignments");

    auto* walk = app.add_subcommand("walk", "random-walk exit probabilities (exact)");
    walk->add_option("file", file)->required();
    walk->add_option("--mc", mc_trials, "also simulate this many walks")
        ->each([&](const std::string&) { have_mc = true; });
    walk->add_option("--seed", seed, "simulation seed");
    walk->add_option("--jobs", jobs, "worker threads");

    auto* tree = app.add_subcommand("tree", "depth-first tree and pivot of one exploration");
    tree->add_option("file", file)->required();
    tree->add_option("--hand", hand, "right or left (default right)");
    tree->add_option("--coins", coins, "explicit coin bits");
    tree->add_option("--root", root, "first-door index at a degree-3 entrance");
    tree->add_option("--seed", seed, "draw coins from this seed")
        ->each([&](const std::string&) { have_seed = true; });

    auto* render = app.add_subcommand("render", "draw a grid maze as text or SVG");
    render->add_option("file", file)->required();
    render->add_flag("--svg", svg, "emit SVG instead of text");
    render->add_option("--scale", scale, "SVG pixels per half cell");
    render->add_option("--overlay", overlay,
                       "draw a walk: dfs-right, dfs-left, wall-right or wall-left");

    auto* ring = app.add_subcommand("transform-ring", "expand high-degree vertices into rings");
    ring->add_option("file", file)->required();

    auto* gen = app.add_subcommand("gen", "generate a random maze from a seed");
    gen->add_option("--rows", rows, "grid rows");
    gen->add_option("--cols", cols, "grid cols");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--maze-type", maze_type, "tree or general (extra doors allowed)");
    gen->add_option("--extra-doors", extra_doors, "general mazes: interior walls to open");
    gen->add_option("--exits", exits, "openings besides the entrance: 0, 2 or 3");
    gen->add_flag("--graph", graph_gen, "generate a GR1 graph instead of a grid");
    gen->add_option("--internal", internal, "graph mode: internal vertices");
    gen->add_option("--extra-edges", extra_edges, "graph mode: cycle edges to attempt");
    gen->add_flag("--hub", hub, "graph mode: include a degree-4+ hub (ring-transform input)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate) {
            Loaded in = load(file);
            if (in.is_grid)
                std::cout << "ok: grid " << in.m.rows << "x" << in.m.cols << ", "
                          << in.m.rows * in.m.cols << " rooms, " << in.g.door_count()
                          << " doors, openings " << openings_string(in.g) << "\n";
            else
                std::cout << "ok: graph, " << in.g.vertex_count() << " vertices, "
                          << in.g.door_count() << " doors, openings " << openings_string(in.g)
                          << "\n";
        } else if (*explore_cmd) {
            Loaded in = load(file);
            Trace t = run_trace(in.g, hand, coins, root, have_seed, seed,
                                exit_mode ? TraceMode::Exit : TraceMode::Closed);
            std::cout << serialize_trace(in.g, t);
        } else if (*stats) {
            Loaded in = load(file);
            const Graph& g = in.g;
            if (exit_orders) {
                auto [r, l] = exit_order_report(g);
                ordered_json j;
                j["right"] = g.names[r];
                j["left"] = g.names[l];
                print_json(j);
            } else if (compare_wall) {
                WallComparisonReport rep = compare_dfs_wallfollower(g);
                ordered_json j;
                for (auto side : {std::pair{"right", &rep.right}, std::pair{"left", &rep.left}}) {
                    ordered_json s;
                    ordered_json dfs = ordered_json::array(), wall = ordered_json::array();
                    for (int v : side.second->dfs_rooms) dfs.push_back(g.names[v]);
                    for (int v : side.second->wall_rooms) wall.push_back(g.names[v]);
                    s["dfs"] = dfs;
                    s["wall"] = wall;
                    s["equal"] = side.second->equal;
                    s["divergence"] = side.second->divergence;
                    j[side.first] = s;
                }
                print_json(j);
            } else if (doors) {
                auto table = door_direction_table(g, {max_k, jobs});
                Explorer probe(g);
                ordered_json j;
                j["k"] = probe.coin_count();
                j["denominator"] = std::to_string(uint64_t{1} << probe.coin_count());
                ordered_json arr = ordered_json::array();
                for (const auto& [door, p] : table) {
                    ordered_json row;
                    row["from"] = g.names[door.from];
                    row["to"] = g.names[door.to];
                    row["probability"] = fraction_str(p);
                    arr.push_back(row);
                }
                j["doors"] = arr;
                print_json(j);
            } else if (have_mc) {
                std::vector<int> targets = resolve_targets(g, targets_spec);
                McReport rep = monte_carlo_first_arrival(g, targets, mc_trials, seed, jobs);
                ordered_json j;
                j["trials"] = rep.trials;
                j["seed"] = rep.seed;
                ordered_json counts, estimate, err;
                for (const auto& t : rep.targets) {
                    counts[g.names[t.vertex]] = std::to_string(t.count);
                    estimate[g.names[t.vertex]] = t.estimate;
                    err[g.names[t.vertex]] = t.std_error;
                }
                j["counts"] = counts;
                j["estimate"] = estimate;
                j["stderr"] = err;
                print_json(j);
            } else {
                std::vector<int> targets = resolve_targets(g, targets_spec);
                EnumerationReport rep = enumerate_first_arrival(
                    g, targets, ex1 ? EnumVariant::Ex1Root : EnumVariant::Standard,
                    {max_k, jobs});
                ordered_json j;
                j["variant"] = ex1 ? "modified-start" : "standard";
                j["k"] = rep.k;
                j["denominator"] = std::to_string(rep.denominator);
                ordered_json counts, prob;
                for (const auto& t : rep.targets) {
                    counts[g.names[t.vertex]] = std::to_string(t.count);
                    prob[g.names[t.vertex]] = fraction_str(t.probability);
                }
                j["counts"] = counts;
                j["probability"] = prob;
                print_json(j);
            }
        } else if (*walk) {
            Loaded in = load(file);
            const Graph& g = in.g;
            WalkReport rep = random_walk_exit_probabilities(g);
            ordered_json j;
            j["from"] = g.names[g.a];
            ordered_json exact;
            for (size_t e = 0; e < rep.exits.size(); ++e)
                exact[g.names[rep.exits[e]]] = fraction_str(rep.absorb[g.a][e]);
            j["exact"] = exact;
            if (have_mc) {
                McReport sim = random_walk_simulate(g, mc_trials, seed, jobs);
                ordered_json s;
                s["trials"] = sim.trials;
                s["seed"] = sim.seed;
                ordered_json estimate, err;
                for (const auto& t : sim.targets) {
                    estimate[g.names[t.vertex]] = t.estimate;
                    err[g.names[t.vertex]] = t.std_error;
                }
                s["estimate"] = estimate;
                s["stderr"] = err;
                j["simulated"] = s;
            }
            print_json(j);
        } else if (*tree) {
            Loaded in = load(file);
            Trace t = run_trace(in.g, hand, coins, root, have_seed, seed, TraceMode::Closed);
            DfsTree dt = dfs_tree(in.g, t);
            std::cout << serialize_tree(in.g, dt);
            if (in.g.b >= 0 && in.g.c >= 0) {
                PivotResult pv = pivot_vertex(in.g, dt);
                std::cout << "pivot: " << in.g.names[pv.pivot] << "\n";
            }
        } else if (*render) {
            Loaded in = load(file);
            if (!in.is_grid) throw UsageError("render needs a grid maze (MZ1)");
            std::vector<int> path;
            const std::vector<int>* path_ptr = nullptr;
            if (!overlay.empty()) {
                if (overlay == "dfs-right")
                    path = room_sequence(explore(in.g, Handedness::Right, TraceMode::Exit));
                else if (overlay == "dfs-left")
                    path = room_sequence(explore(in.g, Handedness::Left, TraceMode::Exit));
                else if (overlay == "wall-right")
                    path = room_sequence(wall_follower(in.g, Handedness::Right));
                else if (overlay == "wall-left")
                    path = room_sequence(wall_follower(in.g, Handedness::Left));
                else
                    throw UsageError("overlay must be dfs-right, dfs-left, wall-right or wall-left");
                path_ptr = &path;
            }
            if (svg)
                std::cout << render_svg(in.m, scale, path_ptr);
            else
                std::cout << render_ascii(in.m, path_ptr);
        } else if (*ring) {
            Loaded in = load(file);
            Graph out = ring_transform(in.g);
            std::cout << serialize_graph(out);
        } else if (*gen) {
            if (graph_gen) {
                GraphGenConfig cfg;
                cfg.internal = internal;
                cfg.seed = seed;
                cfg.exits = exits;
                cfg.extra_edges = extra_edges;
                cfg.general_hub = hub;
                std::cout << serialize_graph(generate_graph(cfg));
            } else {
                GenConfig cfg;
                cfg.rows = rows;
                cfg.cols = cols;
                cfg.seed = seed;
                cfg.mode = maze_type == "general" ? GenMode::GeneralMaze : GenMode::TreeMaze;
                if (maze_type != "tree" && maze_type != "general")
                    throw UsageError("maze-type must be tree or general");
                cfg.extra_doors = extra_doors;
                cfg.exits = exits;
                std::cout << serialize_grid_maze(generate(cfg));
            }
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const LimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#pragma once

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "mazelab/mazelab.hpp"

namespace testutil {

inline mazelab::GridMaze grid(const std::string& text) {
    mazelab::GridMaze m = mazelab::parse_grid_maze(text);
    return m;
}

inline mazelab::Graph grid_graph(const std::string& text) {
    return mazelab::to_room_graph(grid(text));
}

inline std::string fixture_path(const std::string& name) {
    return std::string(MAZELAB_FIXTURE_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/mazelab_test_" + name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    REQUIRE(out.good());
    return path;
}

struct CmdResult {
    int code = -1;
    std::string output;  // stdout and stderr merged
};

// Runs the installed CLI with the given argument string.
inline CmdResult run_cli(const std::string& args) {
    std::string cmd = std::string(MAZELAB_CLI_PATH) + " " + args + " 2>&1";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    CmdResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.output.append(buf, n);
    int status = pclose(f);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Message of a library error thrown by fn, or "" if nothing was thrown.
template <class Exception, class Fn>
inline std::string thrown_message(Fn&& fn) {
    try {
        fn();
    } catch (const Exception& e) {
        return e.what();
    }
    return "";
}

}  // namespace testutil

#include "helpers.hpp"

using namespace mazelab;
using testutil::grid;
using testutil::thrown_message;

TEST_CASE("MZ1 parsing and round-trip") {
    GridMaze m = grid(fixtures::kCorridor1x2);
    CHECK(m.rows == 1);
    CHECK(m.cols == 2);
    CHECK(m.hslot[0] == "A-");
    CHECK(m.hslot[1] == "--");
    CHECK(m.vslot[0] == "B C");
    CHECK(m.v_open(0, 1));
    CHECK(!m.h_open(1, 0));
    CHECK(m.room_degree(0, 0) == 3);
    CHECK(m.room_degree(0, 1) == 2);

    for (const char* text : {fixtures::kStar1x1, fixtures::kCorridor1x2,
                             fixtures::kCycleEntranceOnly, fixtures::kCycleThreeCoins})
        CHECK(serialize_grid_maze(grid(text)) == text);
}

TEST_CASE("fixture files match the built-in texts") {
    CHECK(testutil::slurp(testutil::fixture_path("star_1x1.mz1")) == fixtures::kStar1x1);
    CHECK(testutil::slurp(testutil::fixture_path("corridor_1x2.mz1")) == fixtures::kCorridor1x2);
    CHECK(testutil::slurp(testutil::fixture_path("cycle_entrance_only.mz1")) ==
          fixtures::kCycleEntranceOnly);
    CHECK(testutil::slurp(testutil::fixture_path("cycle_three_coins.mz1")) ==
          fixtures::kCycleThreeCoins);
    CHECK(testutil::slurp(testutil::fixture_path("hub_ring.gr1")) == fixtures::kHub4);
    CHECK(testutil::slurp(testutil::fixture_path("tree_three_exits.gr1")) ==
          fixtures::kTreeThreeExits);
    CHECK(testutil::slurp(testutil::fixture_path("unequal_exits.gr1")) ==
          fixtures::kUnequalExits);
}

TEST_CASE("MZ1 grammar errors carry positions") {
    auto parse_err = [](const std::string& text) {
        try {
            parse_grid_maze(text);
        } catch (const ParseError& e) {
            return e;
        }
        FAIL("expected a parse error");
        return ParseError("");
    };

    CHECK(thrown_message<ParseError>([] { parse_grid_maze("MZX 1 1\n"); }) ==
          "expected MZ1 header");
    CHECK(thrown_message<ParseError>([] { parse_grid_maze("MZ1 0 2\n"); }) ==
          "expected MZ1 <rows> <cols> with positive sizes");
    CHECK(thrown_message<ParseError>([] { parse_grid_maze("MZ1 1 1 9\n"); }) ==
          "trailing tokens after MZ1 header");
    CHECK(thrown_message<ParseError>([] { parse_grid_maze("MZ1 1 1\n+A+\nB C\n"); }) ==
          "expected 3 grid lines, got 2");
    CHECK(thrown_message<ParseError>([] { parse_grid_maze(""); }) == "empty input");

    {
        ParseError e = parse_err("MZ1 1 1\n+A+\nB C\n+-+-+\n");
        CHECK(std::string(e.what()).find("grid line has wrong length") == 0);
        CHECK(e.line == 4);
        CHECK(e.col == 6);
    }
    {
        ParseError e = parse_err("MZ1 1 1\n+A+\nB C\n*-+\n");
        CHECK(std::string(e.what()).find("expected '+'") == 0);
        CHECK(e.line == 4);
        CHECK(e.col == 1);
    }
    {
        ParseError e = parse_err("MZ1 1 1\n+A+\nB C\n+x+\n");
        CHECK(std::string(e.what()).find("invalid wall character 'x'") == 0);
        CHECK(e.line == 4);
        CHECK(e.col == 2);
    }
    {
        ParseError e = parse_err("MZ1 1 1\n+A+\nB.C\n+-+\n");
        CHECK(std::string(e.what()).find("room cell must be blank") == 0);
        CHECK(e.line == 3);
        CHECK(e.col == 2);
    }
    {
        ParseError e = parse_err("MZ1 1 1\n+A+\nB C\n+-+\nleftover\n");
        CHECK(std::string(e.what()).find("unexpected line after grid") == 0);
        CHECK(e.line == 5);
    }
    // Trailing blank lines are tolerated.
    CHECK_NOTHROW(parse_grid_maze(std::string(fixtures::kStar1x1) + "\n  \n"));
}

TEST_CASE("grid validation rules") {
    auto tamper = [](const char* base, auto&& poke) {
        GridMaze m = grid(base);
        poke(m);
        return thrown_message<ParseError>([&] { validate_grid_maze(m); });
    };

    CHECK(tamper(fixtures::kCycleEntranceOnly,
                 [](GridMaze& m) { m.vslot[0][1] = 'B'; }) == "opening B inside maze at (2,3)");
    CHECK(tamper(fixtures::kCycleEntranceOnly,
                 [](GridMaze& m) { m.hslot[1][0] = 'C'; }) == "opening C inside maze at (3,2)");
    CHECK(tamper(fixtures::kCycleEntranceOnly, [](GridMaze& m) { m.hslot[2][1] = ' '; }) ==
          "unnamed gap in boundary");
    CHECK(tamper(fixtures::kCycleEntranceOnly, [](GridMaze& m) { m.vslot[1][0] = ' '; }) ==
          "unnamed gap in boundary");
    CHECK(tamper(fixtures::kCycleEntranceOnly, [](GridMaze& m) { m.hslot[2][1] = 'A'; }) ==
          "duplicate opening A");
    CHECK(tamper(fixtures::kCycleEntranceOnly, [](GridMaze& m) { m.hslot[0][0] = '-'; }) ==
          "missing opening A");
    CHECK(tamper(fixtures::kCycleEntranceOnly, [](GridMaze& m) { m.hslot[2][1] = 'B'; }) ==
          "missing opening C");
    CHECK(tamper(fixtures::kCycleEntranceOnly, [](GridMaze& m) { m.hslot[2][1] = 'D'; }) ==
          "missing opening B");
    CHECK(tamper(fixtures::kCycleThreeCoins, [](GridMaze& m) {
              std::swap(m.hslot[2][0], m.vslot[1][2]);  // swap B and C
          }) == "openings not counterclockwise A,B,C");
    CHECK(tamper(fixtures::kCorridor1x2, [](GridMaze& m) { m.vslot[0][1] = '|'; }) ==
          "disconnected maze");

    // An interior room with all four sides open has no wall to follow.
    GridMaze m;
    m.rows = m.cols = 3;
    m.hslot.assign(4, std::string(3, '-'));
    m.vslot.assign(3, std::string(4, '|'));
    m.hslot[0][0] = 'A';
    m.hslot[1][1] = m.hslot[2][1] = ' ';
    m.vslot[1][1] = m.vslot[1][2] = ' ';
    CHECK(thrown_message<ParseError>([&] { validate_grid_maze(m); }) ==
          "room with no wall at (4,4)");
}

TEST_CASE("room graph structure") {
    Graph g = testutil::grid_graph(fixtures::kCorridor1x2);
    REQUIRE(g.vertex_count() == 5);
    CHECK(g.names == std::vector<std::string>{"r1", "r2", "A", "B", "C"});
    CHECK(g.a == 2);
    CHECK(g.b == 3);
    CHECK(g.c == 4);
    CHECK(g.d == -1);
    // Open sides counterclockwise N, W, S, E.
    CHECK(g.rot[0] == std::vector<int>{2, 3, 1});  // r1: A, B, r2
    CHECK(g.rot[1] == std::vector<int>{0, 4});     // r2: r1, C
    CHECK(g.rot[2] == std::vector<int>{0});
    CHECK(g.door_count() == 4);

    Graph c3 = testutil::grid_graph(fixtures::kCycleThreeCoins);
    CHECK(c3.vertex_count() == 7);
    CHECK(c3.coin_vertices() == std::vector<int>{0, 2, 3});  // r1, r3, r4
    CHECK(c3.door_count() == 7);
    CHECK(c3.rot[0] == std::vector<int>{4, 2, 1});  // r1: A, r3, r2

    Graph star = testutil::grid_graph(fixtures::kStar1x1);
    CHECK(star.names == std::vector<std::string>{"r1", "A", "B", "C"});
    CHECK(star.rot[0] == std::vector<int>{1, 2, 3});
}

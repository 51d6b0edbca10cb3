#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "mazelab/error.hpp"
#include "mazelab/graph.hpp"

namespace mazelab {

// A rectangular maze of rows x cols square rooms. Walls live in the
// slots between rooms: hslot[i][j] sits above room (i,j) for i < rows
// (hslot[rows] is the bottom edge), vslot[i][j] sits left of room (i,j)
// for j < cols (vslot[i][cols] is the right edge). A slot holds a wall
// ('-' or '|'), an open passage (' '), or a boundary opening letter.
struct GridMaze {
    int rows = 0;
    int cols = 0;
    std::vector<std::string> hslot;  // rows+1 strings of length cols
    std::vector<std::string> vslot;  // rows strings of length cols+1

    bool h_open(int i, int j) const { return hslot[i][j] != '-'; }
    bool v_open(int i, int j) const { return vslot[i][j] != '|'; }

    int room_id(int i, int j) const { return i * cols + j; }

    // Door count of room (i,j): open sides, boundary openings included.
    int room_degree(int i, int j) const {
        return (h_open(i, j) ? 1 : 0) + (v_open(i, j) ? 1 : 0) +
               (h_open(i + 1, j) ? 1 : 0) + (v_open(i, j + 1) ? 1 : 0);
    }
};

inline bool is_opening_letter(char ch) { return ch == 'A' || ch == 'B' || ch == 'C' || ch == 'D'; }

namespace detail {

// Boundary slots in counterclockwise order (the orientation induced by
// the N, W, S, E rotation at each room): down the left edge, right
// along the bottom, up the right edge, left along the top.
inline std::vector<char> boundary_ccw(const GridMaze& m) {
    std::vector<char> out;
    for (int i = 0; i < m.rows; ++i) out.push_back(m.vslot[i][0]);
    for (int j = 0; j < m.cols; ++j) out.push_back(m.hslot[m.rows][j]);
    for (int i = m.rows - 1; i >= 0; --i) out.push_back(m.vslot[i][m.cols]);
    for (int j = m.cols - 1; j >= 0; --j) out.push_back(m.hslot[0][j]);
    return out;
}

}  // namespace detail

// Structural checks shared by parsed and generated mazes. Grammar-level
// issues (shape, characters) are the parser's job.
inline void validate_grid_maze(const GridMaze& m) {
    if (m.rows < 1 || m.cols < 1) throw ParseError("maze must have at least one room");

    // Openings: letters may only appear on the outer boundary, at most
    // once each, as one of the sets {A}, {A,B,C}, {A,B,C,D}.
    for (int i = 0; i <= m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (is_opening_letter(m.hslot[i][j]) && i != 0 && i != m.rows)
                throw ParseError(std::string("opening ") + m.hslot[i][j] + " inside maze",
                                 2 * i + 1, 2 * j + 2);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j <= m.cols; ++j)
            if (is_opening_letter(m.vslot[i][j]) && j != 0 && j != m.cols)
                throw ParseError(std::string("opening ") + m.vslot[i][j] + " inside maze",
                                 2 * i + 2, 2 * j + 1);
    // Boundary slots are walls or named openings, never bare gaps.
    for (int j = 0; j < m.cols; ++j)
        if (m.hslot[0][j] == ' ' || m.hslot[m.rows][j] == ' ')
            throw ParseError("unnamed gap in boundary");
    for (int i = 0; i < m.rows; ++i)
        if (m.vslot[i][0] == ' ' || m.vslot[i][m.cols] == ' ')
            throw ParseError("unnamed gap in boundary");

    int count[4] = {0, 0, 0, 0};
    for (char ch : detail::boundary_ccw(m))
        if (is_opening_letter(ch)) ++count[ch - 'A'];
    for (int k = 0; k < 4; ++k)
        if (count[k] > 1) throw ParseError(std::string("duplicate opening ") + char('A' + k));
    if (count[0] == 0) throw ParseError("missing opening A");
    if (count[1] != count[2]) throw ParseError(count[1] ? "missing opening C" : "missing opening B");
    if (count[3] && !count[1]) throw ParseError("missing opening B");

    // The openings must read A, B, C(, D) going counterclockwise.
    std::vector<char> order;
    for (char ch : detail::boundary_ccw(m))
        if (is_opening_letter(ch)) order.push_back(ch);
    auto at_a = std::find(order.begin(), order.end(), 'A');
    std::rotate(order.begin(), at_a, order.end());
    for (int k = 0; k < static_cast<int>(order.size()); ++k)
        if (order[k] != 'A' + k) throw ParseError("openings not counterclockwise A,B,C");

    // Max room degree 3, i.e. every room keeps at least one wall.
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.room_degree(i, j) == 4)
                throw ParseError("room with no wall", 2 * i + 2, 2 * j + 2);

    // Every room reachable through interior passages.
    std::vector<char> seen(m.rows * m.cols, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int r = stack.back();
        stack.pop_back();
        int i = r / m.cols, j = r % m.cols;
        auto visit = [&](int ni, int nj) {
            int n = m.room_id(ni, nj);
            if (!seen[n]) {
                seen[n] = 1;
                stack.push_back(n);
            }
        };
        if (i > 0 && m.hslot[i][j] == ' ') visit(i - 1, j);
        if (i + 1 < m.rows && m.hslot[i + 1][j] == ' ') visit(i + 1, j);
        if (j > 0 && m.vslot[i][j] == ' ') visit(i, j - 1);
        if (j + 1 < m.cols && m.vslot[i][j + 1] == ' ') visit(i, j + 1);
    }
    if (!std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; }))
        throw ParseError("disconnected maze");
}

// MZ1 text format: a header line "MZ1 <rows> <cols>" followed by the
// character picture, 2*rows+1 lines of 2*cols+1 characters. Corners are
// '+', horizontal slots one of "- ABCD", vertical slots one of "| ABCD",
// room cells blank.
inline GridMaze parse_grid_maze(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    GridMaze m;
    {
        std::istringstream hdr(line);
        std::string magic;
        hdr >> magic;
        if (magic != "MZ1") throw ParseError("expected MZ1 header");
        if (!(hdr >> m.rows >> m.cols) || m.rows < 1 || m.cols < 1)
            throw ParseError("expected MZ1 <rows> <cols> with positive sizes");
        std::string extra;
        if (hdr >> extra) throw ParseError("trailing tokens after MZ1 header");
    }

    std::vector<std::string> grid;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (static_cast<int>(grid.size()) == 2 * m.rows + 1) {
            if (line.find_first_not_of(" \t") != std::string::npos)
                throw ParseError("unexpected line after grid",
                                 static_cast<int>(grid.size()) + 2, 1);
            continue;
        }
        grid.push_back(line);
    }
    if (static_cast<int>(grid.size()) != 2 * m.rows + 1)
        throw ParseError("expected " + std::to_string(2 * m.rows + 1) + " grid lines, got " +
                         std::to_string(grid.size()));
    for (int r = 0; r < static_cast<int>(grid.size()); ++r)
        if (static_cast<int>(grid[r].size()) != 2 * m.cols + 1)
            throw ParseError("grid line has wrong length", r + 2,
                             static_cast<int>(grid[r].size()) + 1);

    m.hslot.assign(m.rows + 1, std::string(m.cols, '-'));
    m.vslot.assign(m.rows, std::string(m.cols + 1, '|'));
    for (int r = 0; r < 2 * m.rows + 1; ++r) {
        for (int c = 0; c < 2 * m.cols + 1; ++c) {
            char ch = grid[r][c];
            if (r % 2 == 0 && c % 2 == 0) {
                if (ch != '+') throw ParseError("expected '+'", r + 2, c + 1);
            } else if (r % 2 == 0) {
                if (ch != '-' && ch != ' ' && !is_opening_letter(ch))
                    throw ParseError(std::string("invalid wall character '") + ch + "'", r + 2,
                                     c + 1);
                m.hslot[r / 2][c / 2] = ch;
            } else if (c % 2 == 0) {
                if (ch != '|' && ch != ' ' && !is_opening_letter(ch))
                    throw ParseError(std::string("invalid wall character '") + ch + "'", r + 2,
                                     c + 1);
                m.vslot[r / 2][c / 2] = ch;
            } else {
                if (ch != ' ') throw ParseError("room cell must be blank", r + 2, c + 1);
            }
        }
    }
    validate_grid_maze(m);
    return m;
}

inline std::string serialize_grid_maze(const GridMaze& m) {
    std::string out = "MZ1 " + std::to_string(m.rows) + " " + std::to_string(m.cols) + "\n";
    for (int r = 0; r < 2 * m.rows + 1; ++r) {
        std::string line;
        for (int c = 0; c < 2 * m.cols + 1; ++c) {
            if (r % 2 == 0 && c % 2 == 0)
                line += '+';
            else if (r % 2 == 0)
                line += m.hslot[r / 2][c / 2];
            else if (c % 2 == 0)
                line += m.vslot[r / 2][c / 2];
            else
                line += ' ';
        }
        out += line + "\n";
    }
    return out;
}

// Room-graph view of the maze: rooms come first in row-major order
// (named r1, r2, ...), then one vertex per opening letter. Each room's
// rotation lists its open sides counterclockwise as N, W, S, E.
inline Graph to_room_graph(const GridMaze& m) {
    Graph g;
    for (int r = 0; r < m.rows * m.cols; ++r) g.names.push_back("r" + std::to_string(r + 1));
    int letter_id[4] = {-1, -1, -1, -1};
    auto boundary = detail::boundary_ccw(m);
    for (char k : {'A', 'B', 'C', 'D'})
        if (std::find(boundary.begin(), boundary.end(), k) != boundary.end()) {
            letter_id[k - 'A'] = g.vertex_count();
            g.names.push_back(std::string(1, k));
        }
    g.a = letter_id[0];
    g.b = letter_id[1];
    g.c = letter_id[2];
    g.d = letter_id[3];

    g.rot.resize(g.vertex_count());
    auto side = [&](char slot, int ni, int nj, bool in_range) -> int {
        if (is_opening_letter(slot)) return letter_id[slot - 'A'];
        if (slot == ' ' && in_range) return m.room_id(ni, nj);
        return -1;
    };
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            int room = m.room_id(i, j);
            int nbrs[4] = {
                side(m.hslot[i][j], i - 1, j, i > 0),               // N
                side(m.vslot[i][j], i, j - 1, j > 0),               // W
                side(m.hslot[i + 1][j], i + 1, j, i + 1 < m.rows),  // S
                side(m.vslot[i][j + 1], i, j + 1, j + 1 < m.cols),  // E
            };
            for (int u : nbrs)
                if (u >= 0) {
                    g.rot[room].push_back(u);
                    if (u >= m.rows * m.cols) g.rot[u].push_back(room);  // opening vertex
                }
        }
    validate_graph(g);
    return g;
}

}  // namespace mazelab

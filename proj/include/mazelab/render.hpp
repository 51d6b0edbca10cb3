#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "mazelab/error.hpp"
#include "mazelab/grid.hpp"

namespace mazelab {

namespace detail {

// Character-grid coordinates of a room-graph vertex: rooms sit at their
// cell center, openings at their boundary slot.
inline std::pair<int, int> vertex_cell(const GridMaze& m, int v) {
    const int rooms = m.rows * m.cols;
    if (v >= 0 && v < rooms) return {2 * (v / m.cols) + 1, 2 * (v % m.cols) + 1};
    // Openings are appended to the room graph in A, B, C, D order; map
    // the id back to its letter, then find the letter's slot.
    std::vector<std::pair<char, std::pair<int, int>>> found;
    for (int i = 0; i <= m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (is_opening_letter(m.hslot[i][j]))
                found.push_back({m.hslot[i][j], {2 * i, 2 * j + 1}});
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j <= m.cols; ++j)
            if (is_opening_letter(m.vslot[i][j]))
                found.push_back({m.vslot[i][j], {2 * i + 1, 2 * j}});
    std::sort(found.begin(), found.end());
    int index = v - rooms;
    if (index < 0 || index >= static_cast<int>(found.size()))
        throw UsageError("overlay does not fit maze");
    return found[index].second;
}

}  // namespace detail

// The maze as text: exactly the body of its serialized form (no header
// line). With rooms given, visited room cells are marked '*'.
inline std::string render_ascii(const GridMaze& m, const std::vector<int>* rooms = nullptr) {
    std::string full = serialize_grid_maze(m);
    std::string body = full.substr(full.find('\n') + 1);
    if (rooms) {
        const int width = 2 * m.cols + 2;  // row of chars plus '\n'
        for (int v : *rooms) {
            if (v < 0 || v >= m.rows * m.cols) continue;  // openings show as letters already
            auto [r, c] = detail::vertex_cell(m, v);
            body[r * width + c] = '*';
        }
    }
    return body;
}

// The maze as a standalone SVG. scale is the pixel size of half a cell,
// so every coordinate is an integer. An optional path of room-graph
// vertex ids is drawn as one path element per corridor segment.
inline std::string render_svg(const GridMaze& m, int scale = 12,
                              const std::vector<int>* path = nullptr) {
    if (scale < 1) throw UsageError("scale must be positive");
    const int su = scale;
    const int w = 2 * m.cols * su, h = 2 * m.rows * su;
    const int wall = su / 6 > 1 ? su / 6 : 1;
    std::string s;
    auto num = [](int x) { return std::to_string(x); };
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" +
         num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
    s += "<rect width=\"" + num(w) + "\" height=\"" + num(h) + "\" fill=\"#ffffff\"/>\n";
    s += "<g stroke=\"#222222\" stroke-width=\"" + num(wall) + "\" stroke-linecap=\"square\">\n";
    for (int i = 0; i <= m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.hslot[i][j] == '-')
                s += "<line x1=\"" + num(2 * j * su) + "\" y1=\"" + num(2 * i * su) +
                     "\" x2=\"" + num((2 * j + 2) * su) + "\" y2=\"" + num(2 * i * su) +
                     "\"/>\n";
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j <= m.cols; ++j)
            if (m.vslot[i][j] == '|')
                s += "<line x1=\"" + num(2 * j * su) + "\" y1=\"" + num(2 * i * su) +
                     "\" x2=\"" + num(2 * j * su) + "\" y2=\"" + num((2 * i + 2) * su) +
                     "\"/>\n";
    s += "</g>\n";
    auto text_at = [&](int r, int c, char letter) {
        s += "<text x=\"" + num(c * su) + "\" y=\"" + num(r * su) + "\" font-size=\"" +
             num(su) +
             "\" text-anchor=\"middle\" dominant-baseline=\"central\" "
             "font-family=\"monospace\">" +
             letter + "</text>\n";
    };
    for (int i = 0; i <= m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (is_opening_letter(m.hslot[i][j])) text_at(2 * i, 2 * j + 1, m.hslot[i][j]);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j <= m.cols; ++j)
            if (is_opening_letter(m.vslot[i][j])) text_at(2 * i + 1, 2 * j, m.vslot[i][j]);
    if (path && path->size() >= 2) {
        Graph g = to_room_graph(m);
        s += "<g stroke=\"#cc2222\" stroke-width=\"" + num(wall) +
             "\" fill=\"none\" stroke-linecap=\"round\">\n";
        for (size_t x = 0; x + 1 < path->size(); ++x) {
            int u = (*path)[x], v = (*path)[x + 1];
            if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() ||
                !g.has_edge(u, v))
                throw UsageError("overlay does not fit maze");
            auto [r1, c1] = detail::vertex_cell(m, u);
            auto [r2, c2] = detail::vertex_cell(m, v);
            s += "<path d=\"M " + num(c1 * su) + " " + num(r1 * su) + " L " + num(c2 * su) +
                 " " + num(r2 * su) + "\"/>\n";
        }
        s += "</g>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace mazelab

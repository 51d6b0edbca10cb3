#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mazelab/error.hpp"

namespace mazelab {

// A maze in graph form: rooms plus the boundary openings as vertices.
// Each vertex stores its incident doors as a counterclockwise rotation
// list of neighbor ids. The openings are degree-1 terminal vertices
// named A (entrance), B, C (exits) and optionally D (third exit).
// A graph parsed or built in "general" mode has no degree bound and is
// only usable as ring_transform input.
struct Graph {
    std::vector<std::string> names;
    std::vector<std::vector<int>> rot;  // ccw rotation list per vertex
    int a = -1, b = -1, c = -1, d = -1;
    bool general = false;

    int vertex_count() const { return static_cast<int>(names.size()); }
    int degree(int v) const { return static_cast<int>(rot[v].size()); }

    int door_count() const {
        int darts = 0;
        for (const auto& r : rot) darts += static_cast<int>(r.size());
        return darts / 2;
    }

    // Position of the door to `u` in v's rotation list, -1 if absent.
    int door_index(int v, int u) const {
        for (int i = 0; i < degree(v); ++i)
            if (rot[v][i] == u) return i;
        return -1;
    }

    bool has_edge(int v, int u) const { return door_index(v, u) >= 0; }

    int find_vertex(const std::string& name) const {
        for (int i = 0; i < vertex_count(); ++i)
            if (names[i] == name) return i;
        return -1;
    }

    bool has_exits() const { return b >= 0 && c >= 0; }

    // Degree-3 vertices in id order; this is the canonical coin order
    // (row-major for grid-derived graphs, declaration order for GR1).
    std::vector<int> coin_vertices() const {
        std::vector<int> out;
        for (int v = 0; v < vertex_count(); ++v)
            if (degree(v) == 3) out.push_back(v);
        return out;
    }
};

struct DirectedDoor {
    int from = -1;
    int to = -1;

    friend bool operator==(const DirectedDoor&, const DirectedDoor&) = default;
};

inline DirectedDoor reverse(DirectedDoor d) { return {d.to, d.from}; }

namespace detail {

inline bool connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.rot[v])
            if (!seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
}

}  // namespace detail

// Structural validation shared by parsed and generated graphs.
//
// Room graphs: connected, max degree 3, A a leaf, exits B/C (and D) leaves,
// either both B and C present or neither (entrance-only graphs are allowed
// for door-order analysis). General graphs keep only the structural rules
// (symmetry, no self loops or double doors, an entrance, connectivity):
// they host degree-3 entrances for the modified-start enumeration variant,
// ring-transform inputs past degree 3, and other deliberately irregular
// rotation systems.
inline void validate_graph(const Graph& g) {
    if (g.vertex_count() == 0) throw ParseError("empty graph");
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int i = 0; i < g.degree(v); ++i) {
            int u = g.rot[v][i];
            if (u == v) throw ParseError("self adjacency at vertex '" + g.names[v] + "'");
            for (int j = i + 1; j < g.degree(v); ++j)
                if (g.rot[v][j] == u)
                    throw ParseError("duplicate door '" + g.names[v] + "'-'" + g.names[u] + "'");
            if (!g.has_edge(u, v))
                throw ParseError("asymmetric adjacency: '" + g.names[v] + "' lists '" +
                                 g.names[u] + "' but not vice versa");
        }
    }
    if (g.a < 0) throw ParseError("missing opening A");
    if (!g.general) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) > 3)
                throw ParseError("degree exceeds three at vertex '" + g.names[v] + "'");
        if (g.b < 0 && g.c >= 0) throw ParseError("missing opening B");
        if (g.b >= 0 && g.c < 0) throw ParseError("missing opening C");
        if (g.d >= 0 && g.b < 0) throw ParseError("missing opening B");
        if (g.degree(g.a) != 1) throw ParseError("opening A must have degree 1");
        for (int t : {g.b, g.c, g.d})
            if (t >= 0 && g.degree(t) != 1)
                throw ParseError("opening " + g.names[t] + " must have degree 1");
    }
    if (!detail::connected(g)) throw ParseError("disconnected graph");
    if (!g.general && g.has_exits()) {
        // Three odd-degree leaves force a fourth odd-degree vertex, and
        // with max degree 3 that vertex has degree exactly 3.
        bool any3 = false;
        for (int v = 0; v < g.vertex_count(); ++v) any3 = any3 || g.degree(v) == 3;
        if (!any3) throw ParseError("no degree-3 vertex");
    }
}

// GR1 text format.
//
//   GR1 [general]
//   name: n1 n2 ...
//
// One line per vertex listing its neighbors in counterclockwise rotation
// order. The names A, B, C, D are reserved for the openings.
inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Graph g;
    {
        std::istringstream hdr(line);
        std::string magic, flag;
        hdr >> magic;
        if (magic != "GR1") throw ParseError("expected GR1 header");
        if (hdr >> flag) {
            if (flag != "general") throw ParseError("unknown GR1 flag '" + flag + "'");
            g.general = true;
        }
    }

    std::vector<std::vector<std::string>> neighbor_names;
    std::map<std::string, int> index;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("missing ':' in vertex line", lineno, 0);
        std::istringstream name_in(line.substr(0, colon));
        std::string name, extra;
        name_in >> name;
        if (name.empty() || (name_in >> extra))
            throw ParseError("malformed vertex name", lineno, 0);
        if (index.count(name))
            throw ParseError("duplicate declaration of vertex '" + name + "'", lineno, 0);
        index[name] = static_cast<int>(g.names.size());
        g.names.push_back(name);
        neighbor_names.emplace_back();
        std::istringstream rest(line.substr(colon + 1));
        std::string tok;
        while (rest >> tok) neighbor_names.back().push_back(tok);
    }

    g.rot.resize(g.names.size());
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (const auto& n : neighbor_names[v]) {
            auto it = index.find(n);
            if (it == index.end())
                throw ParseError("asymmetric adjacency: vertex '" + n +
                                 "' referenced from '" + g.names[v] + "' but never declared");
            g.rot[v].push_back(it->second);
        }
    }
    g.a = g.find_vertex("A");
    g.b = g.find_vertex("B");
    g.c = g.find_vertex("C");
    g.d = g.find_vertex("D");
    validate_graph(g);
    return g;
}

inline std::string serialize_graph(const Graph& g) {
    std::string out = g.general ? "GR1 general\n" : "GR1\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out += g.names[v] + ":";
        for (int u : g.rot[v]) out += " " + g.names[u];
        out += "\n";
    }
    return out;
}

// Number of faces of the embedding described by the rotation lists,
// found by tracing dart orbits: the dart after (u -> v) is (v -> w)
// where w follows u in v's rotation.
inline int face_count(const Graph& g) {
    std::vector<int> offset(g.vertex_count() + 1, 0);
    for (int v = 0; v < g.vertex_count(); ++v) offset[v + 1] = offset[v] + g.degree(v);
    int total = offset.back();
    std::vector<char> seen(total, 0);
    int faces = 0;
    for (int start = 0; start < total; ++start) {
        if (seen[start]) continue;
        ++faces;
        int dart = start;
        do {
            seen[dart] = 1;
            int v = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), dart) -
                                     offset.begin()) -
                    1;
            int w = g.rot[v][dart - offset[v]];
            int e = g.door_index(w, v);
            dart = offset[w] + (e + 1) % g.degree(w);
        } while (dart != start && !seen[dart]);
    }
    return faces;
}

// Whether the rotation system is a genus-0 (planar) embedding.
inline bool is_planar_embedding(const Graph& g) {
    return g.vertex_count() - g.door_count() + face_count(g) == 2;
}

// Replaces every vertex of degree >= 4 by a directed ring of degree-3
// vertices, one per incident door: vertex v with ccw neighbors
// u_1..u_d becomes the cycle v.1..v.d with v.i attached to u_i and
// rotation (v.{i-1}, u_i, v.{i+1}). Lower-degree vertices are kept
// unchanged, so a graph that is already a room graph maps to itself.
inline Graph ring_transform(const Graph& g) {
    Graph out;
    std::vector<int> base(g.vertex_count(), -1);  // first new id per vertex
    auto claim_name = [&out](std::string cand) {
        while (std::find(out.names.begin(), out.names.end(), cand) != out.names.end())
            cand += "'";
        out.names.push_back(cand);
    };
    for (int v = 0; v < g.vertex_count(); ++v) {
        base[v] = out.vertex_count();
        if (g.degree(v) <= 3) {
            claim_name(g.names[v]);
        } else {
            for (int i = 0; i < g.degree(v); ++i)
                claim_name(g.names[v] + "." + std::to_string(i + 1));
        }
    }
    // New-graph endpoint of edge {x, y} on x's side.
    auto end_of = [&](int x, int y) {
        return g.degree(x) <= 3 ? base[x] : base[x] + g.door_index(x, y);
    };
    out.rot.resize(out.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        int deg = g.degree(v);
        if (deg <= 3) {
            for (int u : g.rot[v]) out.rot[base[v]].push_back(end_of(u, v));
        } else {
            for (int i = 0; i < deg; ++i) {
                int self = base[v] + i;
                out.rot[self].push_back(base[v] + (i + deg - 1) % deg);
                out.rot[self].push_back(end_of(g.rot[v][i], v));
                out.rot[self].push_back(base[v] + (i + 1) % deg);
            }
        }
    }
    out.a = g.a >= 0 ? base[g.a] : -1;
    out.b = g.b >= 0 ? base[g.b] : -1;
    out.c = g.c >= 0 ? base[g.c] : -1;
    out.d = g.d >= 0 ? base[g.d] : -1;
    // A degree-3 entrance survives the transform untouched, so such a
    // graph stays in general mode; everything else is a room graph now.
    out.general = g.degree(g.a) == 3;
    validate_graph(out);
    return out;
}

}  // namespace mazelab

#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "mazelab/error.hpp"
#include "mazelab/explore.hpp"
#include "mazelab/graph.hpp"

namespace mazelab {

// Spanning tree of first-entry doors of a closed exploration, rooted at
// A: parent[v] is the vertex the walk stood on when it first opened a
// door into v (-1 for the root). Root plus edge set determine the
// parent array uniquely, so equality of trees is equality of parents.
struct DfsTree {
    int root = -1;
    std::vector<int> parent;

    friend bool operator==(const DfsTree&, const DfsTree&) = default;

    int tree_degree(int v) const {
        int d = parent[v] >= 0 ? 1 : 0;
        for (int u = 0; u < static_cast<int>(parent.size()); ++u)
            if (parent[u] == v) ++d;
        return d;
    }
};

inline DfsTree dfs_tree(const Graph& g, const Trace& t) {
    if (t.mode != TraceMode::Closed) throw UsageError("DFS tree needs a closed trace");
    DfsTree tree;
    tree.root = g.a;
    tree.parent.assign(g.vertex_count(), -1);
    std::vector<char> seen(g.vertex_count(), 0);
    seen[g.a] = 1;
    for (const auto& s : t.steps)
        if (!seen[s.to]) {
            seen[s.to] = 1;
            tree.parent[s.to] = s.from;
        }
    for (char c : seen) assert(c);  // closed traces visit everything
    return tree;
}

// The unique tree vertex separating A, B and C: the last common vertex
// of the tree paths A->B and A->C. components labels every vertex with
// the piece of T - pivot it falls in (0 = A's, 1 = B's, 2 = C's side,
// -1 for the pivot itself).
struct PivotResult {
    int pivot = -1;
    std::vector<int> components;
};

inline PivotResult pivot_vertex(const Graph& g, const DfsTree& t) {
    int n = g.vertex_count();
    std::vector<char> on_b_path(n, 0);
    for (int v = g.b; v >= 0; v = t.parent[v]) on_b_path[v] = 1;
    int pivot = -1;
    for (int v = g.c; v >= 0; v = t.parent[v])
        if (on_b_path[v]) {
            pivot = v;
            break;
        }
    assert(pivot >= 0);
    assert(t.tree_degree(pivot) == 3);

    // Flood each piece of the tree with the pivot removed.
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v)
        if (t.parent[v] >= 0) {
            adj[v].push_back(t.parent[v]);
            adj[t.parent[v]].push_back(v);
        }
    PivotResult r;
    r.pivot = pivot;
    r.components.assign(n, -1);
    int label = 0;
    for (int s : {g.a, g.b, g.c}) {
        assert(s != pivot && r.components[s] == -1);
        std::vector<int> stack{s};
        r.components[s] = label;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[v])
                if (u != pivot && r.components[u] == -1) {
                    r.components[u] = label;
                    stack.push_back(u);
                }
        }
        ++label;
    }
    return r;
}

// Index of v's coin in the canonical order, -1 if v has no coin.
inline int coin_slot(const Graph& g, int v) {
    if (g.degree(v) != 3) return -1;
    int slot = 0;
    for (int u = 0; u < v; ++u)
        if (g.degree(u) == 3) ++slot;
    return slot;
}

// The proof's pairing: run the closed exploration, find the pivot of
// its DFS tree, and flip that one coin. Self-inverse because the
// flipped run grows the same tree and hence the same pivot.
inline CoinAssignment involution_flip(const Graph& g, const CoinAssignment& c) {
    Trace t = explore(g, c, TraceMode::Closed);
    PivotResult p = pivot_vertex(g, dfs_tree(g, t));
    int slot = coin_slot(g, p.pivot);
    assert(slot >= 0);  // tree-degree 3 forces graph-degree 3
    CoinAssignment out = c;
    out.coins[slot] = out.coins[slot] == Face::Heads ? Face::Tails : Face::Heads;
    return out;
}

// Tree edges as text, one "parent -> child" line per non-root vertex in
// id order; stable for golden tests.
inline std::string serialize_tree(const Graph& g, const DfsTree& t) {
    std::string out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (t.parent[v] >= 0) out += g.names[t.parent[v]] + " -> " + g.names[v] + "\n";
    return out;
}

}  // namespace mazelab

#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "mazelab/error.hpp"
#include "mazelab/graph.hpp"
#include "mazelab/rng.hpp"

namespace mazelab {

enum class Handedness { Right, Left };
enum class Face : uint8_t { Tails = 0, Heads = 1 };
enum class TraceMode { Closed, Exit };
enum class ExitOrder { BFirst, CFirst };

inline char face_char(Face f) { return f == Face::Heads ? 'H' : 'T'; }

// One fair coin per degree-3 vertex, in canonical order (vertex id
// order: row-major rooms for grids, declaration order for GR1 files).
// Heads picks the right-first door order, Tails left-first. root_choice
// selects the first door at a degree-3 entrance (the modified-start
// variant); it stays -1 for ordinary degree-1 entrances.
struct CoinAssignment {
    std::vector<Face> coins;
    int root_choice = -1;

    static CoinAssignment from_mask(const Graph& g, uint64_t mask) {
        CoinAssignment c;
        size_t k = g.coin_vertices().size();
        for (size_t i = 0; i < k; ++i)
            c.coins.push_back((mask >> i) & 1 ? Face::Heads : Face::Tails);
        return c;
    }

    // Bitstring with one character per coin in canonical order, '1' = Heads.
    static CoinAssignment from_bits(const Graph& g, const std::string& bits) {
        size_t k = g.coin_vertices().size();
        if (bits.size() != k)
            throw UsageError("expected " + std::to_string(k) + (k == 1 ? " coin" : " coins") +
                             ", got " + std::to_string(bits.size()));
        CoinAssignment c;
        for (char ch : bits) {
            if (ch != '0' && ch != '1') throw UsageError("coin bits must be 0 or 1");
            c.coins.push_back(ch == '1' ? Face::Heads : Face::Tails);
        }
        return c;
    }

    std::string bits() const {
        std::string s;
        for (Face f : coins) s += f == Face::Heads ? '1' : '0';
        return s;
    }
};

struct CoinEvent {
    int vertex = -1;
    Face face = Face::Tails;
    int64_t step = 0;  // number of steps taken before the consult
};

struct Trace {
    TraceMode mode = TraceMode::Closed;
    std::vector<DirectedDoor> steps;
    std::vector<int> first_visit;  // vertices in first-visit order
    std::vector<CoinEvent> coin_log;
};

// Rooms in walk order: start vertex followed by the head of every step.
inline std::vector<int> room_sequence(const Trace& t) {
    std::vector<int> seq;
    if (t.steps.empty()) return seq;
    seq.push_back(t.steps.front().from);
    for (const auto& s : t.steps) seq.push_back(s.to);
    return seq;
}

// --- exploration policies ------------------------------------------------

// Constant handedness: Right behaves like all-Heads, Left like all-Tails.
struct HandPolicy {
    Face face;
    Face coin(int, int) { return face; }
    int root_first() const {
        throw UsageError("policy requires a root choice at a degree-3 entrance");
    }
};

struct AssignmentPolicy {
    const CoinAssignment* c;
    Face coin(int, int slot) { return c->coins[slot]; }
    int root_first() const {
        if (c->root_choice < 0 || c->root_choice > 2)
            throw UsageError("policy requires a root choice at a degree-3 entrance");
        return c->root_choice;
    }
};

// Lazy seeded coins for Monte Carlo trials: coins are drawn in first-entry
// order from a private stream, so a (seed, trial) pair fixes the walk.
struct SeededPolicy {
    Rng rng;
    Face coin(int, int) { return rng.next_bit() ? Face::Heads : Face::Tails; }
    int root_first() { return static_cast<int>(rng.below(3)); }
};

// --- the engine -----------------------------------------------------------

// Trémaux exploration: starting at A, every move opens an untried door.
// At first entry through door e the remaining doors are queued in
// right-first order (forward along the counterclockwise rotation from e)
// on Heads/Right, left-first (backward) on Tails/Left. A door into an
// already-visited vertex is traversed and immediately reversed (bounce);
// an exhausted vertex is left through its entry door (backtrack). The
// closed walk uses every directed door exactly once and ends at A.
//
// The scratch arrays are reusable across runs (epoch-stamped), which
// keeps exhaustive enumeration allocation-free. One Explorer per thread.
class Explorer {
  public:
    explicit Explorer(const Graph& g) : g_(&g) {
        int n = g.vertex_count();
        offset_.assign(n + 1, 0);
        for (int v = 0; v < n; ++v) {
            if (g.degree(v) > 3)
                throw UsageError("degree exceeds three at vertex '" + g.names[v] + "'");
            offset_[v + 1] = offset_[v] + g.degree(v);
        }
        int darts = offset_[n];
        to_.resize(darts);
        rev_.resize(darts);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < g.degree(v); ++i) {
                int u = g.rot[v][i];
                to_[offset_[v] + i] = u;
                rev_[offset_[v] + i] = offset_[u] + g.door_index(u, v);
            }
        coin_slot_.assign(n, -1);
        int k = 0;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 3) coin_slot_[v] = k++;
        coin_count_ = k;
        used_.assign(darts, 0);
        visited_.assign(n, 0);
        base_.assign(n, 0);
        dir_.assign(n, 1);
        tried_.assign(n, 0);
        exit_mask_.assign(n, 0);
        for (int t : {g.b, g.c, g.d})
            if (t >= 0) exit_mask_[t] = 1;
        epoch_ = 0;
    }

    const Graph& graph() const { return *g_; }
    int coin_count() const { return coin_count_; }
    const std::vector<char>& exit_mask() const { return exit_mask_; }

    // Runs one exploration. stop_at: per-vertex flags; the walk halts at
    // the first entry to a flagged vertex (pass nullptr for a full closed
    // walk). The sink sees every step, first visit, and coin consult; its
    // on_step may return true to halt early. Returns the vertex the walk
    // ended on (the stop vertex, or A for a completed closed walk).
    template <class Policy, class Sink>
    int run(Policy&& pol, Sink&& sink, const std::vector<char>* stop_at = nullptr) {
        ++epoch_;
        steps_ = 0;
        const int root = g_->a;
        const int64_t step_bound = 2 * static_cast<int64_t>(to_.size() / 2);
        visited_[root] = epoch_;
        tried_[root] = 0;
        if (g_->degree(root) == 3) {
            base_[root] = static_cast<int16_t>(pol.root_first());
            Face f = pol.coin(root, coin_slot_[root]);
            sink.on_coin(root, f, steps_);
            dir_[root] = f == Face::Heads ? 1 : -1;
        } else if (g_->degree(root) == 1) {
            base_[root] = 0;
            dir_[root] = 1;
        } else {
            throw UsageError("opening A must have degree 1 or 3");
        }
        sink.on_first_visit(root);
        int cur = root;
        for (;;) {
            const int deg = offset_[cur + 1] - offset_[cur];
            const bool at_root = cur == root;
            const int total = at_root ? deg : deg - 1;
            int chosen = -1;
            while (tried_[cur] < total) {
                int t = tried_[cur]++;
                int off = at_root ? dir_[cur] * t : dir_[cur] * (t + 1);
                int pos = (base_[cur] + off % deg + deg) % deg;
                int dart = offset_[cur] + pos;
                if (used_[dart] != epoch_) {
                    chosen = dart;
                    break;
                }
            }
            if (chosen >= 0) {
                int w = to_[chosen];
                used_[chosen] = epoch_;
                ++steps_;
                assert(steps_ <= step_bound);
                if (sink.on_step(cur, w)) return w;
                if (visited_[w] != epoch_) {
                    visited_[w] = epoch_;
                    tried_[w] = 0;
                    base_[w] = static_cast<int16_t>(rev_[chosen] - offset_[w]);
                    if (g_->degree(w) == 3) {
                        Face f = pol.coin(w, coin_slot_[w]);
                        sink.on_coin(w, f, steps_);
                        dir_[w] = f == Face::Heads ? 1 : -1;
                    } else {
                        dir_[w] = 1;
                    }
                    sink.on_first_visit(w);
                    if (stop_at && (*stop_at)[w]) return w;
                    cur = w;
                } else {
                    // bounce: the reverse dart is still free here (the
                    // visited endpoint has not queued this door itself)
                    int back = rev_[chosen];
                    assert(used_[back] != epoch_);
                    used_[back] = epoch_;
                    ++steps_;
                    if (sink.on_step(w, cur)) return cur;
                }
            } else {
                if (at_root) {
                    assert(steps_ == step_bound);
                    return root;
                }
                int back = offset_[cur] + base_[cur];
                assert(used_[back] != epoch_);
                used_[back] = epoch_;
                int w = to_[back];
                ++steps_;
                if (sink.on_step(cur, w)) return w;
                cur = w;
            }
        }
    }

    int64_t steps_taken() const { return steps_; }

  private:
    const Graph* g_;
    std::vector<int> offset_, to_, rev_;
    std::vector<int> coin_slot_;
    int coin_count_ = 0;
    std::vector<int> used_, visited_;
    std::vector<int16_t> base_;
    std::vector<int8_t> dir_, tried_;
    std::vector<char> exit_mask_;
    int epoch_ = 0;
    int64_t steps_ = 0;
};

struct NullSink {
    bool on_step(int, int) { return false; }
    void on_first_visit(int) {}
    void on_coin(int, Face, int64_t) {}
};

struct TraceSink {
    Trace* t;
    bool on_step(int u, int v) {
        t->steps.push_back({u, v});
        return false;
    }
    void on_first_visit(int v) { t->first_visit.push_back(v); }
    void on_coin(int v, Face f, int64_t step) { t->coin_log.push_back({v, f, step}); }
};

namespace detail {

template <class Policy>
inline Trace explore_with(const Graph& g, Policy&& pol, TraceMode mode) {
    Explorer ex(g);
    Trace t;
    t.mode = mode;
    const std::vector<char>* stop = nullptr;
    if (mode == TraceMode::Exit) {
        if (!g.has_exits()) throw UsageError("exit mode needs a maze with exits");
        stop = &ex.exit_mask();
    }
    ex.run(pol, TraceSink{&t}, stop);
    return t;
}

}  // namespace detail

inline Trace explore(const Graph& g, Handedness hand, TraceMode mode) {
    return detail::explore_with(
        g, HandPolicy{hand == Handedness::Right ? Face::Heads : Face::Tails}, mode);
}

inline Trace explore(const Graph& g, const CoinAssignment& c, TraceMode mode) {
    size_t k = g.coin_vertices().size();
    if (c.coins.size() != k)
        throw UsageError("expected " + std::to_string(k) + (k == 1 ? " coin" : " coins") +
                         ", got " + std::to_string(c.coins.size()));
    return detail::explore_with(g, AssignmentPolicy{&c}, mode);
}

// First of B, C in first-visit order; needs a trace that reached one.
inline ExitOrder exit_order(const Graph& g, const Trace& t) {
    for (int v : t.first_visit) {
        if (v == g.b) return ExitOrder::BFirst;
        if (v == g.c) return ExitOrder::CFirst;
    }
    throw Error("trace reaches neither exit");
}

// --- wall followers --------------------------------------------------------

// Hand-on-wall walk: enter at A; at each room reached through door e,
// leave through the rotation successor of e (Right hand: right, straight,
// left, back among the existing doors) or predecessor (Left). Halts at
// the first opening reached.
inline Trace wall_follower(const Graph& g, Handedness hand) {
    if (!g.has_exits()) throw UsageError("wall follower needs a maze with exits");
    Trace t;
    t.mode = TraceMode::Exit;
    int64_t bound = 2 * static_cast<int64_t>(g.door_count());
    int prev = g.a, cur = g.rot[g.a][0];
    t.first_visit.push_back(g.a);
    t.steps.push_back({prev, cur});
    std::vector<char> seen(g.vertex_count(), 0);
    seen[g.a] = 1;
    while (cur != g.b && cur != g.c && cur != g.d) {
        if (!seen[cur]) {
            seen[cur] = 1;
            t.first_visit.push_back(cur);
        }
        int deg = g.degree(cur);
        int e = g.door_index(cur, prev);
        int next = hand == Handedness::Right ? (e + 1) % deg : (e + deg - 1) % deg;
        prev = cur;
        cur = g.rot[cur][next];
        t.steps.push_back({prev, cur});
        if (static_cast<int64_t>(t.steps.size()) > bound) throw Error("wall follower looped");
    }
    t.first_visit.push_back(cur);
    return t;
}

// The opening the walk ended on.
inline int trace_exit(const Trace& t) {
    if (t.steps.empty()) throw Error("empty trace");
    return t.steps.back().to;
}

// --- text form --------------------------------------------------------------

// One directed door per line, then a stable summary block.
inline std::string serialize_trace(const Graph& g, const Trace& t) {
    std::string out;
    for (const auto& s : t.steps) out += g.names[s.from] + " -> " + g.names[s.to] + "\n";
    out += "mode: " + std::string(t.mode == TraceMode::Closed ? "closed" : "exit") + "\n";
    out += "steps: " + std::to_string(t.steps.size()) + "\n";
    out += "first-visit:";
    for (int v : t.first_visit) out += " " + g.names[v];
    out += "\n";
    for (int v : t.first_visit) {
        if (v == g.b || v == g.c) {
            out += "exit-order: " + g.names[v] + "\n";
            break;
        }
    }
    if (!t.coin_log.empty()) {
        out += "coins:";
        for (const auto& e : t.coin_log)
            out += " " + g.names[e.vertex] + "=" + face_char(e.face) + "@" +
                   std::to_string(e.step);
        out += "\n";
    }
    return out;
}

}  // namespace mazelab

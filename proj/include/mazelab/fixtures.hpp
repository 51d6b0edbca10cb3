#pragma once

// Canonical fixtures used across the test suite and shipped as files in
// fixtures/. The texts here are the source of truth; a test keeps the
// files in sync.

namespace mazelab::fixtures {

// 1x1 maze: openings A on top, B left, C right. Room graph is the star
// r1 ~ {A, B, C}.
inline constexpr const char* kStar1x1 =
    "MZ1 1 1\n"
    "+A+\n"
    "B C\n"
    "+-+\n";

// 1x2 corridor: A above the left room, B left of it, C right of the
// right room. Tree maze with a single coin at r1.
inline constexpr const char* kCorridor1x2 =
    "MZ1 1 2\n"
    "+A+-+\n"
    "B   C\n"
    "+-+-+\n";

// 2x2 with all four interior doors open and a single entrance A; the
// only degree-3 room is the top-left one. Used for door-direction
// probabilities.
inline constexpr const char* kCycleEntranceOnly =
    "MZ1 2 2\n"
    "+A+-+\n"
    "|   |\n"
    "+ + +\n"
    "|   |\n"
    "+-+-+\n";

// 2x2 with all four interior doors open and openings A (top of r1),
// B (bottom of r3), C (right of r4). Rooms r1, r3, r4 have degree 3,
// so there are k = 3 coins.
inline constexpr const char* kCycleThreeCoins =
    "MZ1 2 2\n"
    "+A+-+\n"
    "|   |\n"
    "+ + +\n"
    "|   C\n"
    "+B+-+\n";

// Degree-4 hub h joined to chains leading to A, B, C and to a dead
// end s; the smallest interesting ring-transform input.
inline constexpr const char* kHub4 =
    "GR1 general\n"
    "A: p\n"
    "p: A h\n"
    "h: p q r s\n"
    "q: h B\n"
    "B: q\n"
    "r: h C\n"
    "C: r\n"
    "s: h\n";

// Found by mazelab-search ex1: the smallest degree-3-entrance graph
// (by internal vertex count, in scan order) where the modified-start
// exploration is unfair: P(B) = 2/3, P(C) = 1/3 over 12 outcomes.
inline constexpr const char* kUnequalExits =
    "GR1 general\n"
    "A: C x1 x2\n"
    "B: x1\n"
    "C: A\n"
    "x1: A B x2\n"
    "x2: A x1\n";

// Tree with three exits: P(B) = P(C) = 1/4 and P(D) = 1/2.
inline constexpr const char* kTreeThreeExits =
    "GR1\n"
    "A: x\n"
    "x: A y z\n"
    "y: x B C\n"
    "z: x D\n"
    "B: y\n"
    "C: y\n"
    "D: z\n";

}  // namespace mazelab::fixtures

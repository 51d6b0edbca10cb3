#pragma once

// Umbrella header: the whole maze-exploration toolkit.

#include "mazelab/analysis.hpp"
#include "mazelab/error.hpp"
#include "mazelab/explore.hpp"
#include "mazelab/fixtures.hpp"
#include "mazelab/graph.hpp"
#include "mazelab/grid.hpp"
#include "mazelab/mazegen.hpp"
#include "mazelab/noncross.hpp"
#include "mazelab/rational.hpp"
#include "mazelab/render.hpp"
#include "mazelab/rng.hpp"
#include "mazelab/tree.hpp"

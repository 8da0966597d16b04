#pragma once

// Umbrella header for the gcol graph coloring library.

#include "gcol/bench.hpp"
#include "gcol/coloring.hpp"
#include "gcol/errors.hpp"
#include "gcol/graph.hpp"
#include "gcol/graph_io.hpp"
#include "gcol/lockstep.hpp"
#include "gcol/parallel.hpp"
#include "gcol/rmat.hpp"
#include "gcol/types.hpp"

#pragma once

// Umbrella header: exact toolkit for weighted biclique problems, their
// polytope skeletons, cone decompositions, and hardness reductions.

#include "biclique/enumerate.hpp"
#include "biclique/errors.hpp"
#include "biclique/families.hpp"
#include "biclique/graph.hpp"
#include "biclique/json_io.hpp"
#include "biclique/matching.hpp"
#include "biclique/rational.hpp"
#include "biclique/reductions.hpp"
#include "biclique/simplex.hpp"
#include "biclique/skeleton.hpp"
#include "biclique/solvers.hpp"

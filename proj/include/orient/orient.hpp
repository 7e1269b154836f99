#pragma once

#include "admissibility.hpp"
#include "connectivity.hpp"
#include "cuts.hpp"
#include "eulerian.hpp"
#include "flow.hpp"
#include "graph.hpp"
#include "grid.hpp"
#include "io.hpp"
#include "limits.hpp"
#include "oracles.hpp"
#include "parallel.hpp"
#include "reductions.hpp"
#include "suite.hpp"

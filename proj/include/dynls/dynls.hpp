#pragma once

#include "bench.hpp"
#include "construct.hpp"
#include "exchange.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "perturb.hpp"
#include "reduce.hpp"
#include "region.hpp"
#include "sadpls.hpp"
#include "search.hpp"
#include "solution_state.hpp"
#include "solver.hpp"

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "construct.hpp"
#include "deadline.hpp"
#include "graph.hpp"
#include "reduce.hpp"
#include "region.hpp"
#include "sadpls.hpp"
#include "search.hpp"
#include "solution_state.hpp"

namespace dynls {

struct SolverConfig {
  double time_limit = 1000.0;  // seconds, reduction included
  std::uint64_t seed = 1;
  double reduce_cap = 200.0;  // seconds
  std::uint32_t m1 = 100;
  std::uint32_t m2 = 3000;
  std::uint32_t search_depth = 100;
  std::uint32_t bms_t = 50;
  bool no_reduce = false;
  // Outer-iteration budget, 0 for unlimited. Makes runs independent of timing.
  std::uint64_t max_iterations = 0;

  void validate() const {
    if (!(time_limit > 0)) throw std::invalid_argument("time_limit must be > 0");
    if (reduce_cap < 0) throw std::invalid_argument("reduce_cap must be >= 0");
    if (search_depth < 1) throw std::invalid_argument("search_depth must be >= 1");
    if (bms_t < 1) throw std::invalid_argument("bms_t must be >= 1");
    SadplsConfig{m1, m2}.validate();
  }
};

struct TracePoint {
  double seconds;
  Weight weight;
};

struct SolveResult {
  VertexSet best_set;  // on the input graph
  Weight best_weight = 0;
  double time_to_best = 0;
  std::uint64_t iterations = 0;
  std::vector<TracePoint> trace;  // every improvement of the incumbent

  Weight initial_weight = 0;  // constructed solution, lifted
  std::size_t kernel_vertices = 0;
  std::size_t kernel_edges = 0;
  std::size_t radius_parameter = 0;
  bool dense_regime = false;
  std::vector<double> iteration_seconds;
};

// Full pipeline: kernelize, construct, then local search until the budget is
// spent. Dense kernels (r_G <= 2) run SimComLS; sparse ones alternate global
// SAdpLS, region search and, when regions fail, ComLS.
inline SolveResult solve(const Graph& g, const SolverConfig& cfg) {
  cfg.validate();
  const auto start = Clock::now();
  SearchContext ctx(cfg.seed);
  ctx.deadline = Deadline::after(cfg.time_limit);
  ctx.max_iterations = cfg.max_iterations;
  ctx.perturb.bms_t = cfg.bms_t;
  ctx.perturb.escalate_every = cfg.m1;

  const double cap = cfg.no_reduce ? 0.0 : std::min(cfg.reduce_cap, cfg.time_limit);
  const Kernel kernel = reduce_graph(g, cap);
  const Graph& kg = kernel.graph;

  SolveResult result;
  result.kernel_vertices = kg.num_vertices();
  result.kernel_edges = kg.num_edges();

  VertexSet initial(kg.num_vertices());
  if (kg.num_vertices() > 0) {
    result.radius_parameter = compute_radius_parameter(kg);
    initial = cis(kg, result.radius_parameter);
  }
  result.dense_regime = result.radius_parameter <= 2;

  SolutionState state(kg, initial);
  Incumbent best(state);
  result.initial_weight = best.weight() + kernel.offset;
  result.trace.push_back({seconds_since(start), result.initial_weight});
  best.on_improve([&](Weight w) { result.trace.push_back({seconds_since(start), w + kernel.offset}); });

  auto iteration_clock = Clock::now();
  auto close_iteration = [&] {
    result.iteration_seconds.push_back(seconds_since(iteration_clock));
    iteration_clock = Clock::now();
  };

  if (kg.num_vertices() > 0) {
    if (result.dense_regime) {
      simcomls(state, best, ctx, close_iteration);
    } else {
      const SadplsConfig sad{cfg.m1, cfg.m2};
      const RegionConfig region{sad, static_cast<int>(cfg.search_depth)};
      RegionMemory memory;
      while (!ctx.out_of_budget()) {
        sadpls(state, best, -1, sad, ctx);
        state.assign(best.set());
        const RegionResult r = region_search(state, best, result.radius_parameter, region, ctx, memory);
        if (!r.improved) {
          comls(state, best, ctx);
          state.assign(best.set());
        }
        ++ctx.iterations;
        close_iteration();
      }
    }
  }

  result.best_set = lift_solution(kernel, best.set());
  result.best_weight = g.weight_of(result.best_set);
  if (!g.is_independent(result.best_set) || result.best_weight != best.weight() + kernel.offset)
    throw std::logic_error("solve: lifted solution failed verification");
  result.iterations = ctx.iterations;
  result.time_to_best = result.trace.back().seconds;
  return result;
}

}  // namespace dynls

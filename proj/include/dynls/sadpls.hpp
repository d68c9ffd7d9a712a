#pragma once

#include <cstdint>
#include <stdexcept>

#include "exchange.hpp"
#include "perturb.hpp"
#include "search.hpp"
#include "solution_state.hpp"

namespace dynls {

struct SadplsConfig {
  std::uint32_t m1 = 100;   // base_num escalation window; also the local search depth
  std::uint32_t m2 = 3000;  // stagnation budget on the whole graph

  void validate() const {
    if (m1 < 1) throw std::invalid_argument("SadplsConfig: m1 must be >= 1");
    if (m2 < m1) throw std::invalid_argument("SadplsConfig: m2 must be >= m1");
  }
};

// Iterated local search: module-A descent alternating with score-based
// perturbation, until `search_depth` consecutive iterations fail to improve
// `best` (m2 when search_depth is -1) or the deadline passes.
inline void sadpls(SolutionState& s, Incumbent& best, int search_depth, const SadplsConfig& cfg,
                   SearchContext& ctx) {
  if (search_depth == 0 || search_depth < -1) throw std::invalid_argument("sadpls: search_depth must be -1 or >= 1");
  const std::uint64_t depth = search_depth > 0 ? static_cast<std::uint64_t>(search_depth) : cfg.m2;

  PerturbConfig pc = ctx.perturb;
  pc.base_num = 1;
  pc.escalate_every = cfg.m1;

  s.reset_stagnation();
  run_module_a(s, ctx.deadline);
  best.offer(s);
  while (s.uiter() < depth && !ctx.deadline.expired()) {
    perturb_step(s, pc, ctx.rng);
    run_module_a(s, ctx.deadline);
    const bool improved = best.offer(s);
    if (improved) pc.on_improvement();
    s.tick(improved);
  }
}

}  // namespace dynls

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "deadline.hpp"
#include "exchange.hpp"
#include "perturb.hpp"
#include "rng.hpp"
#include "solution_state.hpp"

namespace dynls {

// Best solution seen so far in one search space.
class Incumbent {
 public:
  Incumbent(VertexSet set, Weight weight) : set_(std::move(set)), weight_(weight) {}
  explicit Incumbent(const SolutionState& s) : set_(s.solution()), weight_(s.weight()) {}

  const VertexSet& set() const { return set_; }
  Weight weight() const { return weight_; }

  // Invoked with the new weight whenever the incumbent improves.
  void on_improve(std::function<void(Weight)> fn) { listener_ = std::move(fn); }

  bool offer(const SolutionState& s) {
    if (s.weight() <= weight_) return false;
    set_ = s.solution();
    weight_ = s.weight();
    if (listener_) listener_(weight_);
    return true;
  }

 private:
  VertexSet set_;
  Weight weight_;
  std::function<void(Weight)> listener_;
};

// Everything stochastic or budgeted that one search run threads through
// its stages. One context per run; never shared.
struct SearchContext {
  explicit SearchContext(std::uint64_t seed = 1) : rng(seed) {}

  Rng rng;
  Deadline deadline;
  PerturbConfig perturb;
  RewardTable rewards;
  // Outer-iteration budget, 0 for none. Counted by the top-level loops.
  std::uint64_t max_iterations = 0;
  std::uint64_t iterations = 0;

  bool out_of_budget() const {
    return deadline.expired() || (max_iterations != 0 && iterations >= max_iterations);
  }
};

// Complex local search: every round runs module A, then one roulette-selected
// EM module, rewarding it by outcome; B runs after fruitless rounds. Stops
// once sum_Re falls back to its initial value. Returns whether `best` improved.
inline bool comls(SolutionState& s, Incumbent& best, SearchContext& ctx) {
  RewardTable& rt = ctx.rewards;
  rt.sum_re = RewardTable::initial_sum();
  const Weight entry = best.weight();
  do {
    if (ctx.deadline.expired()) break;
    const Weight best_before = best.weight();
    const Weight w0 = s.weight();
    run_module_a(s, ctx.deadline);
    const Weight w1 = s.weight();
    const EmModule a = select_module(rt, ctx.rng);
    run_module_em(s, a, ctx.deadline);
    const Weight w2 = s.weight();

    RoundOutcome outcome = RoundOutcome::kNone;
    if (w2 > w1) {
      outcome = w2 > best_before ? RoundOutcome::kNewGlobalBest : RoundOutcome::kImprovedCurrent;
    } else if (w1 > w0) {
      outcome = RoundOutcome::kImprovedMovesOnly;
    }
    update_reward(rt, a, outcome);
    best.offer(s);
    if (outcome == RoundOutcome::kNone) {
      run_module_b(s, ctx.deadline);
      best.offer(s);
    }
  } while (rt.sum_re > RewardTable::initial_sum());
  return best.weight() > entry;
}

// Perturb with a random strategy and a sampled insertion count, escalating
// base_num on stagnation.
inline void perturb_step(SolutionState& s, PerturbConfig& cfg, Rng& rng) {
  cfg.on_stagnation(s.uiter());
  const ScoreStrategy strategy = pick_strategy(rng);
  const std::uint32_t num = sample_insert_count(cfg, rng);
  savp_perturb(s, strategy, num, cfg, rng);
}

// Dense-regime driver: ComLS rounds until the budget runs out, perturbing
// after every round that fails to improve the incumbent.
inline void simcomls(SolutionState& s, Incumbent& best, SearchContext& ctx,
                     const std::function<void()>& on_iteration = {}) {
  while (!ctx.out_of_budget()) {
    const bool improved = comls(s, best, ctx);
    s.tick(improved);
    if (improved) {
      ctx.perturb.on_improvement();
    } else {
      perturb_step(s, ctx.perturb, ctx.rng);
      best.offer(s);
    }
    ++ctx.iterations;
    if (on_iteration) on_iteration();
  }
}

}  // namespace dynls

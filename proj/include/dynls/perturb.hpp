#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "rng.hpp"
#include "solution_state.hpp"

namespace dynls {

// Vertex scores used to rank perturbation candidates.
enum class ScoreStrategy : std::uint8_t {
  kFreq,    // lower is better
  kAge,     // higher is better
  kChange,  // higher is better
  kLoss,    // lower is better
};

inline constexpr std::array<ScoreStrategy, 4> kAllStrategies = {ScoreStrategy::kFreq, ScoreStrategy::kAge,
                                                                ScoreStrategy::kChange, ScoreStrategy::kLoss};

inline const char* to_string(ScoreStrategy s) {
  switch (s) {
    case ScoreStrategy::kFreq: return "freq";
    case ScoreStrategy::kAge: return "age";
    case ScoreStrategy::kChange: return "change";
    case ScoreStrategy::kLoss: return "loss";
  }
  return "?";
}

struct PerturbConfig {
  std::uint32_t base_num = 1;
  std::uint32_t bms_t = 50;
  // base_num grows by one each time the stagnation counter hits a multiple of this.
  std::uint32_t escalate_every = 100;
  std::uint32_t max_base_num = 8;

  void validate() const {
    if (base_num < 1) throw std::invalid_argument("PerturbConfig: base_num must be >= 1");
    if (bms_t < 1) throw std::invalid_argument("PerturbConfig: bms_t must be >= 1");
    if (escalate_every < 1) throw std::invalid_argument("PerturbConfig: escalate_every must be >= 1");
  }

  // Escalation schedule, driven by the caller's stagnation counter.
  void on_stagnation(std::uint64_t uiter) {
    if (uiter > 0 && uiter % escalate_every == 0) base_num = std::min(base_num + 1, max_base_num);
  }
  void on_improvement() { base_num = 1; }
};

// base_num + pro_num, where pro_num = i + 1 with probability 2^-i (i >= 1):
// i counts fair-coin flips up to and including the first tail.
inline std::uint32_t sample_insert_count(const PerturbConfig& cfg, Rng& rng) {
  std::uint32_t i = 1;
  while (rng.coin() && i < 62) ++i;
  return cfg.base_num + i + 1;
}

inline ScoreStrategy pick_strategy(Rng& rng) { return kAllStrategies[rng.below(kAllStrategies.size())]; }

namespace detail {

// True when a ranks strictly better than b under the strategy; ties by id.
inline bool better(const SolutionState& s, ScoreStrategy strategy, Vertex a, Vertex b) {
  switch (strategy) {
    case ScoreStrategy::kFreq:
      if (s.freq(a) != s.freq(b)) return s.freq(a) < s.freq(b);
      break;
    case ScoreStrategy::kAge:
      if (s.age(a) != s.age(b)) return s.age(a) > s.age(b);
      break;
    case ScoreStrategy::kChange:
      if (s.change(a) != s.change(b)) return s.change(a) > s.change(b);
      break;
    case ScoreStrategy::kLoss:
      if (s.loss(a) != s.loss(b)) return s.loss(a) < s.loss(b);
      break;
  }
  return a < b;
}

}  // namespace detail

// Forces up to `num` vertices into CS, each chosen by best-from-multiple-
// selection under `strategy`, then re-maximizes. Candidates are the vertices
// outside CS when the call starts; each is inserted at most once, and
// vertices evicted during the call are not candidates.
inline void savp_perturb(SolutionState& s, ScoreStrategy strategy, std::uint32_t num, const PerturbConfig& cfg,
                         Rng& rng) {
  if (num < 1) throw std::invalid_argument("savp_perturb: num must be >= 1");
  std::unordered_set<Vertex> barred;  // inserted or evicted so far
  for (std::uint32_t k = 0; k < num; ++k) {
    const std::size_t pool = s.outside_count();
    if (pool == 0) break;
    Vertex best = VertexSet::kNone;
    auto consider = [&](Vertex v) {
      if (barred.count(v)) return false;
      if (best == VertexSet::kNone || detail::better(s, strategy, v, best)) best = v;
      return true;
    };
    if (pool <= cfg.bms_t + barred.size()) {
      for (std::size_t i = 0; i < pool; ++i) consider(s.outside_at(i));
    } else {
      // Sampling with replacement; barred draws are retried.
      std::uint32_t taken = 0;
      for (std::uint64_t tries = 0; taken < cfg.bms_t && tries < 4ull * cfg.bms_t; ++tries)
        taken += consider(s.outside_at(rng.below(pool)));
    }
    if (best == VertexSet::kNone) break;
    for (Vertex u : s.insert_with_removal(best)) barred.insert(u);
    barred.insert(best);
  }
  s.maximize();
}

}  // namespace dynls

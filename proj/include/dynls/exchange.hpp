#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "deadline.hpp"
#include "rng.hpp"
#include "solution_state.hpp"

namespace dynls {

// Vertex-exchange neighborhoods. Every pass applies at most one strictly
// improving move and reports whether it did.

// (omega,1)-swap: first non-solution vertex (ascending id) whose insertion,
// evicting its solution neighbors, gains weight.
inline bool omega_one_pass(SolutionState& s) {
  if (s.improving_count() == 0) return false;
  const auto n = static_cast<Vertex>(s.graph().num_vertices());
  for (Vertex v = 0; v < n; ++v)
    if (!s.in_solution(v) && s.loss(v) < 0) {
      s.insert_with_removal(v);
      return true;
    }
  return false;
}

namespace detail {

// Non-solution neighbors of v whose tightness equals `t`.
inline std::vector<Vertex> tight_neighbors(const SolutionState& s, Vertex v, std::uint32_t t) {
  std::vector<Vertex> out;
  for (Vertex u : s.graph().neighbors(v))
    if (!s.in_solution(u) && s.tightness(u) == t) out.push_back(u);
  return out;
}

inline void sort_heaviest_first(const Graph& g, std::vector<Vertex>& vs) {
  std::sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) {
    return g.weight(a) != g.weight(b) ? g.weight(a) > g.weight(b) : a < b;
  });
}

}  // namespace detail

// Replace a solution vertex v by two non-adjacent tightness-1 neighbors of
// larger combined weight.
inline bool two_improvement_pass(SolutionState& s) {
  const Graph& g = s.graph();
  const auto n = static_cast<Vertex>(g.num_vertices());
  for (Vertex v = 0; v < n; ++v) {
    if (!s.in_solution(v) || g.degree(v) < 2) continue;
    auto cand = detail::tight_neighbors(s, v, 1);
    for (std::size_t i = 0; i < cand.size(); ++i)
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        Vertex a = cand[i], b = cand[j];
        if (g.weight(a) + g.weight(b) <= g.weight(v) || g.adjacent(a, b)) continue;
        s.remove(v);
        s.add(a);
        s.add(b);
        return true;
      }
  }
  return false;
}

// Cap on each candidate list of a (v; x, y)-exchange.
inline constexpr std::size_t kExchangeCandidateCap = 16;

// (v; x, y)-exchange: an independent S within N(v) holding exactly x
// tightness-1 and y tightness-2 vertices replaces N(S) & CS when that gains
// weight. Candidates are tried heaviest first; the first gaining S is applied
// and the solution re-maximized.
inline bool xy_exchange(SolutionState& s, Vertex v, std::uint32_t x, std::uint32_t y) {
  if (!s.in_solution(v)) throw std::invalid_argument("xy_exchange: vertex " + std::to_string(v) + " not in solution");
  if (x + y == 0) throw std::invalid_argument("xy_exchange: x + y must be >= 1");
  const Graph& g = s.graph();

  auto ones = detail::tight_neighbors(s, v, 1);
  if (ones.size() < x) return false;
  std::vector<Vertex> twos;
  if (y > 0) {
    twos = detail::tight_neighbors(s, v, 2);
    if (twos.size() < y) return false;
  }
  detail::sort_heaviest_first(g, ones);
  detail::sort_heaviest_first(g, twos);
  if (ones.size() > kExchangeCandidateCap) ones.resize(kExchangeCandidateCap);
  if (twos.size() > kExchangeCandidateCap) twos.resize(kExchangeCandidateCap);

  // The solution neighbor other than v of each tightness-2 candidate.
  std::vector<Vertex> partner(twos.size(), VertexSet::kNone);
  for (std::size_t i = 0; i < twos.size(); ++i)
    for (Vertex u : g.neighbors(twos[i]))
      if (u != v && s.in_solution(u)) {
        partner[i] = u;
        break;
      }

  // Suffix sums of the heaviest remaining picks bound the achievable weight.
  auto best_rest = [&](const std::vector<Vertex>& list, std::size_t from, std::uint32_t k) {
    Weight w = 0;
    for (std::size_t i = from; i < list.size() && k > 0; ++i, --k) w += g.weight(list[i]);
    return w;
  };

  std::vector<Vertex> chosen;
  std::vector<Vertex> evicted;  // partners of chosen tightness-2 vertices
  const Weight wv = g.weight(v);
  Weight chosen_weight = 0;
  Weight evicted_weight = 0;

  auto compatible = [&](Vertex c) {
    for (Vertex o : chosen)
      if (g.adjacent(c, o)) return false;
    return true;
  };

  std::function<bool(std::size_t, std::uint32_t)> pick_twos = [&](std::size_t from, std::uint32_t left) -> bool {
    if (left == 0) return chosen_weight - wv - evicted_weight > 0;
    for (std::size_t i = from; i + left <= twos.size(); ++i) {
      if (chosen_weight + best_rest(twos, i, left) - wv - evicted_weight <= 0) return false;
      Vertex c = twos[i];
      if (!compatible(c)) continue;
      bool fresh = std::find(evicted.begin(), evicted.end(), partner[i]) == evicted.end();
      chosen.push_back(c);
      chosen_weight += g.weight(c);
      if (fresh) {
        evicted.push_back(partner[i]);
        evicted_weight += g.weight(partner[i]);
      }
      if (pick_twos(i + 1, left - 1)) return true;
      if (fresh) {
        evicted.pop_back();
        evicted_weight -= g.weight(partner[i]);
      }
      chosen_weight -= g.weight(c);
      chosen.pop_back();
    }
    return false;
  };

  std::function<bool(std::size_t, std::uint32_t)> pick_ones = [&](std::size_t from, std::uint32_t left) -> bool {
    if (left == 0) return pick_twos(0, y);
    for (std::size_t i = from; i + left <= ones.size(); ++i) {
      if (chosen_weight + best_rest(ones, i, left) + best_rest(twos, 0, y) - wv <= 0) return false;
      Vertex c = ones[i];
      if (!compatible(c)) continue;
      chosen.push_back(c);
      chosen_weight += g.weight(c);
      if (pick_ones(i + 1, left - 1)) return true;
      chosen_weight -= g.weight(c);
      chosen.pop_back();
    }
    return false;
  };

  if (!pick_ones(0, x)) return false;
  s.remove(v);
  for (Vertex u : evicted) s.remove(u);
  for (Vertex c : chosen) s.add(c);
  s.maximize();
  return true;
}

inline bool xy_exchange_pass(SolutionState& s, std::uint32_t x, std::uint32_t y) {
  const auto n = static_cast<Vertex>(s.graph().num_vertices());
  for (Vertex v = 0; v < n; ++v)
    if (s.in_solution(v) && xy_exchange(s, v, x, y)) return true;
  return false;
}

// (x, 0)-exchange with unbounded x: greedily collect independent tightness-1
// neighbors of v, heaviest first, and swap them in if they outweigh v.
inline bool x0_exchange(SolutionState& s, Vertex v) {
  if (!s.in_solution(v)) throw std::invalid_argument("x0_exchange: vertex " + std::to_string(v) + " not in solution");
  const Graph& g = s.graph();
  auto ones = detail::tight_neighbors(s, v, 1);
  if (ones.empty()) return false;
  detail::sort_heaviest_first(g, ones);
  std::vector<Vertex> chosen;
  Weight total = 0;
  for (Vertex c : ones) {
    bool ok = true;
    for (Vertex o : chosen)
      if (g.adjacent(c, o)) {
        ok = false;
        break;
      }
    if (ok) {
      chosen.push_back(c);
      total += g.weight(c);
    }
  }
  if (total <= g.weight(v)) return false;
  s.remove(v);
  for (Vertex c : chosen) s.add(c);
  return true;
}

inline bool x0_pass(SolutionState& s) {
  const auto n = static_cast<Vertex>(s.graph().num_vertices());
  for (Vertex v = 0; v < n; ++v)
    if (s.in_solution(v) && x0_exchange(s, v)) return true;
  return false;
}

// (2,3)-swap: solution vertices u, v sharing a tightness-2 neighbor w are
// replaced by {w, a, b}, a a tightness-1 neighbor of u and b of v.
inline bool two_three_pass(SolutionState& s) {
  const Graph& g = s.graph();
  const auto n = static_cast<Vertex>(g.num_vertices());
  for (Vertex w = 0; w < n; ++w) {
    if (s.in_solution(w) || s.tightness(w) != 2) continue;
    Vertex u = VertexSet::kNone, v = VertexSet::kNone;
    for (Vertex z : g.neighbors(w))
      if (s.in_solution(z)) (u == VertexSet::kNone ? u : v) = z;
    const Weight target = g.weight(u) + g.weight(v) - g.weight(w);  // need sigma(a) + sigma(b) > target
    auto side = [&](Vertex c) {
      auto list = detail::tight_neighbors(s, c, 1);
      std::erase_if(list, [&](Vertex a) { return g.adjacent(a, w); });
      detail::sort_heaviest_first(g, list);
      return list;
    };
    auto as = side(u);
    if (as.empty()) continue;
    auto bs = side(v);
    if (bs.empty()) continue;
    for (Vertex a : as) {
      if (g.weight(a) + g.weight(bs.front()) <= target) break;
      for (Vertex b : bs) {
        if (g.weight(a) + g.weight(b) <= target) break;
        if (g.adjacent(a, b)) continue;
        s.remove(u);
        s.remove(v);
        s.add(w);
        s.add(a);
        s.add(b);
        return true;
      }
    }
  }
  return false;
}

using Neighborhood = std::function<bool(SolutionState&)>;

// Variable neighborhood descent: any improvement restarts at the first
// neighborhood; each exhausted neighborhood is followed by maximize().
// Returns whether the solution weight grew.
inline bool run_vnd(SolutionState& s, std::initializer_list<Neighborhood> hoods,
                    const Deadline& deadline = Deadline::never()) {
  const Weight start = s.weight();
  const std::vector<Neighborhood> list(hoods);
  std::size_t k = 0;
  std::uint64_t steps = 0;
  while (k < list.size()) {
    if ((++steps & 4095) == 0 && deadline.expired()) break;
    if (list[k](s)) {
      k = 0;
      continue;
    }
    if (s.maximize() > 0) {
      k = 0;
      continue;
    }
    ++k;
  }
  return s.weight() > start;
}

// A: (omega,1)-swap, 2-improvement, (1,1)-exchange.
inline bool run_module_a(SolutionState& s, const Deadline& deadline = Deadline::never()) {
  return run_vnd(s, {omega_one_pass, two_improvement_pass, [](SolutionState& st) { return xy_exchange_pass(st, 1, 1); }},
                 deadline);
}

// B: (2,3)-swap, (x,0)-exchange.
inline bool run_module_b(SolutionState& s, const Deadline& deadline = Deadline::never()) {
  return run_vnd(s, {two_three_pass, x0_pass}, deadline);
}

struct EmModule {
  std::uint32_t x;
  std::uint32_t y;
  friend bool operator==(const EmModule&, const EmModule&) = default;
};

inline constexpr std::array<EmModule, 6> kEmModules = {
    EmModule{1, 1}, EmModule{1, 2}, EmModule{2, 1}, EmModule{2, 2}, EmModule{3, 1}, EmModule{3, 2}};

inline std::size_t module_index(EmModule m) {
  for (std::size_t i = 0; i < kEmModules.size(); ++i)
    if (kEmModules[i] == m) return i;
  throw std::invalid_argument("unknown exchange module");
}

// EM(x, y): (omega,1)-swap, (x, y)-exchange.
inline bool run_module_em(SolutionState& s, EmModule m, const Deadline& deadline = Deadline::never()) {
  module_index(m);
  return run_vnd(s, {omega_one_pass, [m](SolutionState& st) { return xy_exchange_pass(st, m.x, m.y); }}, deadline);
}

enum class RoundOutcome : std::uint8_t {
  kNone,               // -1
  kImprovedMovesOnly,  // +1: the round improved CS, the module did not
  kImprovedCurrent,    // +2: the module improved CS
  kNewGlobalBest,      // +3: the module produced a new best solution
};

struct RewardTable {
  std::array<std::int64_t, kEmModules.size()> re;
  std::int64_t sum_re;

  RewardTable() { reset(); }
  void reset() {
    re.fill(1);
    sum_re = static_cast<std::int64_t>(kEmModules.size());
  }
  static constexpr std::int64_t initial_sum() { return static_cast<std::int64_t>(kEmModules.size()); }

  // Selection probability of module i.
  double probability(std::size_t i) const {
    std::int64_t total = 0;
    for (auto r : re) total += r;
    return static_cast<double>(re[i]) / static_cast<double>(total);
  }
};

// Roulette wheel over Re(a).
inline EmModule select_module(const RewardTable& rt, Rng& rng) {
  std::int64_t total = 0;
  for (auto r : rt.re) total += r;
  auto ticket = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(total)));
  for (std::size_t i = 0; i < rt.re.size(); ++i) {
    if (ticket < rt.re[i]) return kEmModules[i];
    ticket -= rt.re[i];
  }
  return kEmModules.back();
}

inline void update_reward(RewardTable& rt, EmModule a, RoundOutcome outcome) {
  auto& r = rt.re[module_index(a)];
  switch (outcome) {
    case RoundOutcome::kNewGlobalBest:
      r += 3;
      rt.sum_re += 3;
      break;
    case RoundOutcome::kImprovedCurrent:
      r += 2;
      rt.sum_re += 2;
      break;
    case RoundOutcome::kImprovedMovesOnly:
      r += 1;
      rt.sum_re += 1;
      break;
    case RoundOutcome::kNone:
      r = std::max<std::int64_t>(1, r - 1);
      rt.sum_re -= 1;
      break;
  }
}

}  // namespace dynls

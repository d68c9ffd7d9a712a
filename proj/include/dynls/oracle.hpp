#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "vertex_set.hpp"

namespace dynls {

struct ExactResult {
  VertexSet set;
  Weight weight = 0;
};

namespace detail {

using Mask = std::uint64_t;

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    for (Vertex u : g.neighbors(v)) adj[v] |= Mask{1} << u;
  return adj;
}

// Lexicographic order of the ascending member lists.
inline bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  const Mask diff = a ^ b;
  const Mask low = diff & (~diff + 1);
  if (a & low) return (b & ~(low | (low - 1))) != 0;  // b continues past the split
  return (a & ~(low | (low - 1))) == 0;
}

inline ExactResult to_result(const Graph& g, Mask m, Weight w) {
  ExactResult r{VertexSet(g.num_vertices()), w};
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (m >> v & 1) r.set.insert(v);
  return r;
}

class BranchAndBound {
 public:
  explicit BranchAndBound(const Graph& g) : g_(g), adj_(adjacency_masks(g)) {}

  ExactResult run() {
    const Mask all = g_.num_vertices() == 64 ? ~Mask{0} : (Mask{1} << g_.num_vertices()) - 1;
    recurse(all, 0, 0);
    return to_result(g_, best_mask_, best_weight_);
  }

 private:
  Weight sum(Mask m) const {
    Weight s = 0;
    for (; m; m &= m - 1) s += g_.weight(static_cast<Vertex>(std::countr_zero(m)));
    return s;
  }

  void offer(Mask m, Weight w) {
    if (w > best_weight_ || (w == best_weight_ && lex_less(m, best_mask_))) {
      best_weight_ = w;
      best_mask_ = m;
    }
  }

  void recurse(Mask cand, Mask chosen, Weight w) {
    if (w + sum(cand) < best_weight_) return;
    // Highest-degree candidate within the candidate set.
    int pick = -1;
    int pick_deg = 0;
    for (Mask m = cand; m; m &= m - 1) {
      int v = std::countr_zero(m);
      int d = std::popcount(adj_[v] & cand);
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }
    if (pick < 0) {  // candidates are pairwise non-adjacent: take them all
      offer(chosen | cand, w + sum(cand));
      return;
    }
    const Mask bit = Mask{1} << pick;
    recurse(cand & ~bit & ~adj_[pick], chosen | bit, w + g_.weight(static_cast<Vertex>(pick)));
    recurse(cand & ~bit, chosen, w);
  }

  const Graph& g_;
  std::vector<Mask> adj_;
  Mask best_mask_ = 0;
  Weight best_weight_ = 0;
};

}  // namespace detail

inline constexpr std::size_t kBruteForceLimit = 32;
inline constexpr std::size_t kExhaustiveLimit = 20;

// Exact MWIS by branch and bound. Among optimal sets the lexicographically
// smallest (ascending member list) is returned.
inline ExactResult brute_force_mwis(const Graph& g) {
  if (g.num_vertices() > kBruteForceLimit)
    throw std::invalid_argument("brute_force_mwis: at most 32 vertices supported");
  return detail::BranchAndBound(g).run();
}

// Enumerates all 2^n subsets. Same tie rule as brute_force_mwis.
inline ExactResult exhaustive_mwis(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kExhaustiveLimit) throw std::invalid_argument("exhaustive_mwis: at most 20 vertices supported");
  const auto adj = detail::adjacency_masks(g);
  detail::Mask best_mask = 0;
  Weight best = 0;
  for (detail::Mask m = 0; m < (detail::Mask{1} << n); ++m) {
    bool independent = true;
    Weight w = 0;
    for (std::size_t v = 0; v < n && independent; ++v)
      if (m >> v & 1) {
        independent = (adj[v] & m) == 0;
        w += g.weight(static_cast<Vertex>(v));
      }
    if (!independent) continue;
    if (w > best || (w == best && detail::lex_less(m, best_mask))) {
      best = w;
      best_mask = m;
    }
  }
  return detail::to_result(g, best_mask, best);
}

}  // namespace dynls

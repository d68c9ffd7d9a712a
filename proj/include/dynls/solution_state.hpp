#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "types.hpp"
#include "vertex_set.hpp"

namespace dynls {

// Current solution CS over a fixed graph, with incrementally maintained
// tightness, loss and free pool, plus the visit statistics (freq, age,
// change) consumed by perturbation and region selection.
//
// The graph must outlive the state.
class SolutionState {
 public:
  SolutionState(const Graph& g, const VertexSet& initial)
      : g_(&g),
        cs_(g.num_vertices()),
        free_(g.num_vertices()),
        tightness_(g.num_vertices(), 0),
        nbr_weight_(g.num_vertices(), 0),
        negative_(g.num_vertices(), 0),
        outside_pos_(g.num_vertices(), 0),
        freq_(g.num_vertices(), 0),
        last_visit_(g.num_vertices(), 0),
        change_(g.num_vertices(), 0) {
    if (initial.universe() != g.num_vertices())
      throw std::invalid_argument("SolutionState: initial set universe does not match graph");
    if (!g.is_independent(initial)) throw std::invalid_argument("SolutionState: initial set is not independent");
    outside_.reserve(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      outside_pos_[v] = outside_.size();
      outside_.push_back(v);
    }
    for (Vertex v : initial) {
      cs_.insert(v);
      weight_ += g.weight(v);
      drop_outside(v);
      for (Vertex u : g.neighbors(v)) {
        ++tightness_[u];
        nbr_weight_[u] += g.weight(v);
      }
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (!cs_.contains(v) && tightness_[v] == 0) free_.insert(v);
      refresh_negative(v);
    }
  }

  const Graph& graph() const { return *g_; }
  const VertexSet& solution() const { return cs_; }
  Weight weight() const { return weight_; }
  bool in_solution(Vertex v) const { return cs_.contains(v); }

  // Number of CS neighbors. Also maintained for CS members.
  std::uint32_t tightness(Vertex v) const { return tightness_[v]; }
  // sigma(N(v) & CS) - sigma(v); negative means inserting v gains weight.
  Weight loss(Vertex v) const { return nbr_weight_[v] - g_->weight(v); }
  const VertexSet& free_pool() const { return free_; }

  std::uint64_t freq(Vertex v) const { return freq_[v]; }
  std::uint64_t age(Vertex v) const { return iter_ - last_visit_[v]; }
  std::int64_t change(Vertex v) const { return change_[v]; }
  std::uint64_t iter() const { return iter_; }
  std::uint64_t uiter() const { return uiter_; }
  void reset_stagnation() { uiter_ = 0; }

  // Non-solution vertices, in no particular order; for uniform sampling.
  std::size_t outside_count() const { return outside_.size(); }
  Vertex outside_at(std::size_t i) const { return outside_[i]; }

  // Count of non-solution vertices with negative loss.
  std::size_t improving_count() const { return negative_count_; }

  void add(Vertex v) {
    if (cs_.contains(v)) throw std::invalid_argument("add: vertex " + std::to_string(v) + " already in solution");
    if (tightness_[v] != 0) throw std::invalid_argument("add: vertex " + std::to_string(v) + " is not free");
    cs_.insert(v);
    free_.erase(v);
    drop_outside(v);
    weight_ += g_->weight(v);
    set_negative(v, false);
    for (Vertex u : g_->neighbors(v)) {
      if (tightness_[u]++ == 0) free_.erase(u);
      nbr_weight_[u] += g_->weight(v);
      refresh_negative(u);
    }
    visit(v, +1);
  }

  void remove(Vertex v) {
    if (!cs_.erase(v)) throw std::invalid_argument("remove: vertex " + std::to_string(v) + " not in solution");
    weight_ -= g_->weight(v);
    outside_pos_[v] = outside_.size();
    outside_.push_back(v);
    for (Vertex u : g_->neighbors(v)) {
      if (--tightness_[u] == 0 && !cs_.contains(u)) free_.insert(u);
      nbr_weight_[u] -= g_->weight(v);
      refresh_negative(u);
    }
    if (tightness_[v] == 0) free_.insert(v);
    refresh_negative(v);
    visit(v, -1);
  }

  // Evicts the CS neighbors of v, then adds v. Returns the evicted set.
  std::vector<Vertex> insert_with_removal(Vertex v) {
    if (cs_.contains(v))
      throw std::invalid_argument("insert_with_removal: vertex " + std::to_string(v) + " already in solution");
    std::vector<Vertex> removed;
    if (tightness_[v] > 0) {
      for (Vertex u : g_->neighbors(v))
        if (cs_.contains(u)) removed.push_back(u);
      for (Vertex u : removed) remove(u);
    }
    add(v);
    return removed;
  }

  // Adds free vertices by descending weight (ties: ascending id) until none
  // remain. Returns how many were added.
  std::size_t maximize() {
    if (free_.empty()) return 0;
    auto order = free_.to_vector();
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      Weight wa = g_->weight(a), wb = g_->weight(b);
      return wa != wb ? wa > wb : a < b;
    });
    std::size_t added = 0;
    for (Vertex v : order)
      if (tightness_[v] == 0 && !cs_.contains(v)) {
        add(v);
        ++added;
      }
    return added;
  }

  // Closes one search iteration.
  void tick(bool improved) {
    ++iter_;
    uiter_ = improved ? 0 : uiter_ + 1;
  }

  // CS := target. target must be independent.
  void assign(const VertexSet& target) {
    std::vector<Vertex> drop;
    for (Vertex v : cs_)
      if (!target.contains(v)) drop.push_back(v);
    for (Vertex v : drop) remove(v);
    for (Vertex v : target)
      if (!cs_.contains(v)) add(v);
  }

  // Recomputes every derived field from CS and compares.
  bool consistent() const {
    const Graph& g = *g_;
    if (!g.is_independent(cs_)) return false;
    Weight total = 0;
    std::size_t negatives = 0;
    for (Vertex v : cs_) total += g.weight(v);
    if (total != weight_) return false;
    if (outside_.size() + cs_.size() != g.num_vertices()) return false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      std::uint32_t t = 0;
      Weight nw = 0;
      for (Vertex u : g.neighbors(v))
        if (cs_.contains(u)) {
          ++t;
          nw += g.weight(u);
        }
      if (t != tightness_[v] || nw != nbr_weight_[v]) return false;
      bool outside = !cs_.contains(v);
      if (free_.contains(v) != (outside && t == 0)) return false;
      if (outside && (outside_pos_[v] >= outside_.size() || outside_[outside_pos_[v]] != v)) return false;
      bool neg = outside && nw < g.weight(v);
      if ((negative_[v] != 0) != neg) return false;
      negatives += neg;
    }
    return negatives == negative_count_;
  }

 private:
  void visit(Vertex v, int delta) {
    ++freq_[v];
    last_visit_[v] = iter_;
    change_[v] += delta;
  }

  void drop_outside(Vertex v) {
    std::size_t pos = outside_pos_[v];
    Vertex last = outside_.back();
    outside_[pos] = last;
    outside_pos_[last] = pos;
    outside_.pop_back();
  }

  void refresh_negative(Vertex v) { set_negative(v, !cs_.contains(v) && nbr_weight_[v] < g_->weight(v)); }

  void set_negative(Vertex v, bool value) {
    if ((negative_[v] != 0) == value) return;
    negative_[v] = value;
    if (value) {
      ++negative_count_;
    } else {
      --negative_count_;
    }
  }

  const Graph* g_;
  VertexSet cs_;
  VertexSet free_;
  Weight weight_ = 0;
  std::vector<std::uint32_t> tightness_;
  std::vector<Weight> nbr_weight_;
  std::vector<unsigned char> negative_;
  std::size_t negative_count_ = 0;
  std::vector<Vertex> outside_;
  std::vector<std::size_t> outside_pos_;
  std::vector<std::uint64_t> freq_;
  std::vector<std::uint64_t> last_visit_;
  std::vector<std::int64_t> change_;
  std::uint64_t iter_ = 0;
  std::uint64_t uiter_ = 0;
};

}  // namespace dynls

#pragma once

#include <chrono>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <vector>

#include "deadline.hpp"
#include "graph.hpp"
#include "types.hpp"
#include "vertex_set.hpp"

namespace dynls {

// Weighted reduction rules, applied in this order at each vertex.
enum class Rule : std::uint8_t {
  kDegreeZero = 0,    // isolated vertex is taken
  kDegreeOne = 1,     // pendant vertex is taken, or folded into its neighbor
  kNeighborhood = 2,  // sigma(v) >= sigma(N(v)): v is taken
  kDomination = 3,    // N[u] in N[v], sigma(v) <= sigma(u): v is dropped
  kFold = 4,          // degree-two fold u - v - w into one vertex
  kTieBreak = 5,      // not a reduction; used by the constructive heuristic
};

class RuleSet {
 public:
  constexpr RuleSet() = default;
  static constexpr RuleSet all() { return RuleSet(0x1F); }
  static constexpr RuleSet none() { return RuleSet(0); }
  // Degree-zero, degree-one and neighborhood removal.
  static constexpr RuleSet basic() { return RuleSet(0x07); }

  constexpr RuleSet with(Rule r) const { return RuleSet(bits_ | bit(r)); }
  constexpr bool has(Rule r) const { return (bits_ & bit(r)) != 0; }

 private:
  constexpr explicit RuleSet(std::uint8_t bits) : bits_(bits) {}
  static constexpr std::uint8_t bit(Rule r) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(r)); }
  std::uint8_t bits_ = 0x1F;
};

// One entry of the reconstruction stack. Vertex ids live in the original id
// space; a fold reuses the middle vertex id for the merged vertex.
struct TraceStep {
  enum class Kind : std::uint8_t {
    kTake,         // v is in the solution
    kExclude,      // v is not in the solution
    kConditional,  // v is in the solution iff u is not
    kFold,         // merged v in -> {u, w}; merged v out -> {v}
  };
  Kind kind;
  Rule rule;
  Vertex v;
  Vertex u = VertexSet::kNone;
  Vertex w = VertexSet::kNone;
};

struct Kernel {
  Graph graph;
  Weight offset = 0;
  std::vector<TraceStep> trace;
  std::vector<Vertex> orig_map;  // kernel vertex -> original id space
  std::size_t original_vertices = 0;
};

namespace detail {

// Mutable graph with lazily compacted adjacency, used to apply reductions.
class Reducer {
 public:
  explicit Reducer(const Graph& g)
      : alive_(g.num_vertices(), 1),
        queued_(g.num_vertices(), 0),
        stamp_(g.num_vertices(), 0),
        stamp2_(g.num_vertices(), 0),
        weight_(g.weights()),
        degree_(g.num_vertices()),
        adj_(g.num_vertices()),
        live_(g.num_vertices()) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      auto nb = g.neighbors(v);
      adj_[v].assign(nb.begin(), nb.end());
      degree_[v] = nb.size();
      push(v);
    }
  }

  std::size_t num_vertices() const { return alive_.size(); }
  std::size_t live_count() const { return live_; }
  bool alive(Vertex v) const { return alive_[v] != 0; }
  Weight weight(Vertex v) const { return weight_[v]; }
  std::size_t degree(Vertex v) const { return degree_[v]; }
  Weight offset() const { return offset_; }
  const std::vector<TraceStep>& trace() const { return trace_; }
  std::vector<TraceStep>& trace() { return trace_; }

  // When enabled, every vertex whose local situation changes is logged.
  void log_touched(bool on) { log_touched_ = on; }
  std::vector<Vertex>& touched() { return touched_; }

  const std::vector<Vertex>& live_neighbors(Vertex v) {
    auto& list = adj_[v];
    if (list.size() != degree_[v]) {
      std::erase_if(list, [&](Vertex u) { return !alive_[u]; });
    }
    return list;
  }

  Weight neighborhood_weight(Vertex v) {
    Weight s = 0;
    for (Vertex u : live_neighbors(v)) s += weight_[u];
    return s;
  }

  // Applies rules until the queue drains or the deadline passes.
  void run(RuleSet rules, const Deadline& deadline) {
    while (!queue_.empty()) {
      if (deadline.expired()) return;
      Vertex v = queue_.front();
      queue_.pop_front();
      queued_[v] = 0;
      if (!alive_[v]) continue;
      if (apply_first(v, rules) && alive_[v]) push(v);
    }
  }

  void take(Vertex v, Rule rule) {
    trace_.push_back({TraceStep::Kind::kTake, rule, v});
    offset_ += weight_[v];
    std::vector<Vertex> nb = live_neighbors(v);
    for (Vertex u : nb) kill(u);
    kill(v);
  }

  // Compacts the surviving vertices into a kernel.
  Kernel finish(std::size_t original_vertices) {
    Kernel k;
    k.offset = offset_;
    k.trace = std::move(trace_);
    k.original_vertices = original_vertices;
    std::vector<Vertex> to_kernel(num_vertices(), VertexSet::kNone);
    for (Vertex v = 0; v < num_vertices(); ++v)
      if (alive_[v]) {
        to_kernel[v] = static_cast<Vertex>(k.orig_map.size());
        k.orig_map.push_back(v);
      }
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Weight> weights;
    for (Vertex kv = 0; kv < k.orig_map.size(); ++kv) {
      Vertex v = k.orig_map[kv];
      weights.push_back(weight_[v]);
      for (Vertex u : live_neighbors(v))
        if (to_kernel[u] > kv) edges.emplace_back(kv, to_kernel[u]);
    }
    k.graph = build_graph(k.orig_map.size(), edges, weights);
    return k;
  }

 private:
  void push(Vertex v) {
    if (log_touched_) touched_.push_back(v);
    if (queued_[v]) return;
    queued_[v] = 1;
    queue_.push_back(v);
  }

  void kill(Vertex v) {
    if (!alive_[v]) return;
    alive_[v] = 0;
    --live_;
    for (Vertex u : adj_[v])
      if (alive_[u]) {
        --degree_[u];
        push(u);
      }
    adj_[v].clear();
    degree_[v] = 0;
  }

  void touch_around(Vertex v) {
    push(v);
    for (Vertex u : live_neighbors(v)) push(u);
  }

  bool apply_first(Vertex v, RuleSet rules) {
    const std::size_t d = degree_[v];
    if (rules.has(Rule::kDegreeZero) && d == 0) {
      take(v, Rule::kDegreeZero);
      return true;
    }
    if (rules.has(Rule::kDegreeOne) && d == 1) {
      Vertex u = live_neighbors(v).front();
      if (weight_[v] >= weight_[u]) {
        take(v, Rule::kDegreeOne);
      } else {
        trace_.push_back({TraceStep::Kind::kConditional, Rule::kDegreeOne, v, u});
        offset_ += weight_[v];
        weight_[u] -= weight_[v];
        kill(v);
        touch_around(u);
      }
      return true;
    }
    if (rules.has(Rule::kNeighborhood) && weight_[v] >= neighborhood_weight(v)) {
      take(v, Rule::kNeighborhood);
      return true;
    }
    if (rules.has(Rule::kDomination) && apply_domination(v)) return true;
    if (rules.has(Rule::kFold) && d == 2 && apply_fold(v)) return true;
    return false;
  }

  // Checks v in both roles: dominated by a neighbor, or dominating one.
  bool apply_domination(Vertex v) {
    const auto nv = live_neighbors(v);  // copy: kill() below may invalidate
    ++epoch_;
    stamp_[v] = epoch_;
    for (Vertex u : nv) stamp_[u] = epoch_;
    for (Vertex u : nv) {
      if (degree_[u] > degree_[v] || weight_[v] > weight_[u]) continue;
      bool subset = true;
      for (Vertex x : live_neighbors(u))
        if (stamp_[x] != epoch_) {
          subset = false;
          break;
        }
      if (subset) {
        trace_.push_back({TraceStep::Kind::kExclude, Rule::kDomination, v});
        kill(v);
        return true;
      }
    }
    for (Vertex u : nv) {
      if (degree_[v] > degree_[u] || weight_[u] > weight_[v]) continue;
      ++epoch2_;
      stamp2_[u] = epoch2_;
      for (Vertex x : live_neighbors(u)) stamp2_[x] = epoch2_;
      bool subset = true;
      for (Vertex x : nv)
        if (stamp2_[x] != epoch2_) {
          subset = false;
          break;
        }
      if (subset) {
        trace_.push_back({TraceStep::Kind::kExclude, Rule::kDomination, u});
        kill(u);
        return true;
      }
    }
    return false;
  }

  bool apply_fold(Vertex v) {
    const auto& nv = live_neighbors(v);
    Vertex u = nv[0], w = nv[1];
    const Weight wv = weight_[v], wu = weight_[u], ww = weight_[w];
    if (wv < std::max(wu, ww) || wv >= wu + ww) return false;
    for (Vertex x : live_neighbors(u))
      if (x == w) return false;

    ++epoch_;
    stamp_[v] = epoch_;
    std::vector<Vertex> merged;
    for (Vertex side : {u, w})
      for (Vertex x : live_neighbors(side))
        if (stamp_[x] != epoch_) {
          stamp_[x] = epoch_;
          merged.push_back(x);
        }
    trace_.push_back({TraceStep::Kind::kFold, Rule::kFold, v, u, w});
    offset_ += wv;
    kill(u);
    kill(w);
    weight_[v] = wu + ww - wv;
    adj_[v] = merged;
    degree_[v] = merged.size();
    for (Vertex x : merged) {
      adj_[x].push_back(v);
      ++degree_[x];
      push(x);
    }
    push(v);
    return true;
  }

  std::vector<unsigned char> alive_;
  std::vector<unsigned char> queued_;
  std::vector<std::uint64_t> stamp_;
  std::vector<std::uint64_t> stamp2_;
  std::uint64_t epoch_ = 0;
  std::uint64_t epoch2_ = 0;
  std::vector<Weight> weight_;
  std::vector<std::size_t> degree_;
  std::vector<std::vector<Vertex>> adj_;
  std::deque<Vertex> queue_;
  std::vector<TraceStep> trace_;
  std::vector<Vertex> touched_;
  bool log_touched_ = false;
  Weight offset_ = 0;
  std::size_t live_;
};

// Replays the trace backwards over a membership array in the original id space.
inline void replay_trace(const std::vector<TraceStep>& trace, std::vector<unsigned char>& in) {
  for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
    switch (it->kind) {
      case TraceStep::Kind::kTake:
        in[it->v] = 1;
        break;
      case TraceStep::Kind::kExclude:
        in[it->v] = 0;
        break;
      case TraceStep::Kind::kConditional:
        in[it->v] = in[it->u] ? 0 : 1;
        break;
      case TraceStep::Kind::kFold:
        if (in[it->v]) {
          in[it->v] = 0;
          in[it->u] = in[it->w] = 1;
        } else {
          in[it->v] = 1;
          in[it->u] = in[it->w] = 0;
        }
        break;
    }
  }
}

}  // namespace detail

// Applies the enabled rules to a fixpoint or until time_cap seconds pass.
// A non-positive cap returns the input unchanged.
inline Kernel reduce_graph(const Graph& g, double time_cap, RuleSet rules = RuleSet::all()) {
  detail::Reducer r(g);
  if (time_cap > 0) r.run(rules, Deadline::after(time_cap));
  return r.finish(g.num_vertices());
}

// Maps an independent set of the kernel back to the original graph.
inline VertexSet lift_solution(const Kernel& k, const VertexSet& kernel_solution) {
  if (kernel_solution.universe() != k.graph.num_vertices())
    throw std::invalid_argument("lift_solution: solution universe does not match kernel");
  if (!k.graph.is_independent(kernel_solution))
    throw std::invalid_argument("lift_solution: solution is not independent in the kernel");
  std::vector<unsigned char> in(k.original_vertices, 0);
  for (Vertex kv : kernel_solution) in[k.orig_map[kv]] = 1;
  detail::replay_trace(k.trace, in);
  VertexSet out(k.original_vertices);
  for (Vertex v = 0; v < in.size(); ++v)
    if (in[v]) out.insert(v);
  return out;
}

}  // namespace dynls

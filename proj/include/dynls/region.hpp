#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "sadpls.hpp"
#include "search.hpp"
#include "solution_state.hpp"
#include "vertex_set.hpp"

namespace dynls {

// Subgraph induced by the radius-r ball around `center`, minus the outermost
// vertices that touch a solution vertex just outside the ball. No vertex of
// the local graph is adjacent to a solution vertex outside it, so its
// solution part can be swapped for any independent set of the local graph.
struct LocalGraph {
  Graph graph;
  std::vector<Vertex> to_global;  // ascending
  Vertex center = 0;
  int radius = 0;
  VertexSet solu1;  // CS inside the local graph, local ids

  Vertex to_local(Vertex global) const {
    auto it = std::lower_bound(to_global.begin(), to_global.end(), global);
    if (it == to_global.end() || *it != global) return VertexSet::kNone;
    return static_cast<Vertex>(it - to_global.begin());
  }
};

// Builds local graphs around successive centers, reusing O(n) scratch space.
class LocalGraphBuilder {
 public:
  explicit LocalGraphBuilder(const Graph& g) : g_(&g), dist_(g.num_vertices(), -1), local_(g.num_vertices(), 0) {}

  LocalGraph build(const VertexSet& cs, Vertex center, int radius) {
    const Graph& g = *g_;
    if (radius < 1) throw std::invalid_argument("build_local_graph: radius must be >= 1");
    g.degree(center);  // range check

    // BFS to depth radius + 1.
    std::vector<Vertex> seen{center};
    dist_[center] = 0;
    for (std::size_t head = 0; head < seen.size(); ++head) {
      Vertex v = seen[head];
      if (dist_[v] > radius) continue;
      for (Vertex u : g.neighbors(v))
        if (dist_[u] < 0) {
          dist_[u] = dist_[v] + 1;
          seen.push_back(u);
        }
    }

    LocalGraph lg;
    lg.center = center;
    lg.radius = radius;
    for (Vertex v : seen) {
      if (dist_[v] > radius) continue;
      if (dist_[v] == radius) {
        bool blocked = false;
        for (Vertex u : g.neighbors(v))
          if (dist_[u] == radius + 1 && cs.contains(u)) {
            blocked = true;
            break;
          }
        if (blocked) continue;
      }
      lg.to_global.push_back(v);
    }
    std::sort(lg.to_global.begin(), lg.to_global.end());

    const auto size = lg.to_global.size();
    for (Vertex i = 0; i < size; ++i) local_[lg.to_global[i]] = i + 1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Weight> weights;
    weights.reserve(size);
    lg.solu1 = VertexSet(size);
    for (Vertex i = 0; i < size; ++i) {
      Vertex v = lg.to_global[i];
      weights.push_back(g.weight(v));
      if (cs.contains(v)) lg.solu1.insert(i);
      for (Vertex u : g.neighbors(v))
        if (local_[u] > i + 1) edges.emplace_back(i, local_[u] - 1);
    }
    lg.graph = build_graph(size, edges, weights);

    for (Vertex v : seen) dist_[v] = -1;
    for (Vertex v : lg.to_global) local_[v] = 0;
    return lg;
  }

 private:
  const Graph* g_;
  std::vector<int> dist_;
  std::vector<Vertex> local_;  // global -> local id + 1, 0 when absent
};

inline LocalGraph build_local_graph(const Graph& g, const VertexSet& cs, Vertex center, int radius) {
  return LocalGraphBuilder(g).build(cs, center, radius);
}

// Number of local graphs per segment: 1% of |CS|, at least one.
inline std::size_t region_segment_size(std::size_t cs_size) { return std::max<std::size_t>(1, cs_size / 100); }

struct RegionConfig {
  SadplsConfig sadpls;
  int search_depth = 100;
};

// Per-center failure counts that widen the radius of later local graphs.
// Kept across region_search calls for the whole run.
struct RegionMemory {
  std::vector<std::uint32_t> improve_false;
};

struct RegionResult {
  bool improved = false;
  std::size_t centers_visited = 0;
  std::size_t segment_limit = 0;  // final value of the segment budget
};

// Searches local graphs centered at solution vertices, least-visited first,
// splicing any local improvement back into the solution. Expects the state
// to equal the incumbent on entry.
inline RegionResult region_search(SolutionState& s, Incumbent& best, std::size_t radius_parameter,
                                  const RegionConfig& cfg, SearchContext& ctx, RegionMemory& memory) {
  const Graph& g = s.graph();
  RegionResult result;
  const std::size_t n = g.num_vertices();
  std::size_t limit = region_segment_size(s.solution().size());

  using Entry = std::pair<std::uint64_t, Vertex>;  // (freq, id), min first
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> list;
  for (Vertex v : s.solution()) list.push({s.freq(v), v});

  auto& improve_false = memory.improve_false;
  improve_false.resize(n, 0);
  const std::size_t size_guard = std::max<std::size_t>(10000, n / 5);
  LocalGraphBuilder builder(g);
  std::size_t c = 0;

  while (c <= std::min(s.solution().size(), limit) && !list.empty()) {
    if (ctx.deadline.expired()) break;
    auto [f, v] = list.top();
    list.pop();
    if (f != s.freq(v)) {  // stale: freq only grows
      list.push({s.freq(v), v});
      continue;
    }
    ++c;

    int radius = static_cast<int>(std::max<std::size_t>(1, radius_parameter)) + static_cast<int>(improve_false[v]);
    LocalGraph lg = builder.build(s.solution(), v, radius);
    const int base = static_cast<int>(std::max<std::size_t>(1, radius_parameter));
    while (lg.to_global.size() > size_guard && radius > base) lg = builder.build(s.solution(), v, --radius);

    SolutionState local(lg.graph, VertexSet(lg.graph.num_vertices()));
    local.maximize();
    Incumbent local_best(lg.solu1, lg.graph.weight_of(lg.solu1));
    sadpls(local, local_best, cfg.search_depth, cfg.sadpls, ctx);

    if (local_best.weight() > lg.graph.weight_of(lg.solu1)) {
      for (Vertex u : lg.solu1) s.remove(lg.to_global[u]);
      for (Vertex u : local_best.set()) s.add(lg.to_global[u]);
      best.offer(s);
      result.improved = true;
    } else {
      ++improve_false[v];
    }
    if (!result.improved && c == limit) limit += region_segment_size(s.solution().size());
  }
  result.centers_visited = c;
  result.segment_limit = limit;
  return result;
}

inline RegionResult region_search(SolutionState& s, Incumbent& best, std::size_t radius_parameter,
                                  const RegionConfig& cfg, SearchContext& ctx) {
  RegionMemory memory;
  return region_search(s, best, radius_parameter, cfg, ctx, memory);
}

}  // namespace dynls

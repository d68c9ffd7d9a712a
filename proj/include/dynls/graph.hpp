#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "types.hpp"
#include "vertex_set.hpp"

namespace dynls {

// Exact ratio num/den, used for the average degree 2m/n.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
  }
};

// Immutable vertex-weighted undirected simple graph in CSR form.
class Graph {
 public:
  Graph() = default;

  std::size_t num_vertices() const { return weights_.size(); }
  std::size_t num_edges() const { return adjacency_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check(v);
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const {
    check(v);
    return offsets_[v + 1] - offsets_[v];
  }
  Weight weight(Vertex v) const {
    check(v);
    return weights_[v];
  }
  const std::vector<Weight>& weights() const { return weights_; }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (std::size_t v = 0; v < num_vertices(); ++v)
      best = std::max(best, offsets_[v + 1] - offsets_[v]);
    return best;
  }

  // Binary search in the sorted neighbor list.
  bool adjacent(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  Weight total_weight() const { return std::accumulate(weights_.begin(), weights_.end(), Weight{0}); }

  template <typename Range>
  Weight weight_of(const Range& vertices) const {
    Weight w = 0;
    for (auto v : vertices) w += weight(static_cast<Vertex>(v));
    return w;
  }

  template <typename Range>
  bool is_independent(const Range& vertices) const {
    std::vector<unsigned char> mark(num_vertices(), 0);
    for (auto v : vertices) {
      if (mark[v]) return false;  // duplicate
      mark[v] = 1;
    }
    for (auto v : vertices)
      for (Vertex u : neighbors(static_cast<Vertex>(v)))
        if (mark[u]) return false;
    return true;
  }

  // Same topology, new weights.
  Graph with_weights(std::vector<Weight> weights) const {
    if (weights.size() != num_vertices()) throw std::invalid_argument("with_weights: length mismatch");
    for (Weight w : weights)
      if (w < 1) throw std::invalid_argument("with_weights: weights must be >= 1");
    Graph g = *this;
    g.weights_ = std::move(weights);
    return g;
  }

  friend Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
                           std::span<const Weight> weights);

 private:
  void check(Vertex v) const {
    if (v >= weights_.size()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }

  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::vector<Weight> weights_;
};

// Builds a simple graph. Duplicate edges collapse, self-loops are dropped.
inline Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
                         std::span<const Weight> weights) {
  if (weights.size() != n)
    throw std::invalid_argument("build_graph: expected " + std::to_string(n) + " weights, got " +
                                std::to_string(weights.size()));
  for (std::size_t v = 0; v < n; ++v)
    if (weights[v] < 1)
      throw std::invalid_argument("build_graph: weight of vertex " + std::to_string(v) + " is not positive");

  std::vector<std::size_t> degree(n, 0);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw std::out_of_range("build_graph: edge endpoint out of range");
    if (a == b) continue;
    ++degree[a];
    ++degree[b];
  }

  Graph g;
  g.weights_.assign(weights.begin(), weights.end());
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  std::vector<Vertex> raw(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [a, b] : edges) {
    if (a == b) continue;
    raw[fill[a]++] = b;
    raw[fill[b]++] = a;
  }

  // Sort and dedup each list, then compact.
  std::vector<std::size_t> offsets(n + 1, 0);
  std::size_t out = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    offsets[v] = out;
    for (auto it = first; it != last; ++it) raw[out++] = *it;
  }
  offsets[n] = out;
  raw.resize(out);
  g.offsets_ = std::move(offsets);
  g.adjacency_ = std::move(raw);
  return g;
}

inline Graph build_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                         const std::vector<Weight>& weights) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(edges), std::span<const Weight>(weights));
}

inline VertexSet neighbors(const Graph& g, Vertex v) {
  VertexSet out(g.num_vertices());
  for (Vertex u : g.neighbors(v)) out.insert(u);
  return out;
}

// BFS distances from source, -1 for unreachable. Stops expanding past max_depth
// when max_depth >= 0.
inline std::vector<int> bfs_levels(const Graph& g, Vertex source, int max_depth = -1) {
  std::vector<int> dist(g.num_vertices(), -1);
  g.degree(source);  // range check
  std::vector<Vertex> frontier{source};
  dist[source] = 0;
  for (int depth = 0; !frontier.empty() && (max_depth < 0 || depth < max_depth); ++depth) {
    std::vector<Vertex> next;
    for (Vertex v : frontier)
      for (Vertex u : g.neighbors(v))
        if (dist[u] < 0) {
          dist[u] = depth + 1;
          next.push_back(u);
        }
    frontier = std::move(next);
  }
  return dist;
}

// Vertices at exactly BFS distance `level` from source.
inline VertexSet level_neighborhood(const Graph& g, Vertex source, int level) {
  if (level < 1) throw std::invalid_argument("level_neighborhood: level must be >= 1");
  auto dist = bfs_levels(g, source, level);
  VertexSet out(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (dist[v] == level) out.insert(v);
  return out;
}

inline Rational average_degree(const Graph& g) {
  if (g.num_vertices() == 0) throw std::invalid_argument("average_degree: empty graph");
  return {static_cast<std::int64_t>(2 * g.num_edges()), static_cast<std::int64_t>(g.num_vertices())};
}

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_local;  // old id -> new id, kNone when dropped
  std::vector<Vertex> to_global;  // new id -> old id
};

// New ids follow ascending old ids.
template <typename Range>
InducedSubgraph induced_subgraph(const Graph& g, const Range& keep) {
  InducedSubgraph sub;
  sub.to_local.assign(g.num_vertices(), VertexSet::kNone);
  for (auto v : keep) {
    g.degree(static_cast<Vertex>(v));  // range check
    sub.to_local[v] = 0;
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (sub.to_local[v] != VertexSet::kNone) {
      sub.to_local[v] = static_cast<Vertex>(sub.to_global.size());
      sub.to_global.push_back(v);
    }
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Weight> weights;
  weights.reserve(sub.to_global.size());
  for (Vertex nv = 0; nv < sub.to_global.size(); ++nv) {
    Vertex ov = sub.to_global[nv];
    weights.push_back(g.weight(ov));
    for (Vertex ou : g.neighbors(ov)) {
      Vertex nu = sub.to_local[ou];
      if (nu != VertexSet::kNone && nv < nu) edges.emplace_back(nv, nu);
    }
  }
  sub.graph = build_graph(sub.to_global.size(), edges, weights);
  return sub;
}

}  // namespace dynls

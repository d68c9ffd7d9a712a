#pragma once

#include <cmath>
#include <cstddef>
#include <queue>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "graph.hpp"
#include "reduce.hpp"
#include "vertex_set.hpp"

namespace dynls {

// Smallest l with sum_{i=0..l} dbar^i >= n/10, where dbar = 2m/n.
//
// The comparison is exact: with dbar = a/b it checks
// 10 * sum_i a^i b^(l-i) >= n * b^l in big integers. When the series
// can never reach the threshold the result is capped at n.
inline std::size_t compute_radius_parameter(const Graph& g) {
  using boost::multiprecision::cpp_int;
  const std::size_t n = g.num_vertices();
  if (n == 0) return 0;
  const std::int64_t a = static_cast<std::int64_t>(2 * g.num_edges());
  const std::int64_t b = static_cast<std::int64_t>(n);
  // For dbar < 1 the sum is bounded by n / (n - 2m).
  if (a < b && b - a >= 10) return n;

  cpp_int power_a = 1;  // a^l
  cpp_int power_b = 1;  // b^l
  cpp_int series = 1;   // sum_i a^i b^(l-i)
  const cpp_int nn = b;
  for (std::size_t l = 0; l < n; ++l) {
    if (10 * series >= nn * power_b) return l;
    power_a *= a;
    power_b *= b;
    series = series * b + power_a;
  }
  return n;
}

// Greedy construction by the score sigma(v) / sqrt(deg(v)) on the shrinking
// graph. Isolated vertices score +inf. Ties go to the lower id.
inline VertexSet greedy_initial(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> degree(n);
  std::vector<unsigned char> alive(n, 1);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);

  struct Entry {
    Weight w;
    std::size_t deg;
    Vertex v;
  };
  // a ranks below b when a's score is lower (or equal with a higher id).
  auto lower = [](const Entry& x, const Entry& y) {
    if ((x.deg == 0) != (y.deg == 0)) return x.deg != 0;
    if (x.deg != 0) {
      // w_x / sqrt(d_x) vs w_y / sqrt(d_y), compared as w_x^2 d_y vs w_y^2 d_x.
      __int128 lhs = static_cast<__int128>(x.w) * x.w * static_cast<__int128>(y.deg);
      __int128 rhs = static_cast<__int128>(y.w) * y.w * static_cast<__int128>(x.deg);
      if (lhs != rhs) return lhs < rhs;
    } else if (x.w != y.w) {
      return x.w < y.w;
    }
    return x.v > y.v;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(lower)> heap(lower);
  for (Vertex v = 0; v < n; ++v) heap.push({g.weight(v), degree[v], v});

  VertexSet out(n);
  while (!heap.empty()) {
    Entry e = heap.top();
    heap.pop();
    if (!alive[e.v] || e.deg != degree[e.v]) continue;  // stale
    out.insert(e.v);
    alive[e.v] = 0;
    std::vector<Vertex> gone;
    for (Vertex u : g.neighbors(e.v))
      if (alive[u]) {
        alive[u] = 0;
        gone.push_back(u);
      }
    for (Vertex u : gone)
      for (Vertex x : g.neighbors(u))
        if (alive[x]) {
          --degree[x];
          heap.push({g.weight(x), degree[x], x});
        }
  }
  return out;
}

// Reduce-then-break-ties construction: exhaust the degree-zero, degree-one and
// neighborhood rules; when none applies, take the vertex maximizing
// sigma(v) - sigma(N(v)) and delete its closed neighborhood. Repeat.
inline VertexSet rtbf_initial(const Graph& g) {
  const std::size_t n = g.num_vertices();
  detail::Reducer r(g);
  r.log_touched(true);

  using Key = std::pair<Weight, Vertex>;  // (gain, -id order handled below)
  auto lower = [](const Key& x, const Key& y) {
    return x.first != y.first ? x.first < y.first : x.second > y.second;
  };
  std::priority_queue<Key, std::vector<Key>, decltype(lower)> heap(lower);
  auto gain = [&](Vertex v) { return r.weight(v) - r.neighborhood_weight(v); };

  const auto rules = RuleSet::basic();
  r.run(rules, Deadline::never());
  for (Vertex v = 0; v < n; ++v)
    if (r.alive(v)) heap.push({gain(v), v});
  r.touched().clear();

  while (r.live_count() > 0) {
    Key top = heap.top();
    heap.pop();
    if (!r.alive(top.second) || gain(top.second) != top.first) continue;
    r.take(top.second, Rule::kTieBreak);
    r.run(rules, Deadline::never());
    for (Vertex v : r.touched())
      if (r.alive(v)) heap.push({gain(v), v});
    r.touched().clear();
  }

  std::vector<unsigned char> in(n, 0);
  detail::replay_trace(r.trace(), in);
  VertexSet out(n);
  for (Vertex v = 0; v < n; ++v)
    if (in[v]) out.insert(v);
  return out;
}

// Sparse graphs (r_G > 2) use the reduction-guided construction.
inline VertexSet cis(const Graph& g, std::size_t radius_parameter) {
  return radius_parameter > 2 ? rtbf_initial(g) : greedy_initial(g);
}

}  // namespace dynls

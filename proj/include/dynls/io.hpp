#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "rng.hpp"

namespace dynls {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParsedGraph {
  Graph graph;
  // File identifier of each dense vertex; 1..n for METIS.
  std::vector<std::uint64_t> file_ids;
  bool has_weights = false;
  std::vector<std::string> warnings;
};

namespace detail {

inline std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::uint64_t to_uint(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return value;
}

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace detail

// METIS graph format: header "n m [fmt]" with fmt 0 (unweighted) or 10
// (leading vertex weight on each line), then one line of 1-based neighbors
// per vertex. Lines starting with '%' are comments.
inline ParsedGraph parse_metis(std::string_view text) {
  const auto lines = detail::split_lines(text);
  std::size_t ln = 0;
  auto next_line = [&]() -> const std::string* {
    while (ln < lines.size()) {
      const std::string& l = lines[ln++];
      if (!l.empty() && l[0] == '%') continue;
      return &l;
    }
    return nullptr;
  };

  const std::string* header = nullptr;
  while ((header = next_line()) && detail::tokens(*header).empty()) {
  }
  if (!header) throw ParseError(std::max<std::size_t>(ln, 1), "missing header");
  const auto head = detail::tokens(*header);
  const std::size_t header_line = ln;
  if (head.size() < 2 || head.size() > 3) throw ParseError(header_line, "header must be 'n m [fmt]'");
  const std::uint64_t n = detail::to_uint(head[0], header_line);
  const std::uint64_t m = detail::to_uint(head[1], header_line);
  const std::uint64_t fmt = head.size() == 3 ? detail::to_uint(head[2], header_line) : 0;
  if (fmt != 0 && fmt != 10) throw ParseError(header_line, "unsupported fmt " + std::to_string(fmt) + " (expected 0 or 10)");

  ParsedGraph out;
  out.has_weights = fmt == 10;
  std::vector<Weight> weights(n, 1);
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<std::size_t> line_of(n, 0);
  std::uint64_t directed = 0;
  for (std::uint64_t v = 0; v < n; ++v) {
    const std::string* line = next_line();
    if (!line) throw ParseError(ln, "expected " + std::to_string(n) + " vertex lines, found " + std::to_string(v));
    line_of[v] = ln;
    auto toks = detail::tokens(*line);
    std::size_t first = 0;
    if (fmt == 10) {
      if (toks.empty()) throw ParseError(ln, "missing weight for vertex " + std::to_string(v + 1));
      const std::uint64_t w = detail::to_uint(toks[0], ln);
      if (w < 1) throw ParseError(ln, "vertex weight must be >= 1");
      weights[v] = static_cast<Weight>(w);
      first = 1;
    }
    for (std::size_t i = first; i < toks.size(); ++i) {
      const std::uint64_t u = detail::to_uint(toks[i], ln);
      if (u < 1 || u > n) throw ParseError(ln, "neighbor " + std::to_string(u) + " out of range");
      if (u == v + 1) throw ParseError(ln, "self-loop on vertex " + std::to_string(u));
      adj[v].push_back(static_cast<Vertex>(u - 1));
      ++directed;
    }
  }
  while (const std::string* extra = next_line())
    if (!detail::tokens(*extra).empty()) throw ParseError(ln, "more vertex lines than the header declares");

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) {
    std::sort(adj[v].begin(), adj[v].end());
    if (std::adjacent_find(adj[v].begin(), adj[v].end()) != adj[v].end())
      throw ParseError(line_of[v], "duplicate neighbor on vertex " + std::to_string(v + 1));
  }
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : adj[v]) {
      if (!std::binary_search(adj[u].begin(), adj[u].end(), v))
        throw ParseError(line_of[u], "vertex " + std::to_string(u + 1) + " missing reciprocal neighbor " +
                                         std::to_string(v + 1));
      if (v < u) edges.emplace_back(v, u);
    }
  if (directed != 2 * m)
    throw ParseError(header_line, "header declares " + std::to_string(m) + " edges, found " + std::to_string(directed / 2));

  out.graph = build_graph(n, edges, weights);
  out.file_ids.resize(n);
  for (std::uint64_t v = 0; v < n; ++v) out.file_ids[v] = v + 1;
  return out;
}

// Whitespace-separated "u v" pairs; '#' and '%' start comment lines. Ids are
// remapped densely in order of first appearance. All weights are 1.
inline ParsedGraph parse_edgelist(std::string_view text) {
  const auto lines = detail::split_lines(text);
  std::unordered_map<std::uint64_t, Vertex> dense;
  ParsedGraph out;
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto id_of = [&](std::uint64_t raw) {
    auto [it, fresh] = dense.try_emplace(raw, static_cast<Vertex>(out.file_ids.size()));
    if (fresh) out.file_ids.push_back(raw);
    return it->second;
  };
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t ln = i + 1;
    auto toks = detail::tokens(lines[i]);
    if (toks.empty() || toks[0][0] == '#' || toks[0][0] == '%') continue;
    if (toks.size() != 2) throw ParseError(ln, "expected 'u v'");
    const std::uint64_t a = detail::to_uint(toks[0], ln);
    const std::uint64_t b = detail::to_uint(toks[1], ln);
    const Vertex u = id_of(a);
    const Vertex v = id_of(b);
    if (u == v) {
      out.warnings.push_back("line " + std::to_string(ln) + ": self-loop on " + std::to_string(a) + " dropped");
      continue;
    }
    edges.emplace_back(u, v);
  }
  std::vector<Weight> weights(out.file_ids.size(), 1);
  out.graph = build_graph(out.file_ids.size(), edges, weights);
  return out;
}

// METIS text with vertex weights (fmt 10).
inline std::string emit_metis(const Graph& g) {
  std::ostringstream os;
  os << g.num_vertices() << ' ' << g.num_edges() << " 10\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    os << g.weight(v);
    for (Vertex u : g.neighbors(v)) os << ' ' << (u + 1);
    os << '\n';
  }
  return os.str();
}

// sigma(v) = (id(v) - 1) mod 200 + 1 over the file ids (floor modulo).
inline Graph assign_weights_family_a(const Graph& g, const std::vector<std::uint64_t>& file_ids) {
  if (file_ids.size() != g.num_vertices()) throw std::invalid_argument("family-a: id count does not match graph");
  std::vector<Weight> w(g.num_vertices());
  for (std::size_t v = 0; v < w.size(); ++v)
    w[v] = file_ids[v] == 0 ? 200 : static_cast<Weight>((file_ids[v] - 1) % 200 + 1);
  return g.with_weights(std::move(w));
}

// Independent uniform weights in [1, 200], in vertex order.
inline Graph assign_weights_family_b(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Weight> w(g.num_vertices());
  for (auto& x : w) x = rng.between(1, 200);
  return g.with_weights(std::move(w));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace dynls

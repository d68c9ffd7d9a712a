#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "io.hpp"
#include "solver.hpp"

namespace dynls {

enum class GraphFormat { kMetis, kEdgelist };

struct WeightMode {
  enum class Kind { kFile, kFamilyA, kFamilyB } kind = Kind::kFile;
  std::uint64_t seed = 0;  // family B only

  // "file", "family-a", "family-b:<seed>"
  static WeightMode parse(const std::string& text) {
    if (text == "file") return {Kind::kFile, 0};
    if (text == "family-a") return {Kind::kFamilyA, 0};
    const std::string prefix = "family-b:";
    if (text.rfind(prefix, 0) == 0) {
      const std::string rest = text.substr(prefix.size());
      if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad family-b seed in '" + text + "'");
      return {Kind::kFamilyB, std::stoull(rest)};
    }
    throw std::invalid_argument("unknown weight mode '" + text + "'");
  }
};

inline GraphFormat parse_format(const std::string& text) {
  if (text == "metis") return GraphFormat::kMetis;
  if (text == "edgelist") return GraphFormat::kEdgelist;
  throw std::invalid_argument("unknown format '" + text + "'");
}

// Guesses from the extension: .graph/.metis are METIS, everything else an edge list.
inline GraphFormat guess_format(const std::string& path) {
  auto ext = std::filesystem::path(path).extension().string();
  return (ext == ".graph" || ext == ".metis") ? GraphFormat::kMetis : GraphFormat::kEdgelist;
}

inline ParsedGraph load_graph(const std::string& path, GraphFormat format, const WeightMode& weights) {
  const std::string text = read_file(path);
  ParsedGraph pg = format == GraphFormat::kMetis ? parse_metis(text) : parse_edgelist(text);
  switch (weights.kind) {
    case WeightMode::Kind::kFile:
      break;
    case WeightMode::Kind::kFamilyA:
      pg.graph = assign_weights_family_a(pg.graph, pg.file_ids);
      break;
    case WeightMode::Kind::kFamilyB:
      pg.graph = assign_weights_family_b(pg.graph, weights.seed);
      break;
  }
  return pg;
}

struct InstanceSpec {
  std::string path;
  GraphFormat format = GraphFormat::kMetis;
  WeightMode weights;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  double time_limit = 1000.0;
};

struct SeedRun {
  std::uint64_t seed = 0;
  Weight weight = 0;
  double time_to_best = 0;
};

struct BenchRow {
  std::string instance;
  bool ok = false;
  std::string error;
  std::size_t n = 0, m = 0, kernel_n = 0, kernel_m = 0;
  std::vector<SeedRun> runs;
  Weight max_w = 0;
  double avg_w = 0;
};

// Reads {"defaults": {...}, "instances": [{"path", "format", "weights",
// "seeds", "time_limit"}, ...]}. Relative paths resolve against base_dir.
inline std::vector<InstanceSpec> parse_bench_spec(const nlohmann::json& j, const std::filesystem::path& base_dir,
                                                  SolverConfig* solver = nullptr) {
  const nlohmann::json defaults = j.value("defaults", nlohmann::json::object());
  if (solver) {
    solver->m1 = defaults.value("m1", solver->m1);
    solver->m2 = defaults.value("m2", solver->m2);
    solver->search_depth = defaults.value("search_depth", solver->search_depth);
    solver->bms_t = defaults.value("bms_t", solver->bms_t);
    solver->reduce_cap = defaults.value("reduce_cap", solver->reduce_cap);
    solver->no_reduce = defaults.value("no_reduce", solver->no_reduce);
  }
  if (!j.contains("instances") || !j["instances"].is_array())
    throw std::invalid_argument("bench spec needs an 'instances' array");
  std::vector<InstanceSpec> specs;
  for (const auto& item : j["instances"]) {
    InstanceSpec s;
    std::filesystem::path p = item.at("path").get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    s.path = p.string();
    s.format = item.contains("format") ? parse_format(item["format"].get<std::string>()) : guess_format(s.path);
    s.weights = WeightMode::parse(item.value("weights", defaults.value("weights", std::string("file"))));
    s.seeds = item.value("seeds", defaults.value("seeds", std::vector<std::uint64_t>{1, 2, 3, 4, 5}));
    s.time_limit = item.value("time_limit", defaults.value("time_limit", 1000.0));
    if (s.seeds.empty()) throw std::invalid_argument("instance " + s.path + ": seeds must be nonempty");
    if (!(s.time_limit > 0)) throw std::invalid_argument("instance " + s.path + ": time_limit must be > 0");
    specs.push_back(std::move(s));
  }
  return specs;
}

inline const char* kBenchCsvHeader = "instance,n,m,kernel_n,kernel_m,seed,weight,time_to_best";

// Runs every instance under every seed, streaming CSV rows. Unreadable
// instances produce one N/A row and the run continues.
inline std::vector<BenchRow> run_benchmark(const std::vector<InstanceSpec>& specs, std::ostream& csv,
                                           const SolverConfig& base = {}) {
  std::vector<BenchRow> rows;
  csv << kBenchCsvHeader << '\n';
  for (const auto& spec : specs) {
    BenchRow row;
    row.instance = std::filesystem::path(spec.path).filename().string();
    std::optional<ParsedGraph> pg;
    try {
      pg = load_graph(spec.path, spec.format, spec.weights);
    } catch (const std::exception& e) {
      row.error = e.what();
      csv << row.instance << ",N/A,N/A,N/A,N/A,N/A,N/A,N/A\n";
      rows.push_back(std::move(row));
      continue;
    }
    const Graph& g = pg->graph;
    row.n = g.num_vertices();
    row.m = g.num_edges();
    for (auto seed : spec.seeds) {
      SolverConfig cfg = base;
      cfg.seed = seed;
      cfg.time_limit = spec.time_limit;
      SolveResult r = solve(g, cfg);
      if (!g.is_independent(r.best_set) || g.weight_of(r.best_set) != r.best_weight)
        throw std::logic_error("benchmark: reported solution failed re-verification");
      row.kernel_n = r.kernel_vertices;
      row.kernel_m = r.kernel_edges;
      row.runs.push_back({seed, r.best_weight, r.time_to_best});
      csv << row.instance << ',' << row.n << ',' << row.m << ',' << row.kernel_n << ',' << row.kernel_m << ',' << seed
          << ',' << r.best_weight << ',' << std::setprecision(6) << r.time_to_best << '\n';
      csv.flush();
    }
    row.ok = true;
    Weight sum = 0;
    for (const auto& run : row.runs) {
      row.max_w = std::max(row.max_w, run.weight);
      sum += run.weight;
    }
    row.avg_w = static_cast<double>(sum) / static_cast<double>(row.runs.size());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::json bench_summary(const std::vector<BenchRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json e;
    e["instance"] = r.instance;
    if (!r.ok) {
      e["status"] = "N/A";
      e["error"] = r.error;
    } else {
      e["status"] = "ok";
      e["n"] = r.n;
      e["m"] = r.m;
      e["kernel_n"] = r.kernel_n;
      e["kernel_m"] = r.kernel_m;
      e["max_w"] = r.max_w;
      e["avg_w"] = r.avg_w;
      nlohmann::json runs = nlohmann::json::array();
      for (const auto& run : r.runs)
        runs.push_back({{"seed", run.seed}, {"weight", run.weight}, {"time_to_best", run.time_to_best}});
      e["runs"] = runs;
    }
    out.push_back(e);
  }
  return out;
}

// Aggregates a benchmark CSV into a fixed-width table, one line per instance.
inline void write_report(std::istream& csv, std::ostream& out) {
  struct Agg {
    std::size_t runs = 0;
    Weight max_w = 0;
    double sum_w = 0, sum_t = 0;
    bool na = false;
  };
  std::map<std::string, Agg> by_instance;
  std::vector<std::string> order;
  std::string line;
  std::size_t ln = 0;
  while (std::getline(csv, line)) {
    ++ln;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || (ln == 1 && line.rfind("instance,", 0) == 0)) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 8) throw ParseError(ln, "expected 8 CSV fields");
    if (!by_instance.count(f[0])) order.push_back(f[0]);
    Agg& a = by_instance[f[0]];
    if (f[6] == "N/A") {
      a.na = true;
      continue;
    }
    Weight w = 0;
    double t = 0;
    try {
      w = std::stoll(f[6]);
      t = std::stod(f[7]);
    } catch (const std::exception&) {
      throw ParseError(ln, "bad weight or time field");
    }
    a.max_w = a.runs == 0 ? w : std::max(a.max_w, w);
    a.sum_w += static_cast<double>(w);
    a.sum_t += t;
    ++a.runs;
  }
  out << std::left << std::setw(32) << "instance" << std::right << std::setw(6) << "runs" << std::setw(16) << "max_w"
      << std::setw(18) << "avg_w" << std::setw(12) << "time" << '\n';
  for (const auto& name : order) {
    const Agg& a = by_instance[name];
    out << std::left << std::setw(32) << name << std::right << std::setw(6) << a.runs;
    if (a.runs == 0) {
      out << std::setw(16) << "N/A" << std::setw(18) << "N/A" << std::setw(12) << "N/A" << '\n';
      continue;
    }
    out << std::setw(16) << a.max_w << std::setw(18) << std::fixed << std::setprecision(2)
        << a.sum_w / static_cast<double>(a.runs) << std::setw(12) << std::setprecision(3)
        << a.sum_t / static_cast<double>(a.runs) << '\n';
    out.unsetf(std::ios::fixed);
  }
}

}  // namespace dynls

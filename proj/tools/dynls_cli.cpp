// Command-line front end: solve, exact, bench, report.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef DYNLS_CLI11_PACKAGE
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <nlohmann/json.hpp>

#include "dynls/dynls.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitConfig = 3;

enum class LogLevel { kQuiet, kInfo, kDebug };

LogLevel log_level() {
  const char* env = std::getenv("DYNLS_LOG_LEVEL");
  if (!env) return LogLevel::kInfo;
  const std::string v = env;
  if (v == "quiet" || v == "error") return LogLevel::kQuiet;
  if (v == "debug") return LogLevel::kDebug;
  return LogLevel::kInfo;
}

void info(const std::string& msg) {
  if (log_level() >= LogLevel::kInfo) std::cerr << msg << '\n';
}

void debug(const std::string& msg) {
  if (log_level() >= LogLevel::kDebug) std::cerr << msg << '\n';
}

struct GraphOptions {
  std::string path;
  std::string format;
  std::string weights = "file";
};

void add_graph_options(CLI::App* cmd, GraphOptions& opt) {
  cmd->add_option("file", opt.path, "Graph file")->required();
  cmd->add_option("--format", opt.format, "metis | edgelist (default: by extension)")
      ->check(CLI::IsMember({"metis", "edgelist"}));
  cmd->add_option("--weights", opt.weights, "file | family-a | family-b:<seed>");
}

dynls::ParsedGraph load(const GraphOptions& opt) {
  const auto format = opt.format.empty() ? dynls::guess_format(opt.path) : dynls::parse_format(opt.format);
  auto pg = dynls::load_graph(opt.path, format, dynls::WeightMode::parse(opt.weights));
  for (const auto& w : pg.warnings) info("warning: " + w);
  return pg;
}

nlohmann::json ids_of(const dynls::ParsedGraph& pg, const dynls::VertexSet& set) {
  nlohmann::json ids = nlohmann::json::array();
  for (auto v : set.sorted()) ids.push_back(pg.file_ids[v]);
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DynLS maximum weight independent set solver"};
  app.require_subcommand(1);

  GraphOptions solve_graph;
  dynls::SolverConfig cfg;
  bool as_json = false, as_csv = false;
  auto* solve_cmd = app.add_subcommand("solve", "Run the local search solver");
  add_graph_options(solve_cmd, solve_graph);
  solve_cmd->add_option("--time-limit", cfg.time_limit, "Seconds, reduction included");
  solve_cmd->add_option("--seed", cfg.seed, "Random seed");
  solve_cmd->add_flag("--no-reduce", cfg.no_reduce, "Skip kernelization");
  solve_cmd->add_option("--reduce-cap", cfg.reduce_cap, "Seconds allowed for kernelization");
  solve_cmd->add_option("--max-iterations", cfg.max_iterations, "Outer iteration budget (0 = none)");
  solve_cmd->add_option("--m1", cfg.m1);
  solve_cmd->add_option("--m2", cfg.m2);
  solve_cmd->add_option("--search-depth", cfg.search_depth);
  solve_cmd->add_option("--bms-t", cfg.bms_t);
  auto* json_flag = solve_cmd->add_flag("--json", as_json, "JSON output");
  solve_cmd->add_flag("--csv", as_csv, "One CSV row")->excludes(json_flag);

  GraphOptions exact_graph;
  auto* exact_cmd = app.add_subcommand("exact", "Exact solver for graphs with at most 32 vertices");
  add_graph_options(exact_cmd, exact_graph);

  std::string bench_spec, bench_csv, bench_summary;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark described by a JSON file");
  bench_cmd->add_option("spec", bench_spec, "Benchmark spec (JSON)")->required()->check(CLI::ExistingFile);
  bench_cmd->add_option("--csv", bench_csv, "Write per-run CSV here (default: stdout)");
  bench_cmd->add_option("--summary", bench_summary, "Write the JSON summary here (default: stderr)");

  std::string report_csv;
  auto* report_cmd = app.add_subcommand("report", "Summarize a benchmark CSV");
  report_cmd->add_option("csv", report_csv, "Benchmark CSV")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  try {
    if (*solve_cmd) {
      try {
        cfg.validate();
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
      }
      const auto pg = load(solve_graph);
      const auto& g = pg.graph;
      debug("loaded n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges()));
      const auto r = dynls::solve(g, cfg);
      const auto name = std::filesystem::path(solve_graph.path).filename().string();
      if (as_json) {
        nlohmann::json out{{"instance", name},
                           {"n", g.num_vertices()},
                           {"m", g.num_edges()},
                           {"kernel_n", r.kernel_vertices},
                           {"kernel_m", r.kernel_edges},
                           {"seed", cfg.seed},
                           {"weight", r.best_weight},
                           {"size", r.best_set.size()},
                           {"time_to_best", r.time_to_best},
                           {"iterations", r.iterations},
                           {"initial_weight", r.initial_weight},
                           {"solution", ids_of(pg, r.best_set)}};
        std::cout << out.dump(2) << '\n';
      } else if (as_csv) {
        std::cout << dynls::kBenchCsvHeader << '\n'
                  << name << ',' << g.num_vertices() << ',' << g.num_edges() << ',' << r.kernel_vertices << ','
                  << r.kernel_edges << ',' << cfg.seed << ',' << r.best_weight << ',' << r.time_to_best << '\n';
      } else {
        std::cout << "weight " << r.best_weight << "\nsize " << r.best_set.size() << "\ntime_to_best "
                  << std::setprecision(6) << r.time_to_best << "\niterations " << r.iterations << "\nkernel "
                  << r.kernel_vertices << ' ' << r.kernel_edges << '\n';
      }
      return 0;
    }

    if (*exact_cmd) {
      const auto pg = load(exact_graph);
      if (pg.graph.num_vertices() > dynls::kBruteForceLimit) {
        std::cerr << "error: exact supports at most " << dynls::kBruteForceLimit << " vertices\n";
        return kExitConfig;
      }
      const auto r = dynls::brute_force_mwis(pg.graph);
      nlohmann::json out{{"weight", r.weight}, {"solution", ids_of(pg, r.set)}};
      std::cout << out.dump() << '\n';
      return 0;
    }

    if (*bench_cmd) {
      dynls::SolverConfig base;
      std::vector<dynls::InstanceSpec> specs;
      try {
        const auto j = nlohmann::json::parse(dynls::read_file(bench_spec));
        specs = dynls::parse_bench_spec(j, std::filesystem::path(bench_spec).parent_path(), &base);
        base.validate();
      } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
      }
      std::ofstream csv_file;
      if (!bench_csv.empty()) csv_file.open(bench_csv);
      std::ostream& csv = bench_csv.empty() ? std::cout : csv_file;
      const auto rows = dynls::run_benchmark(specs, csv, base);
      const auto summary = dynls::bench_summary(rows).dump(2);
      if (bench_summary.empty()) {
        std::cerr << summary << '\n';
      } else {
        std::ofstream(bench_summary) << summary << '\n';
      }
      return 0;
    }

    if (*report_cmd) {
      std::ifstream in(report_csv);
      dynls::write_report(in, std::cout);
      return 0;
    }
  } catch (const dynls::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

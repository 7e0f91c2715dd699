#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sepdesign/bench.hpp"
#include "sepdesign/causal_oracle.hpp"
#include "sepdesign/designer.hpp"
#include "sepdesign/errors.hpp"
#include "sepdesign/io.hpp"
#include "sepdesign/randgen.hpp"
#include "sepdesign/sepsys.hpp"

namespace {

using namespace sepdesign;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitTooLarge = 4;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

std::pair<std::size_t, std::size_t> parse_m_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const auto m = std::stoul(text);
      return {m, m};
    }
    return {std::stoul(text.substr(0, colon)), std::stoul(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidInput, "--m-range expects a:b, got '" + text + "'");
  }
}

struct DesignArgs {
  std::string mode = "greedy";
  std::optional<std::size_t> m;
  std::string input;
  std::string output;
  std::uint64_t max_nodes = ExactLimits{}.max_nodes;
};

int run_design(const DesignArgs& args) {
  const auto doc = parse_graph_json(read_text_file(args.input));
  const auto algorithm = parse_algorithm(args.mode);
  if (algorithm != Algorithm::Unbounded && !args.m) {
    throw Error(ErrorKind::InvalidInput, "--max-interventions is required for mode " + args.mode);
  }
  DesignResult result;
  switch (algorithm) {
    case Algorithm::Unbounded: result = design_unbounded_optimal(doc.graph); break;
    case Algorithm::GreedyChordal: result = design_greedy_chordal(doc.graph, *args.m); break;
    case Algorithm::GreedyInterval: result = design_greedy_interval(doc.graph, *args.m); break;
    case Algorithm::Exact:
      result = design_exact(doc.graph, *args.m, ExactLimits{args.max_nodes});
      if (!result.optimal) {
        std::cerr << "note: search budget exhausted after " << result.nodes_explored
                  << " nodes; returning the best design found\n";
      }
      break;
  }
  emit(args.output, design_to_json(result.design, result.total_cost, result));
  return kExitOk;
}

int run_verify(const std::string& graph_path, const std::string& design_path) {
  const auto doc = parse_graph_json(read_text_file(graph_path));
  const auto design = parse_design_json(read_text_file(design_path), doc);
  const auto report = verify_graph_separating(doc.graph, design);
  const double cost = design_cost(design, doc.graph.weights());
  if (report.separating) {
    std::cout << "separating: yes\ninterventions: " << design.m() << "\ncost: " << cost << "\n";
    return kExitOk;
  }
  std::cout << "separating: no\nunseparated edges:";
  for (const auto& [u, v] : report.unseparated) std::cout << " " << u << "-" << v;
  std::cout << "\n";
  return kExitNegative;
}

int run_oracle(const std::string& graph_path, const std::string& design_path) {
  const auto doc = parse_graph_json(read_text_file(graph_path));
  const auto design = parse_design_json(read_text_file(design_path), doc);
  const auto report = design_learns_all(doc.graph, design);
  const bool separating = verify_graph_separating(doc.graph, design).separating;
  std::cout << "orientations checked: " << report.orientations_checked << "\n";
  std::cout << "learns all edges: " << (report.learns_all ? "yes" : "no") << "\n";
  std::cout << "graph separating: " << (separating ? "yes" : "no") << "\n";
  if (!report.learns_all) {
    const auto& [u, v] = *report.unlearned_edge;
    std::cout << "unlearned edge: " << u << "-" << v << "\nunder orientation:";
    for (const auto& a : report.failing_dag->arcs(doc.graph)) {
      std::cout << " " << a.from << "->" << a.to;
    }
    std::cout << "\n";
    return kExitNegative;
  }
  return kExitOk;
}

int run_export(const std::string& graph_path, std::size_t m, const std::string& output) {
  const auto doc = parse_graph_json(read_text_file(graph_path));
  emit(output, export_ilp(doc.graph, doc.graph.weights(), m));
  return kExitOk;
}

int run_bench(BenchConfig cfg, const std::string& m_range, const std::string& dist,
              const std::string& algorithm, const std::string& output) {
  std::tie(cfg.m_min, cfg.m_max) = parse_m_range(m_range);
  cfg.dist = parse_cost_dist(dist);
  cfg.algorithm = parse_algorithm(algorithm);
  const auto result = run_benchmark(cfg);
  emit(output, bench_csv(result.rows));
  std::cerr << "trials: " << cfg.trials << ", resamples: " << result.resamples
            << ", skipped (trial, m) pairs: " << result.skipped
            << ", above unbounded optimum at m >= chi: " << result.above_unbounded_at_chi << "\n";
  return kExitOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InsufficientInterventions:
    case ErrorKind::NotEnoughLabels:
      return kExitInfeasible;
    case ErrorKind::TooLarge:
      return kExitTooLarge;
    default:
      return kExitValidation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-cost intervention design for learning causal graphs"};
  app.require_subcommand(1);

  DesignArgs design_args;
  auto* design_cmd = app.add_subcommand("design", "Build an intervention design for a graph");
  design_cmd->add_option("--mode", design_args.mode, "unbounded|greedy|greedy-interval|exact")
      ->check(CLI::IsMember({"unbounded", "greedy", "greedy-interval", "exact"}));
  design_cmd->add_option("-m,--max-interventions", design_args.m, "Intervention budget");
  design_cmd->add_option("--input", design_args.input, "Graph JSON")->required();
  design_cmd->add_option("--output", design_args.output, "Design JSON (default: stdout)");
  design_cmd->add_option("--max-nodes", design_args.max_nodes, "Node budget for exact mode");

  std::string graph_path;
  std::string design_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check that a design separates every edge");
  verify_cmd->add_option("--graph", graph_path)->required();
  verify_cmd->add_option("--design", design_path)->required();

  auto* oracle_cmd =
      app.add_subcommand("oracle", "Check by simulation that a design orients every edge");
  oracle_cmd->add_option("--graph", graph_path)->required();
  oracle_cmd->add_option("--design", design_path)->required();

  GenConfig gen;
  std::string gen_dist = "exp_mean1";
  std::string output;
  auto* gen_cmd = app.add_subcommand("gen", "Sample a random chordal graph with vertex costs");
  gen_cmd->add_option("--n", gen.n)->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--d", gen.d)->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--dist", gen_dist, "exp_mean1|uniform_0_2|ones");
  gen_cmd->add_flag("--always-add-parent", gen.always_add_parent);
  gen_cmd->add_option("--output", output, "Graph JSON (default: stdout)");

  std::size_t export_m = 0;
  auto* export_cmd = app.add_subcommand("export-ilp", "Write the binary program as an LP file");
  export_cmd->add_option("--graph", graph_path)->required();
  export_cmd->add_option("--m", export_m)->required();
  export_cmd->add_option("--output", output, "LP file (default: stdout)");

  BenchConfig bench;
  std::string m_range = "1:10";
  std::string bench_dist = "exp_mean1";
  std::string bench_algorithm = "greedy";
  auto* bench_cmd = app.add_subcommand("bench", "Average normalized design cost over random graphs");
  bench_cmd->add_option("--n", bench.n);
  bench_cmd->add_option("--d", bench.d);
  bench_cmd->add_option("--m-range", m_range, "a:b");
  bench_cmd->add_option("--trials", bench.trials);
  bench_cmd->add_option("--dist", bench_dist);
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--algorithm", bench_algorithm);
  bench_cmd->add_option("--threads", bench.threads, "0 uses every core");
  bench_cmd->add_option("--max-resample", bench.max_resample);
  bench_cmd->add_option("--output", output, "CSV file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*design_cmd) return run_design(design_args);
    if (*verify_cmd) return run_verify(graph_path, design_path);
    if (*oracle_cmd) return run_oracle(graph_path, design_path);
    if (*export_cmd) return run_export(graph_path, export_m, output);
    if (*bench_cmd) return run_bench(bench, m_range, bench_dist, bench_algorithm, output);
    if (*gen_cmd) {
      gen.cost_dist = parse_cost_dist(gen_dist);
      emit(output, graph_to_json(sample_chordal(gen), {}, gen));
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitOk;
}

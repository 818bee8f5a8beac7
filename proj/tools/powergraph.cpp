// powergraph: spanning-tree counts of power graphs, clique expressions and
// clique-replaced graphs.
//
//   powergraph kappa group psl2:7:1 --method formula --output factored
//   powergraph verify quick --jobs 4
//   powergraph export group quaternion:3 --format edges
//
// Exit status: 0 ok, 1 verification mismatch, 2 usage error, 3 internal
// consistency failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "kappa/graph_io.hpp"
#include "kappa/request.hpp"
#include "kappa/verify.hpp"

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kConsistency = 3 };

std::uint64_t seed_from_env() {
  const char* s = std::getenv("KAPPA_SEED");
  if (s == nullptr || *s == '\0') return 0;
  const std::string v = s;
  if (v.find_first_not_of("0123456789") != std::string::npos)
    throw kappa::ParseError("KAPPA_SEED must be a non-negative integer, got '" + v + "'");
  return std::stoull(v);
}

std::string grammar_for(kappa::TargetKind k) {
  switch (k) {
    case kappa::TargetKind::group: return kappa::kGroupSpecGrammar;
    case kappa::TargetKind::expr: return kappa::kCliqueExprGrammar;
    case kappa::TargetKind::clique_replaced: return kappa::kCliqueReplacedGrammar;
    case kappa::TargetKind::graph: return "graph target: path to an edge-list file (line 1: n; then `u v` with u < v)\n";
    case kappa::TargetKind::cyclic_divisor: return "zn target: a positive integer n\n";
  }
  return {};
}

kappa::SimpleGraph build_graph(kappa::TargetKind kind, const std::string& target) {
  using kappa::TargetKind;
  switch (kind) {
    case TargetKind::group: return kappa::power_graph(kappa::build_group(kappa::parse_group_spec(target)));
    case TargetKind::graph: return kappa::read_edge_list_file(target);
    case TargetKind::expr: return kappa::expr_to_graph(kappa::parse_clique_expr(target));
    case TargetKind::clique_replaced: return kappa::clique_replaced(kappa::parse_clique_replaced(target));
    case TargetKind::cyclic_divisor: {
      if (target.empty() || target.find_first_not_of("0123456789") != std::string::npos || std::stoull(target) == 0)
        throw kappa::ParseError("zn target must be a positive integer, got '" + target + "'");
      return kappa::clique_replaced(kappa::cyclic_divisor_spec(std::stoull(target)));
    }
  }
  return {};
}

nlohmann::json graph_json(const kappa::SimpleGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  nlohmann::json labels = nlohmann::json::array();
  for (kappa::Vertex v = 0; v < g.size(); ++v) labels.push_back(g.label(v));
  return {{"vertices", g.size()}, {"edges", edges}, {"labels", labels}};
}

void write_export(std::ostream& out, kappa::TargetKind kind, const std::string& target, const std::string& format) {
  using kappa::TargetKind;
  const kappa::SimpleGraph g = build_graph(kind, target);
  if (format == "edges") {
    kappa::write_edge_list(out, g);
  } else if (format == "dot") {
    kappa::write_dot(out, g, kappa::target_kind_name(kind) + " " + target);
  } else {
    nlohmann::json j = {{"input", kappa::target_kind_name(kind) + " " + target}, {"graph", graph_json(g)}};
    if (kind == TargetKind::clique_replaced || kind == TargetKind::cyclic_divisor) {
      const kappa::CliqueReplacedSpec spec = kind == TargetKind::clique_replaced
                                                 ? kappa::parse_clique_replaced(target)
                                                 : kappa::cyclic_divisor_spec(std::stoull(target));
      j["base"] = graph_json(spec.base());
      j["sizes"] = spec.sizes();
    }
    out << j.dump(2) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spanning-tree counts of power graphs and clique-replaced graphs"};
  app.require_subcommand(1);

  std::string kind_text;
  std::string target;
  std::string method_text = "auto";
  std::string output = "decimal";
  std::uint64_t factor_bound = 0;
  auto* kappa_cmd = app.add_subcommand("kappa", "Count spanning trees of a target");
  kappa_cmd->add_option("kind", kind_text, "group | graph | expr | cr | zn")->required();
  kappa_cmd->add_option("target", target, "group spec, edge-list file, clique expression, clique-replaced spec or n")->required();
  kappa_cmd->add_option("--method", method_text, "auto | matrix-tree | formula | spectrum | smatrix")->capture_default_str();
  kappa_cmd->add_option("--output", output, "decimal | factored | json")
      ->check(CLI::IsMember({"decimal", "factored", "json"}))
      ->capture_default_str();
  kappa_cmd->add_option("--factor-bound", factor_bound, "trial-division bound for determinant results (default max(n, 1000))");

  std::string suite_name;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  bool mutate = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run a formula-versus-determinant suite");
  verify_cmd->add_option("suite", suite_name, "quick | full")->required()->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  verify_cmd->add_flag("--mutate", mutate, "corrupt every closed form (harness self-test; must fail)");

  std::string export_kind;
  std::string export_target;
  std::string format = "edges";
  std::string out_path;
  auto* export_cmd = app.add_subcommand("export", "Write the constructed graph");
  export_cmd->add_option("kind", export_kind, "group | graph | expr | cr | zn")->required();
  export_cmd->add_option("target", export_target, "target as for `kappa`")->required();
  export_cmd->add_option("--format", format, "dot | edges | json")
      ->check(CLI::IsMember({"dot", "edges", "json"}))
      ->capture_default_str();
  export_cmd->add_option("-o,--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::optional<kappa::TargetKind> kind;
  try {
    if (*kappa_cmd) {
      kind = kappa::parse_target_kind(kind_text);
      const kappa::ResultRecord rec = kappa::compute({*kind, target, kappa::parse_method(method_text), factor_bound});
      if (output == "decimal") std::cout << rec.decimal() << '\n';
      else if (output == "factored") std::cout << rec.kappa.to_string() << '\n';
      else std::cout << kappa::to_json(rec).dump() << '\n';
      return kOk;
    }
    if (*verify_cmd) {
      kappa::verify::Options opts;
      opts.jobs = jobs;
      opts.seed = seed_from_env();
      opts.mutate = mutate;
      const auto start = std::chrono::steady_clock::now();
      const kappa::verify::Report report = kappa::verify::run_cases(kappa::verify::suite(suite_name, opts), jobs);
      std::cout << "suite " << suite_name << " seed " << opts.seed << '\n' << report.render();
      std::cerr << "elapsed " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
      return report.ok() ? kOk : kMismatch;
    }
    kind = kappa::parse_target_kind(export_kind);
    if (out_path.empty()) {
      write_export(std::cout, *kind, export_target, format);
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return kUsage;
      }
      write_export(out, *kind, export_target, format);
      if (!out) {
        std::cerr << "error: write to '" << out_path << "' failed\n";
        return kUsage;
      }
    }
    return kOk;
  } catch (const kappa::ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return kConsistency;
  } catch (const kappa::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (kind && std::string(e.what()).find("grammar") == std::string::npos) std::cerr << grammar_for(*kind);
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}

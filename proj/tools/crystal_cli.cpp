// crystal: generate crystal graphs, decompose tensor products and run the
// invariant suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 node budget exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crystal/output.hpp"
#include "crystal/serialize.hpp"
#include "crystal/verify.hpp"

namespace {

using crystal::Int;
using crystal::RootDatum;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RootDatumSource {
  std::string preset;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* p = cmd->add_option("--preset", preset, "Root datum preset: A<n>, D<n>, E6, E7, E8, affineA1");
    auto* f = cmd->add_option("--root-datum", file, "JSON or TOML file with a preset or adjacency key");
    p->excludes(f);
  }

  RootDatum load() const {
    if (!preset.empty()) return RootDatum::preset(preset);
    if (file.empty()) throw UsageError("one of --preset or --root-datum is required");
    return crystal::load_root_datum(file);
  }
};

std::vector<Int> parse_weight(const std::string& text, std::size_t rank) {
  std::vector<Int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad weight entry '" + item + "' in '" + text + "'");
    }
  }
  if (out.size() != rank)
    throw UsageError("weight '" + text + "' has " + std::to_string(out.size()) + " entries, expected " +
                     std::to_string(rank));
  return out;
}

std::vector<Int> dominant_weight(const std::string& text, const RootDatum& rd) {
  auto w = parse_weight(text, rd.rank());
  if (!rd.is_dominant(rd.weight_from_lambda(w))) throw UsageError("weight '" + text + "' is not dominant");
  return w;
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
}

crystal::GenerateOptions generate_options() { return {crystal::node_budget_from_env()}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystal bases of symmetric Kac-Moody algebras"};
  app.require_subcommand(1);

  // graph
  RootDatumSource graph_rd;
  std::string graph_weight;
  std::size_t graph_depth = 50;
  std::string graph_dot;
  std::string graph_json;
  auto* graph = app.add_subcommand("graph", "Generate B(lambda) from the profile model");
  graph_rd.attach(graph);
  graph->add_option("--weight", graph_weight, "Dominant weight, comma separated")->required()->allow_extra_args(false);
  graph->add_option("--depth", graph_depth, "Maximum number of operator applications");
  graph->add_option("--dot", graph_dot, "Write DOT to this path ('-' for stdout)");
  graph->add_option("--json", graph_json, "Write JSON to this path ('-' for stdout)");

  // tensor
  RootDatumSource tensor_rd;
  std::vector<std::string> tensor_weights;
  std::size_t tensor_depth = 50;
  std::string tensor_tsv;
  std::string tensor_json;
  auto* tensor = app.add_subcommand("tensor", "Decompose B(lambda_1) (x) ... (x) B(lambda_n)");
  tensor_rd.attach(tensor);
  tensor->add_option("--weight", tensor_weights, "Dominant weight (repeat for each factor)")->required();
  tensor->add_option("--depth", tensor_depth, "Depth used to generate each factor");
  tensor->add_option("--tsv", tensor_tsv, "Write the table as TSV ('-' for stdout)");
  tensor->add_option("--json", tensor_json, "Write the table as JSON ('-' for stdout)");

  // verify
  RootDatumSource verify_rd;
  std::string suite;
  std::vector<std::string> verify_weights;
  crystal::VerifyParams params;
  auto* verify = app.add_subcommand("verify", "Run an invariant suite: axioms, normal, closed, embedding, oracle");
  verify->add_option("suite", suite, "Suite name")->required();
  verify_rd.attach(verify);
  verify->add_option("--weight", verify_weights, "Dominant weight (repeatable); default: all up to --max-entry");
  verify->add_option("--max-entry", params.max_entry, "Largest coordinate of the default weights");
  verify->add_option("--depth", params.depth, "Generation depth");
  verify->add_option("--pairs", params.pairs, "Random pairs for the closed suite");
  verify->add_option("--seed", params.seed, "Seed for randomized suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*graph) {
      const RootDatum rd = graph_rd.load();
      const auto lambda = dominant_weight(graph_weight, rd);
      const auto g = crystal::model_crystal(rd, lambda, graph_depth, generate_options());
      if (graph_dot.empty() && graph_json.empty()) graph_dot = "-";
      if (!graph_dot.empty()) write_output(graph_dot, crystal::graph_to_dot(g));
      if (!graph_json.empty()) write_output(graph_json, crystal::graph_to_json(g).dump(2) + "\n");
      return kExitOk;
    }

    if (*tensor) {
      const RootDatum rd = tensor_rd.load();
      std::vector<crystal::CrystalGraph> factors;
      for (const auto& text : tensor_weights)
        factors.push_back(crystal::model_crystal(rd, dominant_weight(text, rd), tensor_depth, generate_options()));
      std::vector<const crystal::CrystalGraph*> ptrs;
      for (const auto& f : factors) ptrs.push_back(&f);
      const auto product = crystal::tensor_graph(rd, ptrs, generate_options());
      const auto table = crystal::decompose(product);
      if (tensor_tsv.empty() && tensor_json.empty()) tensor_tsv = "-";
      if (!tensor_tsv.empty()) write_output(tensor_tsv, crystal::decomposition_to_tsv(table));
      if (!tensor_json.empty()) write_output(tensor_json, crystal::decomposition_to_json(rd, table).dump(2) + "\n");
      return kExitOk;
    }

    if (*verify) {
      const RootDatum rd = verify_rd.load();
      for (const auto& text : verify_weights) params.weights.push_back(dominant_weight(text, rd));
      params.generate = generate_options();
      const auto result = crystal::run_suite(suite, rd, params);
      std::cout << result.name << ": " << result.passed << " passed, " << result.failed << " failed, "
                << result.skipped << " skipped\n";
      for (const auto& why : result.failures) std::cout << "  FAIL " << why << "\n";
      return result.ok() ? kExitOk : kExitFailed;
    }
  } catch (const crystal::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (set CRYSTAL_NODE_BUDGET to raise it)\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

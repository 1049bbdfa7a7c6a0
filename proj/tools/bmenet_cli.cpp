// Command-line surface for the level-1 network polytope library.
//
// Subcommands: count, enumerate, vector, sigma, minimize, decompose, verify,
// export-dot. Exit codes: 0 success, 1 verification failure, 2 input error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "bmenet/enumeration.hpp"
#include "bmenet/error.hpp"
#include "bmenet/graph.hpp"
#include "bmenet/io.hpp"
#include "bmenet/metrics.hpp"
#include "bmenet/optimizer.hpp"
#include "bmenet/vectors.hpp"
#include "bmenet/verify.hpp"

using namespace bmenet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

Int evaluation_budget() {
  if (const char* env = std::getenv("BMENET_BUDGET")) return Int(env);
  return Int(10'000'000);
}

ParsedMatrix load_matrix(const std::string& path, bool announce_labels) {
  ParsedMatrix parsed = parse_distance_matrix(path);
  if (announce_labels && parsed.relabelled) {
    Json map = Json::object();
    for (std::size_t t = 0; t < parsed.labels.size(); ++t)
      map[parsed.labels[t]] = t + 1;
    std::cerr << "taxon labels mapped to indices: " << map.dump() << "\n";
  }
  return parsed;
}

int run_count(int n_min, int n_max) {
  std::cout << count_csv(CountTable::compute(n_min, n_max));
  return kExitOk;
}

int run_enumerate(int n, int k) {
  for_each_network(n, k, [](const Network& net) { std::cout << to_json(net).dump() << "\n"; });
  return kExitOk;
}

int run_vector(const std::string& literal) {
  std::cout << vector_csv(network_vector(parse_network(literal)));
  return kExitOk;
}

int run_sigma(const std::string& literal) {
  std::cout << to_json(sigma_splits(parse_network(literal))).dump(2) << "\n";
  return kExitOk;
}

int run_minimize(const std::string& path, int k, const std::string& format, int jobs) {
  const ParsedMatrix parsed = load_matrix(path, true);
  const int n = parsed.matrix.ambient();
  MinimizeOptions options;
  options.budget = evaluation_budget();
  options.jobs = jobs;
  const OptimizationResult result = minimize(parsed.matrix, n, k, options);
  if (format == "json") {
    std::cout << to_json(result).dump(2) << "\n";
  } else {
    std::cout << "minimum " << rational_to_string(result.minimum) << " over "
              << result.evaluated.str() << " networks; " << result.argmin.size()
              << " attaining:\n";
    for (const Network& net : result.argmin) std::cout << "  " << to_json(net).dump() << "\n";
  }
  return kExitOk;
}

int run_decompose(const std::string& path, const std::string& ordering_csv) {
  const ParsedMatrix parsed = load_matrix(path, true);
  std::optional<CircularOrdering> ordering;
  if (!ordering_csv.empty()) {
    std::vector<int> seq;
    std::istringstream in(ordering_csv);
    std::string token;
    while (std::getline(in, token, ',')) seq.push_back(std::stoi(token));
    ordering = CircularOrdering::canonicalize(seq);
  } else {
    ordering = find_consistent_ordering(parsed.matrix);
    if (!ordering) {
      std::cerr << "no circular ordering satisfies the Kalmanson condition\n";
      return kExitInputError;
    }
  }
  std::cout << to_json(kalmanson_decompose(parsed.matrix, *ordering)).dump(2) << "\n";
  return kExitOk;
}

int run_verify(const std::string& suite, const VerifyOptions& options,
               const std::string& format) {
  const SuiteResult result = run_suite(suite, options);
  if (format == "json") {
    Json out;
    out["suite"] = result.suite;
    out["pass"] = result.pass();
    Json checks = Json::array();
    for (const CheckResult& check : result.checks) {
      Json entry;
      entry["name"] = check.name;
      entry["pass"] = check.pass;
      if (!check.detail.empty()) entry["detail"] = check.detail;
      checks.push_back(std::move(entry));
    }
    out["checks"] = std::move(checks);
    for (auto& [key, value] : result.artifacts.items()) out[key] = value;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const CheckResult& check : result.checks)
      std::cout << (check.pass ? "pass" : "FAIL") << "  " << check.name
                << (check.detail.empty() ? "" : "  (" + check.detail + ")") << "\n";
    std::cout << (result.pass() ? "suite passed" : "suite FAILED") << "\n";
  }
  return result.pass() ? kExitOk : kExitVerifyFailed;
}

int run_export_dot(const std::string& literal, const std::string& weights_path) {
  const Network net = parse_network(literal);
  if (weights_path.empty()) {
    std::cout << to_dot(build_graph(net));
    return kExitOk;
  }
  std::ifstream in(weights_path);
  if (!in) fail(ErrorCode::MalformedFile, "cannot open '" + weights_path + "'");
  Json value = Json::parse(in, nullptr, false);
  if (value.is_discarded())
    fail(ErrorCode::MalformedFile, "invalid JSON in '" + weights_path + "'");
  std::cout << to_dot(build_graph(net, weighted_system_from_json(value)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact level-1 phylogenetic network polytopes"};
  app.require_subcommand(1);

  int n = 0, k = 0, n_min = 3, n_max = 9, jobs = 1;
  std::string literal, matrix_path, ordering_csv, weights_path;
  std::string format = "json", suite;
  VerifyOptions verify_options;
  bool hull = false;

  auto* count = app.add_subcommand("count", "vertex counts v(n,k) as CSV rows");
  count->add_option("--n", n, "single row n");
  count->add_option("--n-min", n_min, "first row (default 3)");
  count->add_option("--n-max", n_max, "last row (default 9)");

  auto* enumerate = app.add_subcommand("enumerate", "newline-delimited network literals");
  enumerate->add_option("--n", n, "taxon count")->required();
  enumerate->add_option("--k", k, "bridge count")->required();

  auto* vector = app.add_subcommand("vector", "vertex vector of a network literal, CSV");
  vector->add_option("network", literal, "network JSON literal")->required();

  auto* sigma = app.add_subcommand("sigma", "displayed split system of a network literal");
  sigma->add_option("network", literal, "network JSON literal")->required();

  auto* minimize = app.add_subcommand("minimize", "exact length minimization over BME(n,k)");
  minimize->add_option("--k", k, "bridge count")->required();
  minimize->add_option("--matrix", matrix_path, "distance matrix file")->required();
  minimize->add_option("--format", format, "json|text");
  minimize->add_option("--jobs", jobs, "worker threads");

  auto* decompose = app.add_subcommand("decompose", "circular split decomposition of a metric");
  decompose->add_option("matrix", matrix_path, "distance matrix file")->required();
  decompose->add_option("--ordering", ordering_csv, "comma-separated circular ordering");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "equalities|facets51|table1|nesting|faces|recovery")
      ->required();
  verify->add_option("--format", format, "json|text");
  verify->add_option("--max-n", verify_options.max_n, "cap the taxon count");
  verify->add_option("--trials", verify_options.trials, "randomized trial count");
  verify->add_option("--seed", verify_options.seed, "random seed");
  verify->add_option("--jobs", verify_options.jobs, "worker threads");
  verify->add_flag("--hull", hull, "facets51: also run the basic-solution completeness scan");

  auto* export_dot = app.add_subcommand("export-dot", "Graphviz rendering of a network");
  export_dot->add_option("network", literal, "network JSON literal")->required();
  export_dot->add_option("--weights", weights_path, "weighted split system JSON file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed()) return n > 0 ? run_count(n, n) : run_count(n_min, n_max);
    if (enumerate->parsed()) return run_enumerate(n, k);
    if (vector->parsed()) return run_vector(literal);
    if (sigma->parsed()) return run_sigma(literal);
    if (minimize->parsed()) return run_minimize(matrix_path, k, format, jobs);
    if (decompose->parsed()) return run_decompose(matrix_path, ordering_csv);
    if (verify->parsed()) {
      verify_options.hull = hull;
      return run_verify(suite, verify_options, format);
    }
    if (export_dot->parsed()) return run_export_dot(literal, weights_path);
  } catch (const Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

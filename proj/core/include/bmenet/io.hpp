#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "bmenet/enumeration.hpp"
#include "bmenet/metrics.hpp"
#include "bmenet/network.hpp"
#include "bmenet/optimizer.hpp"
#include "bmenet/polytope.hpp"

namespace bmenet {

using Json = nlohmann::ordered_json;

// {"n": 5, "ordering": [1,2,3,4,5], "bridges": [[2,3],[4,5]]}; each bridge
// lists the taxon-1-free side in ascending order.
Json to_json(const Network& net);
Network network_from_json(const Json& value);
Network parse_network(const std::string& text);

// {"n": 5, "ordering": [...], "splits": [{"part": [4,5], "weight": "1"}, ...]}
// with weights as exact decimal or "p/q" strings; "weight" is omitted for
// unweighted systems and defaults to 1 when reading one as weighted.
Json to_json(const SplitSystem& system);
Json to_json(const WeightedSplitSystem& ws);
SplitSystem split_system_from_json(const Json& value);
WeightedSplitSystem weighted_system_from_json(const Json& value);

Json to_json(const LinearFunctional& f);
Json to_json(const FaceReport& report);
Json to_json(const OptimizationResult& result);

// CSV with header "i,j,x_ij" in fixed lexicographic pair order.
std::string vector_csv(const PairVector& x);
// Headerless rows "n,v(n,0),...,v(n,n-3)".
std::string count_csv(const CountTable& table);

// A distance matrix read from a PHYLIP-style square file (first line n, then
// one row per taxon: label followed by n entries) or from CSV lines "i,j,d".
// Labels map to taxa 1..n in file order.
struct ParsedMatrix {
  DistanceMatrix matrix;
  std::vector<std::string> labels;  // labels[t-1] names taxon t
  bool relabelled = false;          // true when labels are not already 1..n
};

ParsedMatrix parse_distance_matrix_text(const std::string& text);
ParsedMatrix parse_distance_matrix(const std::string& path);

}  // namespace bmenet

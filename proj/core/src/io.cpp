#include "bmenet/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "bmenet/error.hpp"

namespace bmenet {

Json to_json(const Network& net) {
  Json value;
  value["n"] = net.ambient();
  value["ordering"] = net.ordering().seq();
  Json bridges = Json::array();
  for (const Split& b : net.bridges()) bridges.push_back(b.part());
  value["bridges"] = std::move(bridges);
  return value;
}

Network network_from_json(const Json& value) {
  if (!value.is_object() || !value.contains("n") || !value.contains("ordering"))
    fail(ErrorCode::MalformedFile, "network literal needs \"n\" and \"ordering\"");
  const int n = value.at("n").get<int>();
  const auto seq = value.at("ordering").get<std::vector<int>>();
  if (static_cast<int>(seq.size()) != n)
    fail(ErrorCode::MalformedFile, "ordering length differs from n");
  const CircularOrdering c = CircularOrdering::canonicalize(seq);
  std::vector<Split> bridges;
  if (value.contains("bridges"))
    for (const auto& part : value.at("bridges"))
      bridges.emplace_back(n, part.get<std::vector<int>>());
  return make_network(c, bridges);
}

Network parse_network(const std::string& text) {
  Json value = Json::parse(text, nullptr, false);
  if (value.is_discarded()) fail(ErrorCode::MalformedFile, "invalid JSON network literal");
  return network_from_json(value);
}

namespace {

Json system_to_json(const SplitSystem& system, const std::vector<Rational>* weights) {
  Json value;
  value["n"] = system.ambient();
  if (system.ordering()) value["ordering"] = system.ordering()->seq();
  Json splits = Json::array();
  for (std::size_t idx = 0; idx < system.splits().size(); ++idx) {
    Json entry;
    entry["part"] = system.splits()[idx].part();
    if (weights) entry["weight"] = rational_to_string((*weights)[idx]);
    splits.push_back(std::move(entry));
  }
  value["splits"] = std::move(splits);
  return value;
}

std::pair<SplitSystem, std::vector<Rational>> system_from_json(const Json& value) {
  if (!value.is_object() || !value.contains("n") || !value.contains("splits"))
    fail(ErrorCode::MalformedFile, "split system needs \"n\" and \"splits\"");
  const int n = value.at("n").get<int>();
  std::optional<CircularOrdering> ordering;
  if (value.contains("ordering"))
    ordering = CircularOrdering::canonicalize(value.at("ordering").get<std::vector<int>>());

  std::vector<Split> splits;
  std::vector<Rational> weights;
  for (const auto& entry : value.at("splits")) {
    splits.emplace_back(n, entry.at("part").get<std::vector<int>>());
    if (entry.contains("weight")) {
      const auto& w = entry.at("weight");
      weights.push_back(w.is_string() ? parse_rational(w.get<std::string>())
                                      : Rational(w.get<long long>()));
    } else {
      weights.push_back(1);
    }
  }
  // Re-sort the weights along with the splits and give absent trivial splits
  // weight zero, matching the SplitSystem constructor's normalization.
  std::vector<std::size_t> order(splits.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return splits[a] < splits[b]; });
  std::vector<Split> sorted;
  std::vector<Rational> sorted_weights;
  for (std::size_t i : order) {
    if (!sorted.empty() && sorted.back() == splits[i])
      fail(ErrorCode::MalformedFile, "duplicate split in system");
    sorted.push_back(splits[i]);
    sorted_weights.push_back(weights[i]);
  }
  SplitSystem system(n, sorted, ordering);
  std::vector<Rational> aligned;
  for (const Split& s : system.splits()) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
    if (it != sorted.end() && *it == s)
      aligned.push_back(sorted_weights[static_cast<std::size_t>(it - sorted.begin())]);
    else
      aligned.push_back(0);  // trivial split inserted by the constructor
  }
  return {std::move(system), std::move(aligned)};
}

}  // namespace

Json to_json(const SplitSystem& system) { return system_to_json(system, nullptr); }

Json to_json(const WeightedSplitSystem& ws) {
  return system_to_json(ws.system(), &ws.weights());
}

SplitSystem split_system_from_json(const Json& value) {
  return system_from_json(value).first;
}

WeightedSplitSystem weighted_system_from_json(const Json& value) {
  auto [system, weights] = system_from_json(value);
  return WeightedSplitSystem(std::move(system), std::move(weights));
}

namespace {

Json rational_json(const Rational& v) {
  if (boost::multiprecision::denominator(v) == 1) {
    const Int num = boost::multiprecision::numerator(v);
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max())
      return static_cast<std::int64_t>(num);
  }
  return rational_to_string(v);
}

}  // namespace

Json to_json(const LinearFunctional& f) {
  Json value;
  Json coeffs = Json::array();
  for (const Rational& c : f.coeffs.values()) coeffs.push_back(rational_json(c));
  value["coeffs"] = std::move(coeffs);
  value["bound"] = rational_to_string(f.bound);
  value["sense"] = f.sense == LinearFunctional::Sense::LessEqual ? "<=" : ">=";
  return value;
}

Json to_json(const FaceReport& report) {
  Json value;
  value["family"] = report.family;
  value["label"] = report.label;
  value["functional"] = to_json(report.functional);
  value["valid"] = report.valid;
  value["tight_count"] = report.tight_count;
  value["tight_dim"] = report.tight_affine_dim;
  Json tight = Json::array();
  for (const Network& net : report.tight_vertices) tight.push_back(to_json(net));
  value["tight"] = std::move(tight);
  return value;
}

Json to_json(const OptimizationResult& result) {
  Json value;
  value["minimum"] = rational_to_string(result.minimum);
  value["evaluated"] = result.evaluated.str();
  Json argmin = Json::array();
  for (const Network& net : result.argmin) argmin.push_back(to_json(net));
  value["argmin"] = std::move(argmin);
  return value;
}

std::string vector_csv(const PairVector& x) {
  std::ostringstream out;
  out << "i,j,x_ij\n";
  const int n = x.ambient();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      out << i << "," << j << "," << rational_to_string(x.at(i, j)) << "\n";
  return out.str();
}

std::string count_csv(const CountTable& table) {
  std::ostringstream out;
  for (int n = table.n_min; n <= table.n_max; ++n) {
    out << n;
    for (const Int& v : table.values[static_cast<std::size_t>(n - table.n_min)])
      out << "," << v.str();
    out << "\n";
  }
  return out.str();
}

namespace {

std::vector<std::string> tokenize(const std::string& line, char separator) {
  std::vector<std::string> tokens;
  std::string token;
  std::istringstream in(line);
  if (separator == ' ') {
    while (in >> token) tokens.push_back(token);
  } else {
    while (std::getline(in, token, separator)) {
      while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
        token.pop_back();
      while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
        token.erase(token.begin());
      tokens.push_back(token);
    }
  }
  return tokens;
}

Rational parse_distance(const std::string& token) {
  if (!token.empty() && token[0] == '-')
    fail(ErrorCode::NegativeDistance, "distance '" + token + "' is negative");
  const Rational value = parse_rational(token);
  if (value < 0) fail(ErrorCode::NegativeDistance, "distance '" + token + "' is negative");
  return value;
}

ParsedMatrix parse_phylip(const std::vector<std::string>& lines, int n) {
  if (static_cast<int>(lines.size()) < n + 1)
    fail(ErrorCode::MalformedFile, "expected one row per taxon");
  ParsedMatrix parsed{DistanceMatrix(n), {}, false};
  std::vector<std::vector<Rational>> full(
      static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int row = 0; row < n; ++row) {
    const auto tokens = tokenize(lines[static_cast<std::size_t>(row) + 1], ' ');
    if (static_cast<int>(tokens.size()) != n + 1)
      fail(ErrorCode::MalformedFile,
           "row " + std::to_string(row + 1) + " needs a label and " + std::to_string(n) +
               " entries");
    parsed.labels.push_back(tokens[0]);
    for (int col = 0; col < n; ++col)
      full[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
          parse_distance(tokens[static_cast<std::size_t>(col) + 1]);
  }
  for (int i = 0; i < n; ++i) {
    if (full[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 0)
      fail(ErrorCode::MalformedFile, "diagonal entries must be zero");
    for (int j = i + 1; j < n; ++j) {
      if (full[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          full[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
        fail(ErrorCode::AsymmetricInput,
             "entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                 ") and transpose differ");
      parsed.matrix.at(i + 1, j + 1) =
          full[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  for (int t = 1; t <= n; ++t)
    if (parsed.labels[static_cast<std::size_t>(t - 1)] != std::to_string(t))
      parsed.relabelled = true;
  return parsed;
}

ParsedMatrix parse_csv_matrix(const std::vector<std::string>& lines) {
  struct Entry {
    int i, j;
    Rational d;
  };
  std::vector<Entry> entries;
  int n = 0;
  for (const std::string& line : lines) {
    if (line.empty()) continue;
    const auto tokens = tokenize(line, ',');
    if (tokens.size() != 3) fail(ErrorCode::MalformedFile, "CSV rows are i,j,d_ij");
    if (tokens[0] == "i") continue;  // header
    int i = 0, j = 0;
    try {
      i = std::stoi(tokens[0]);
      j = std::stoi(tokens[1]);
    } catch (const std::exception&) {
      fail(ErrorCode::MalformedFile, "bad taxon index in '" + line + "'");
    }
    if (i == j) fail(ErrorCode::MalformedFile, "diagonal entries are implicit");
    entries.push_back({i, j, parse_distance(tokens[2])});
    n = std::max({n, i, j});
  }
  if (n < 3) fail(ErrorCode::MalformedFile, "need at least three taxa");
  ParsedMatrix parsed{DistanceMatrix(n), {}, false};
  std::vector<std::vector<char>> seen(static_cast<std::size_t>(n) + 1,
                                      std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
  for (const Entry& e : entries) {
    if (seen[static_cast<std::size_t>(std::min(e.i, e.j))]
            [static_cast<std::size_t>(std::max(e.i, e.j))]) {
      if (parsed.matrix.at(e.i, e.j) != e.d)
        fail(ErrorCode::AsymmetricInput, "conflicting entries for one pair");
      continue;
    }
    seen[static_cast<std::size_t>(std::min(e.i, e.j))]
        [static_cast<std::size_t>(std::max(e.i, e.j))] = 1;
    parsed.matrix.at(e.i, e.j) = e.d;
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        fail(ErrorCode::MalformedFile,
             "missing entry for pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  for (int t = 1; t <= n; ++t) parsed.labels.push_back(std::to_string(t));
  return parsed;
}

}  // namespace

ParsedMatrix parse_distance_matrix_text(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) fail(ErrorCode::MalformedFile, "empty matrix file");

  // A single integer on the first line marks the PHYLIP square format.
  const auto first = tokenize(lines[0], ' ');
  if (first.size() == 1) {
    int n = 0;
    bool numeric = true;
    try {
      n = std::stoi(first[0]);
    } catch (const std::exception&) {
      numeric = false;
    }
    if (numeric && n >= 3) return parse_phylip(lines, n);
  }
  return parse_csv_matrix(lines);
}

ParsedMatrix parse_distance_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::MalformedFile, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_distance_matrix_text(buffer.str());
}

}  // namespace bmenet

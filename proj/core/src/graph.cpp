#include "bmenet/graph.hpp"

#include <algorithm>
#include <sstream>

#include "bmenet/error.hpp"
#include "bmenet/subdivision.hpp"

namespace bmenet {

bool PhyloGraph::weighted() const {
  return std::all_of(edges.begin(), edges.end(),
                     [](const Edge& e) { return e.weight.has_value(); });
}

int PhyloGraph::degree(int node) const {
  int d = 0;
  for (const Edge& e : edges)
    if (e.u == node || e.v == node) ++d;
  return d;
}

namespace {

struct Builder {
  const Network& net;
  const PolygonSubdivision sub;
  const WeightedSplitSystem* weights;
  PhyloGraph graph;
  // attach[r][e]: node carrying boundary element e of region r.
  std::vector<std::vector<int>> attach;

  explicit Builder(const Network& n, const WeightedSplitSystem* w)
      : net(n), sub(PolygonSubdivision::build(n)), weights(w) {}

  std::optional<Rational> weight_of_mask(std::uint64_t mask) const {
    if (!weights) return std::nullopt;
    return weights->weight_of(Split::from_mask(net.ambient(), mask));
  }

  // Weight of a cycle edge of `region` between boundary positions t and t+1:
  // total weight of the splits cut by pairing this cycle edge with another
  // one, restricted to pairs that leave at least two boundary elements on
  // both sides (the one-element cuts reproduce leaf and bridge splits, which
  // are represented by their own edges).
  std::optional<Rational> cycle_edge_weight(int region, int t) const {
    if (!weights) return std::nullopt;
    const auto& boundary = sub.regions[static_cast<std::size_t>(region)].boundary;
    const int m = static_cast<int>(boundary.size());
    Rational total = 0;
    // Cut between t|t+1 and t2|t2+1: one side is elements t+1..t2.
    for (int t2 = (t + 1) % m; t2 != t; t2 = (t2 + 1) % m) {
      int span = (t2 - t + m) % m;
      if (span < 2 || span > m - 2) continue;
      std::uint64_t mask = 0;
      for (int e = (t + 1) % m; e != (t2 + 1) % m; e = (e + 1) % m)
        mask |= boundary[static_cast<std::size_t>(e)].taxa;
      total += *weight_of_mask(mask);
    }
    return total;
  }

  void build() {
    const int n = net.ambient();
    graph.leaf_count = n;
    graph.node_count = n;
    attach.resize(sub.regions.size());

    // Nodes first: one per boundary element for m >= 4, one shared for m = 3.
    for (std::size_t r = 0; r < sub.regions.size(); ++r) {
      const auto& boundary = sub.regions[r].boundary;
      const int m = static_cast<int>(boundary.size());
      attach[r].resize(static_cast<std::size_t>(m));
      if (m == 3) {
        const int node = graph.node_count++;
        for (int e = 0; e < m; ++e) attach[r][static_cast<std::size_t>(e)] = node;
      } else {
        for (int e = 0; e < m; ++e)
          attach[r][static_cast<std::size_t>(e)] = graph.node_count++;
      }
    }

    for (std::size_t r = 0; r < sub.regions.size(); ++r) {
      const auto& boundary = sub.regions[r].boundary;
      const int m = static_cast<int>(boundary.size());
      if (m >= 4) {
        for (int t = 0; t < m; ++t)
          graph.edges.push_back({attach[r][static_cast<std::size_t>(t)],
                                 attach[r][static_cast<std::size_t>((t + 1) % m)],
                                 cycle_edge_weight(static_cast<int>(r), t)});
      }
      for (int e = 0; e < m; ++e) {
        const auto& elem = boundary[static_cast<std::size_t>(e)];
        const int here = attach[r][static_cast<std::size_t>(e)];
        if (elem.kind == PolygonSubdivision::ElementKind::Side) {
          const int taxon = net.ordering().seq()[static_cast<std::size_t>(elem.index)];
          graph.edges.push_back(
              {graph.leaf_node(taxon), here,
               weights ? std::optional<Rational>(
                             weights->weight_of(Split::trivial(n, taxon)))
                       : std::nullopt});
        } else if (elem.kind == PolygonSubdivision::ElementKind::ChildDiagonal) {
          const int child = elem.index;
          const int there =
              attach[static_cast<std::size_t>(child)][static_cast<std::size_t>(
                  sub.diagonal_element(child, static_cast<int>(r)))];
          graph.edges.push_back({here, there, weight_of_mask(elem.taxa)});
        }
      }
    }
  }
};

}  // namespace

PhyloGraph build_graph(const Network& net) {
  Builder builder(net, nullptr);
  builder.build();
  return std::move(builder.graph);
}

PhyloGraph build_graph(const Network& net, const WeightedSplitSystem& weights) {
  if (weights.ambient() != net.ambient())
    fail(ErrorCode::AmbientMismatch, "weights and network on different taxon sets");
  if (!(weights.system() == sigma_splits(net)))
    fail(ErrorCode::WeightSystemMismatch,
         "weight system must cover exactly the displayed splits");
  Builder builder(net, &weights);
  builder.build();
  return std::move(builder.graph);
}

std::string to_dot(const PhyloGraph& g) {
  std::ostringstream out;
  out << "graph phylo {\n";
  for (int taxon = 1; taxon <= g.leaf_count; ++taxon)
    out << "  n" << g.leaf_node(taxon) << " [label=\"" << taxon << "\" shape=plaintext];\n";
  for (int node = g.leaf_count; node < g.node_count; ++node)
    out << "  n" << node << " [label=\"v" << node - g.leaf_count << "\" shape=point];\n";
  for (const auto& e : g.edges) {
    out << "  n" << e.u << " -- n" << e.v;
    if (e.weight) out << " [weight=\"" << rational_to_string(*e.weight) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bmenet

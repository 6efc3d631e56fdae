#pragma once

// Incidence graphs of Hilbert scheme components: one vertex per irreducible
// component, an edge whenever two components meet.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace hilbrad {

class IncidenceGraph {
public:
  using Edge = std::pair<std::string, std::string>;

  /// Throws std::invalid_argument on duplicate labels, self-loops, duplicate
  /// edges or edges naming unknown vertices.
  IncidenceGraph(std::vector<std::string> vertices, const std::vector<Edge>& edges,
                 nlohmann::json annotations = nlohmann::json::object());

  const std::vector<std::string>& vertices() const noexcept { return labels_; }
  /// Edges in insertion order, each as given.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const nlohmann::json& annotations() const noexcept { return annotations_; }

  std::size_t index_of(std::string_view label) const;
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }
  bool is_connected() const;

  /// Edge counts of shortest paths from `source`; unreachable vertices get -1.
  std::vector<long> distances_from(std::size_t source) const;

private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  nlohmann::json annotations_;
};

/// Shortest-path edge count. Throws DomainError if b is unreachable from a.
long distance(const IncidenceGraph& g, std::string_view a, std::string_view b);
/// Max distance from v. Throws DomainError on a disconnected graph.
long eccentricity(const IncidenceGraph& g, std::string_view v);
long radius(const IncidenceGraph& g);
/// Vertices of minimum eccentricity, in vertex order.
std::vector<std::string> centers(const IncidenceGraph& g);

/// Built-in datasets "H4" and "H5".
IncidenceGraph paper_graph(std::string_view name);

/// `{"vertices": [...], "edges": [["a","b"], ...], "annotations": {...}}`
IncidenceGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const IncidenceGraph& g);

}  // namespace hilbrad

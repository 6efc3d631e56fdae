#include "hilbrad/incidence.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "hilbrad/error.hpp"

namespace hilbrad {

using nlohmann::json;

IncidenceGraph::IncidenceGraph(std::vector<std::string> vertices,
                               const std::vector<Edge>& edges, json annotations)
    : labels_(std::move(vertices)), annotations_(std::move(annotations)) {
  std::set<std::string> unique(labels_.begin(), labels_.end());
  if (unique.size() != labels_.size())
    throw std::invalid_argument("incidence graph: duplicate vertex label");
  adjacency_.resize(labels_.size());
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [a, b] : edges) {
    auto i = index_of(a);
    auto j = index_of(b);
    if (i == j) throw std::invalid_argument("incidence graph: self-loop at " + a);
    if (!seen.insert({std::min(i, j), std::max(i, j)}).second)
      throw std::invalid_argument("incidence graph: duplicate edge " + a + "-" + b);
    adjacency_[i].push_back(j);
    adjacency_[j].push_back(i);
    edges_.emplace_back(a, b);
  }
}

std::size_t IncidenceGraph::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    throw std::invalid_argument("incidence graph: unknown vertex '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<long> IncidenceGraph::distances_from(std::size_t source) const {
  std::vector<long> dist(labels_.size(), -1);
  std::deque<std::size_t> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto w : adjacency_[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

bool IncidenceGraph::is_connected() const {
  if (labels_.empty()) return true;
  auto d = distances_from(0);
  return std::none_of(d.begin(), d.end(), [](long x) { return x < 0; });
}

long distance(const IncidenceGraph& g, std::string_view a, std::string_view b) {
  auto d = g.distances_from(g.index_of(a))[g.index_of(b)];
  if (d < 0)
    throw DomainError("no path between " + std::string(a) + " and " + std::string(b));
  return d;
}

long eccentricity(const IncidenceGraph& g, std::string_view v) {
  auto d = g.distances_from(g.index_of(v));
  if (std::any_of(d.begin(), d.end(), [](long x) { return x < 0; }))
    throw DomainError("eccentricity is undefined on a disconnected graph");
  return *std::max_element(d.begin(), d.end());
}

long radius(const IncidenceGraph& g) {
  if (g.vertices().empty()) throw DomainError("radius of the empty graph");
  if (!g.is_connected()) throw DomainError("radius is undefined on a disconnected graph");
  long best = -1;
  for (const auto& v : g.vertices()) {
    long e = eccentricity(g, v);
    if (best < 0 || e < best) best = e;
  }
  return best;
}

std::vector<std::string> centers(const IncidenceGraph& g) {
  const long rad = radius(g);
  std::vector<std::string> out;
  for (const auto& v : g.vertices())
    if (eccentricity(g, v) == rad) out.push_back(v);
  return out;
}

IncidenceGraph paper_graph(std::string_view name) {
  if (name == "H4") {
    json notes = {
        {"status", "complete"},
        {"polynomial", "twoplanes:4"},
        {"vertices",
         {{"H4_1", {{"borel_points", {"H4.I1"}}}},
          {"H4_2", {{"borel_points", {"H4.I1", "H4.I2"}}}},
          {"H4_lex", {{"borel_points", {"H4.I2", "H4.Ilex"}}}}}},
        {"edges",
         {{{"between", {"H4_1", "H4_2"}}, {"witness", "H4.I1"}},
          // Only known to the strength "I2 lies on every component other
          // than H4_1".
          {{"between", {"H4_2", "H4_lex"}}, {"witness", "H4.I2"}}}},
    };
    return IncidenceGraph({"H4_1", "H4_2", "H4_lex"},
                          {{"H4_1", "H4_2"}, {"H4_2", "H4_lex"}}, std::move(notes));
  }
  if (name == "H5") {
    const std::vector<std::string> v = {"H5_1", "H5_2", "H5_3", "H5_4",
                                        "H5_5", "H5_6", "H5_lex"};
    auto V = [&](int i) { return v[static_cast<std::size_t>(i - 1)]; };
    const std::vector<std::pair<int, int>> pairs = {
        {1, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5},
        {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}, {3, 6}, {3, 7}};
    std::vector<IncidenceGraph::Edge> edges;
    for (auto [a, b] : pairs) edges.emplace_back(V(a), V(b));
    json lex_points = json::array();
    for (int i = 1; i <= 7; ++i) lex_points.push_back("H5.I" + std::to_string(i));
    json notes = {
        {"status", "conjecturally complete"},
        {"polynomial", "twoplanes:5"},
        {"vertices",
         {{"H5_1", {{"borel_points", {"H5.I9"}}}},
          {"H5_2", {{"borel_points", {"H5.I8", "H5.I9"}}}},
          {"H5_lex", {{"borel_points", lex_points}}}}},
        {"edges", {{{"between", {"H5_1", "H5_2"}}, {"witness", "H5.I9"}}}},
    };
    return IncidenceGraph(v, edges, std::move(notes));
  }
  throw std::invalid_argument("unknown built-in graph '" + std::string(name) +
                              "' (expected H4 or H5)");
}

IncidenceGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs 'vertices' and 'edges'");
  auto vertices = j.at("vertices").get<std::vector<std::string>>();
  std::vector<IncidenceGraph::Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph JSON: each edge is a pair of labels");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return IncidenceGraph(std::move(vertices), edges,
                        j.value("annotations", json::object()));
}

json graph_to_json(const IncidenceGraph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  return {{"vertices", g.vertices()}, {"edges", edges}, {"annotations", g.annotations()}};
}

}  // namespace hilbrad

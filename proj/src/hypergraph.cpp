#include "hyperwalk/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hyperwalk {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

double Hyperedge::degree() const {
  double total = 0.0;
  for (const auto& m : members) total += m.gamma;
  return total;
}

double Hyperedge::gamma(std::size_t vertex) const {
  for (const auto& m : members)
    if (m.vertex == vertex) return m.gamma;
  return 0.0;
}

bool Hyperedge::contains(std::size_t vertex) const {
  return std::any_of(members.begin(), members.end(),
                     [vertex](const Member& m) { return m.vertex == vertex; });
}

Hypergraph Hypergraph::build(const HypergraphSpec& spec) { return build(spec, Options{}); }

Hypergraph Hypergraph::build(const HypergraphSpec& spec, Options options) {
  if (spec.vertices.empty()) throw Error(ErrorKind::EmptyHypergraph, "hypergraph declares no vertices");

  Hypergraph h;
  for (std::size_t v = 0; v < spec.vertices.size(); ++v) {
    const auto& name = spec.vertices[v];
    if (!h.lookup_.emplace(name, v).second)
      throw Error(ErrorKind::DuplicateVertex, "vertex '" + name + "' declared more than once");
  }
  h.names_ = std::make_shared<const std::vector<std::string>>(spec.vertices);

  h.edges_.reserve(spec.edges.size());
  for (std::size_t e = 0; e < spec.edges.size(); ++e) {
    const auto& es = spec.edges[e];
    const std::string label = "edge e" + std::to_string(e + 1);
    if (es.members.empty()) throw Error(ErrorKind::EmptyEdge, label + " has no members");
    if (!positive_finite(es.weight))
      throw Error(ErrorKind::NonPositiveWeight, label + " has weight " + std::to_string(es.weight));

    Hyperedge edge{es.weight, {}};
    edge.members.reserve(es.members.size());
    for (const auto& [name, gamma] : es.members) {
      auto it = h.lookup_.find(name);
      if (it == h.lookup_.end())
        throw Error(ErrorKind::UnknownVertex, label + " references undeclared vertex '" + name + "'");
      if (edge.contains(it->second))
        throw Error(ErrorKind::DuplicateMember, label + " lists vertex '" + name + "' twice");
      if (!positive_finite(gamma))
        throw Error(ErrorKind::NonPositiveWeight,
                    label + " gives vertex '" + name + "' weight " + std::to_string(gamma));
      edge.members.push_back({it->second, gamma});
    }
    h.edges_.push_back(std::move(edge));
  }

  h.index();

  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    if (h.incident_[v].empty())
      throw Error(ErrorKind::DisconnectedHypergraph,
                  "vertex '" + h.vertex_name(v) + "' belongs to no hyperedge");
  }
  if (options.require_connected && !h.connected_) {
    throw Error(ErrorKind::DisconnectedHypergraph,
                "clique graph is disconnected (vertex '" + h.vertex_name(0) +
                    "' cannot reach every vertex)");
  }
  return h;
}

void Hypergraph::index() {
  const std::size_t n = names_->size();
  incident_.assign(n, {});
  vertex_degree_.assign(n, 0.0);
  edge_degree_.assign(edges_.size(), 0.0);

  DisjointSets components(n);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& edge = edges_[e];
    edge_degree_[e] = edge.degree();
    for (const auto& m : edge.members) {
      incident_[m.vertex].push_back(e);
      vertex_degree_[m.vertex] += edge.weight;
      components.unite(m.vertex, edge.members.front().vertex);
    }
  }

  connected_ = true;
  const std::size_t root = components.find(0);
  for (std::size_t v = 1; v < n; ++v) {
    if (components.find(v) != root) {
      connected_ = false;
      break;
    }
  }
}

std::optional<std::size_t> Hypergraph::find_vertex(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

bool Hypergraph::edge_independent(double rel_tol) const {
  for (std::size_t v = 0; v < num_vertices(); ++v) {
    const auto& inc = incident_[v];
    const double first = gamma(inc.front(), v);
    for (std::size_t e : inc) {
      const double g = gamma(e, v);
      if (std::abs(g - first) > rel_tol * std::max(std::abs(g), std::abs(first))) return false;
    }
  }
  return true;
}

bool Hypergraph::trivial_weights() const {
  for (const auto& edge : edges_)
    for (const auto& m : edge.members)
      if (m.gamma != 1.0) return false;
  return true;
}

Hypergraph Hypergraph::rescale_edges(std::span<const double> factors) const {
  if (factors.size() != edges_.size())
    throw Error(ErrorKind::InvalidArgument, "rescale_edges needs one factor per edge (got " +
                                                std::to_string(factors.size()) + ", expected " +
                                                std::to_string(edges_.size()) + ")");
  Hypergraph h = *this;
  for (std::size_t e = 0; e < h.edges_.size(); ++e) {
    if (!positive_finite(factors[e]))
      throw Error(ErrorKind::NonPositiveWeight, "scale factor for edge " + std::to_string(e));
    for (auto& m : h.edges_[e].members) m.gamma *= factors[e];
  }
  h.index();
  return h;
}

HypergraphSpec Hypergraph::to_spec() const {
  HypergraphSpec spec;
  spec.vertices = *names_;
  spec.edges.reserve(edges_.size());
  for (const auto& edge : edges_) {
    EdgeSpec es{edge.weight, {}};
    for (const auto& m : edge.members) es.members.emplace_back(vertex_name(m.vertex), m.gamma);
    spec.edges.push_back(std::move(es));
  }
  return spec;
}

WeightedGraph::WeightedGraph(VertexNames names, Matrix weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  const auto n = static_cast<Eigen::Index>(names_->size());
  if (weights_.rows() != n || weights_.cols() != n)
    throw Error(ErrorKind::InvalidArgument, "weight matrix is " + std::to_string(weights_.rows()) + "x" +
                                                std::to_string(weights_.cols()) + " for " +
                                                std::to_string(n) + " vertices");
  for (Eigen::Index u = 0; u < n; ++u) {
    for (Eigen::Index v = 0; v < n; ++v) {
      const double w = weights_(u, v);
      if (!std::isfinite(w) || w < 0.0)
        throw Error(ErrorKind::NonPositiveWeight,
                    "graph weight (" + (*names_)[u] + ", " + (*names_)[v] + ") = " + std::to_string(w));
      if (std::abs(w - weights_(v, u)) > 1e-12 * std::max(1.0, std::abs(w)))
        throw Error(ErrorKind::NotSymmetric, "graph weight (" + (*names_)[u] + ", " + (*names_)[v] + ")");
    }
  }
}

Degrees degrees(const Hypergraph& h) {
  Degrees d{Vector(h.num_vertices()), Vector(h.num_edges())};
  for (std::size_t v = 0; v < h.num_vertices(); ++v) d.vertex(v) = h.vertex_degree(v);
  for (std::size_t e = 0; e < h.num_edges(); ++e) d.edge(e) = h.edge_degree(e);
  return d;
}

IncidenceMatrices incidence_matrices(const Hypergraph& h) {
  const auto n = static_cast<Eigen::Index>(h.num_vertices());
  const auto m = static_cast<Eigen::Index>(h.num_edges());
  IncidenceMatrices out{Matrix::Zero(m, n), Matrix::Zero(n, m), Vector(n), Vector(m)};
  for (Eigen::Index e = 0; e < m; ++e) {
    const auto& edge = h.edge(e);
    for (const auto& mem : edge.members) {
      const auto v = static_cast<Eigen::Index>(mem.vertex);
      out.R(e, v) = mem.gamma;
      out.W(v, e) = edge.weight;
    }
    out.D_E(e) = h.edge_degree(e);
  }
  for (Eigen::Index v = 0; v < n; ++v) out.D_V(v) = h.vertex_degree(v);
  return out;
}

WeightedGraph clique_graph(const Hypergraph& h, SelfLoops loops) {
  const auto n = static_cast<Eigen::Index>(h.num_vertices());
  Matrix adj = Matrix::Zero(n, n);
  for (const auto& edge : h.edges()) {
    for (const auto& a : edge.members) {
      for (const auto& b : edge.members) {
        if (a.vertex == b.vertex && loops == SelfLoops::Exclude) continue;
        adj(a.vertex, b.vertex) = 1.0;
      }
    }
  }
  return WeightedGraph(h.shared_names(), std::move(adj));
}

}  // namespace hyperwalk

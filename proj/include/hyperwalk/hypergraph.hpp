#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hyperwalk/error.hpp"

namespace hyperwalk {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using VertexNames = std::shared_ptr<const std::vector<std::string>>;

/// Largest vertex count handled by the dense matrix routines.
inline constexpr std::size_t kMaxDenseVertices = 4096;

/// Unvalidated hypergraph description, as read from a file.
struct EdgeSpec {
  double weight = 1.0;
  std::vector<std::pair<std::string, double>> members;
};

struct HypergraphSpec {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
};

struct Member {
  std::size_t vertex;
  double gamma;

  friend bool operator==(const Member&, const Member&) = default;
};

struct Hyperedge {
  double weight;
  /// Members in declaration order; gamma > 0 for each.
  std::vector<Member> members;

  /// delta(e): sum of the member vertex weights.
  double degree() const;
  /// gamma_e(v), zero for non-members.
  double gamma(std::size_t vertex) const;
  bool contains(std::size_t vertex) const;

  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

/// Hypergraph with edge-dependent vertex weights. Immutable once built; every
/// instance satisfies the validation rules enforced by build().
class Hypergraph {
 public:
  struct Options {
    /// Reject hypergraphs whose clique graph is disconnected.
    bool require_connected = true;
  };

  static Hypergraph build(const HypergraphSpec& spec);
  static Hypergraph build(const HypergraphSpec& spec, Options options);

  std::size_t num_vertices() const { return names_->size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<std::string>& vertex_names() const { return *names_; }
  const VertexNames& shared_names() const { return names_; }
  const std::string& vertex_name(std::size_t v) const { return (*names_)[v]; }
  std::optional<std::size_t> find_vertex(std::string_view name) const;

  std::span<const Hyperedge> edges() const { return edges_; }
  const Hyperedge& edge(std::size_t e) const { return edges_[e]; }
  /// E(v), ascending edge indices.
  std::span<const std::size_t> incident_edges(std::size_t v) const { return incident_[v]; }

  double gamma(std::size_t e, std::size_t v) const { return edges_[e].gamma(v); }
  /// d(v) = sum of omega(e) over e in E(v).
  double vertex_degree(std::size_t v) const { return vertex_degree_[v]; }
  /// delta(e) = sum of gamma_e(v) over members.
  double edge_degree(std::size_t e) const { return edge_degree_[e]; }

  bool connected() const { return connected_; }
  /// gamma_e(v) agrees across all e in E(v), relative tolerance `rel_tol`.
  bool edge_independent(double rel_tol = 1e-12) const;
  /// gamma_e(v) == 1 everywhere.
  bool trivial_weights() const;

  /// Copy with every gamma of edge e multiplied by factors[e].
  Hypergraph rescale_edges(std::span<const double> factors) const;

  HypergraphSpec to_spec() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return *a.names_ == *b.names_ && a.edges_ == b.edges_;
  }

 private:
  Hypergraph() = default;
  void index();

  VertexNames names_;
  std::unordered_map<std::string, std::size_t> lookup_;
  std::vector<Hyperedge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<double> vertex_degree_;
  std::vector<double> edge_degree_;
  bool connected_ = false;
};

/// Undirected weighted graph over a shared vertex index; the diagonal holds
/// self-loop weights.
class WeightedGraph {
 public:
  /// Throws NotSymmetric (tolerance 1e-12) or NonPositiveWeight for negative entries.
  WeightedGraph(VertexNames names, Matrix weights);

  std::size_t num_vertices() const { return names_->size(); }
  const std::vector<std::string>& vertex_names() const { return *names_; }
  const VertexNames& shared_names() const { return names_; }
  const Matrix& weights() const { return weights_; }
  double weight(std::size_t u, std::size_t v) const { return weights_(u, v); }

 private:
  VertexNames names_;
  Matrix weights_;
};

struct Degrees {
  Vector vertex;  ///< d(v), indexed by vertex
  Vector edge;    ///< delta(e), indexed by edge
};

Degrees degrees(const Hypergraph& h);

struct IncidenceMatrices {
  Matrix R;    ///< |E| x |V|, R(e, v) = gamma_e(v)
  Matrix W;    ///< |V| x |E|, W(v, e) = omega(e) if v in e
  Vector D_V;  ///< diagonal of the vertex-degree matrix
  Vector D_E;  ///< diagonal of the edge-degree matrix
};

IncidenceMatrices incidence_matrices(const Hypergraph& h);

enum class SelfLoops { Include, Exclude };

/// Unweighted clique skeleton G^H: weight 1 on every co-occurring pair.
WeightedGraph clique_graph(const Hypergraph& h, SelfLoops loops = SelfLoops::Include);

}  // namespace hyperwalk

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hyperwalk/hypergraph.hpp"
#include "hyperwalk/walk.hpp"

namespace hyperwalk {

/// Walk on a weighted graph: p(x, y) = w(x, y) / sum_z w(x, z). Throws IsolatedVertex.
TransitionMatrix graph_random_walk(const WeightedGraph& g);

/// Clique graph with w(u, v) = sum over e in E(u, v) of omega(e) gamma(u) gamma(v) / delta(e),
/// self-loops included; its walk equals the walk on h. Throws NotEdgeIndependent.
WeightedGraph edge_independent_to_graph(const Hypergraph& h);

struct ReversibilityVerdict {
  bool reversible;
  std::pair<std::size_t, std::size_t> worst_pair;  ///< u < v
  double violation;                                 ///< max |pi_u p_uv - pi_v p_vu|
  /// Every pair (u < v) whose imbalance exceeds the 1e-10 tolerance, with its imbalance.
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, double>> violations;
};

/// Detailed-balance check. Throws NotStationary if pi P != pi within 1e-9.
ReversibilityVerdict reversibility(const TransitionMatrix& P, const Vector& pi);

struct KolmogorovResult {
  bool holds;
  /// First cycle (v1, ..., vk) whose forward and backward products differ.
  std::optional<std::vector<std::size_t>> witness;
  std::size_t cycles_checked;
};

/// Compares p(v1,v2)...p(vk,v1) against p(v1,vk)...p(v2,v1) over every simple
/// cycle of length 3..max_cycle_len (relative tolerance 1e-9). Two-cycles hold
/// trivially and are skipped. Throws SizeLimit above 12 vertices or 6-cycles.
KolmogorovResult kolmogorov_check(const TransitionMatrix& P, std::size_t max_cycle_len);

struct NonlazyEquivalence {
  WeightedGraph graph;  ///< w(u, v) = sum over e in E(u, v) of omega(e) / (|e| - 1), no self-loops
  double max_dev;       ///< max |P_nonlazy(h) - P(graph)|
};

/// Throws NotTrivialWeights or SingletonEdge.
NonlazyEquivalence nonlazy_trivial_equivalence(const Hypergraph& h);

/// w(u, v) = sum over e in E(u, v) of omega(e) gamma_e(u) gamma_e(v) / delta(e),
/// self-loops included, evaluated on h as given.
WeightedGraph clique_product_weights(const Hypergraph& h);

/// clique_product_weights() after rescaling h so that every rho_e is 1.
WeightedGraph sandwich_weights(const Hypergraph& h);

/// max over v of (max gamma_e(v) / min gamma_e(v)), e ranging over E(v).
double vertex_weight_spread(const Hypergraph& h);

struct SandwichCheck {
  double lambda1_H;  ///< second-smallest eigenvalue of the hypergraph Laplacian
  double lambda1_G;  ///< same for the sandwich graph
  double c;          ///< spread of the rho-normalized weights
  double c_raw;      ///< spread of the weights as given (reported only)
  double pi_gap;     ///< max |pi_G - pi_H|
  bool holds;        ///< lambda1_H / c - 1e-9 <= lambda1_G <= c lambda1_H + 1e-9
};

SandwichCheck sandwich_check(const Hypergraph& h);

}  // namespace hyperwalk

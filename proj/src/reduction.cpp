#include "hyperwalk/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperwalk/linalg.hpp"
#include "hyperwalk/spectral.hpp"
#include "hyperwalk/stationary.hpp"

namespace hyperwalk {

namespace {

constexpr double kReversibilityTolerance = 1e-10;
constexpr double kStationaryTolerance = 1e-9;
constexpr double kCycleRelativeTolerance = 1e-9;
constexpr double kSandwichTolerance = 1e-9;
constexpr std::size_t kMaxKolmogorovVertices = 12;
constexpr std::size_t kMaxKolmogorovCycle = 6;

class CycleSearch {
 public:
  CycleSearch(const TransitionMatrix& P, std::size_t max_len) : P_(P), max_len_(max_len), used_(P.size(), false) {}

  KolmogorovResult run() {
    for (std::size_t start = 0; start < P_.size() && !result_.witness; ++start) {
      path_ = {start};
      used_[start] = true;
      extend();
      used_[start] = false;
    }
    result_.holds = !result_.witness.has_value();
    return result_;
  }

 private:
  bool linked(std::size_t a, std::size_t b) const { return P_(a, b) > 0.0 || P_(b, a) > 0.0; }

  void extend() {
    if (result_.witness) return;
    const std::size_t k = path_.size();
    if (k >= 3 && path_[1] < path_.back() && linked(path_.back(), path_.front())) check();
    if (k == max_len_) return;
    for (std::size_t next = path_.front() + 1; next < P_.size(); ++next) {
      if (used_[next] || !linked(path_.back(), next)) continue;
      used_[next] = true;
      path_.push_back(next);
      extend();
      path_.pop_back();
      used_[next] = false;
      if (result_.witness) return;
    }
  }

  void check() {
    ++result_.cycles_checked;
    const std::size_t k = path_.size();
    double forward = 1.0;
    double backward = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t a = path_[i];
      const std::size_t b = path_[(i + 1) % k];
      forward *= P_(a, b);
      backward *= P_(b, a);
    }
    if (std::abs(forward - backward) > kCycleRelativeTolerance * std::max(forward, backward))
      result_.witness = path_;
  }

  const TransitionMatrix& P_;
  std::size_t max_len_;
  std::vector<bool> used_;
  std::vector<std::size_t> path_;
  KolmogorovResult result_{true, std::nullopt, 0};
};

}  // namespace

TransitionMatrix graph_random_walk(const WeightedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Matrix P = g.weights();
  for (Eigen::Index u = 0; u < n; ++u) {
    const double total = P.row(u).sum();
    if (!(total > 0.0)) throw Error(ErrorKind::IsolatedVertex, "vertex '" + g.vertex_names()[u] + "' has no edges");
    P.row(u) /= total;
  }
  return TransitionMatrix(g.shared_names(), std::move(P));
}

WeightedGraph clique_product_weights(const Hypergraph& h) {
  const auto n = static_cast<Eigen::Index>(h.num_vertices());
  Matrix w = Matrix::Zero(n, n);
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto& edge = h.edge(e);
    const double scale = edge.weight / h.edge_degree(e);
    for (const auto& a : edge.members)
      for (const auto& b : edge.members) w(a.vertex, b.vertex) += scale * a.gamma * b.gamma;
  }
  return WeightedGraph(h.shared_names(), std::move(w));
}

WeightedGraph edge_independent_to_graph(const Hypergraph& h) {
  if (!h.edge_independent())
    throw Error(ErrorKind::NotEdgeIndependent, "clique-graph equivalence needs edge-independent vertex weights");
  return clique_product_weights(h);
}

ReversibilityVerdict reversibility(const TransitionMatrix& P, const Vector& pi) {
  const double residual = stationarity_residual(P, pi);
  if (residual > kStationaryTolerance)
    throw Error(ErrorKind::NotStationary, "max |pi P - pi| = " + std::to_string(residual));

  ReversibilityVerdict out{true, {0, 0}, 0.0, {}};
  for (std::size_t u = 0; u < P.size(); ++u) {
    for (std::size_t v = u + 1; v < P.size(); ++v) {
      const double gap = std::abs(pi(u) * P(u, v) - pi(v) * P(v, u));
      if (gap > out.violation) {
        out.violation = gap;
        out.worst_pair = {u, v};
      }
      if (gap > kReversibilityTolerance) out.violations.push_back({{u, v}, gap});
    }
  }
  out.reversible = out.violation <= kReversibilityTolerance;
  return out;
}

KolmogorovResult kolmogorov_check(const TransitionMatrix& P, std::size_t max_cycle_len) {
  if (P.size() > kMaxKolmogorovVertices)
    throw Error(ErrorKind::SizeLimit, "Kolmogorov cycle enumeration is limited to " +
                                          std::to_string(kMaxKolmogorovVertices) + " vertices");
  if (max_cycle_len > kMaxKolmogorovCycle)
    throw Error(ErrorKind::SizeLimit, "cycle length " + std::to_string(max_cycle_len) + " exceeds " +
                                          std::to_string(kMaxKolmogorovCycle));
  return CycleSearch(P, max_cycle_len).run();
}

NonlazyEquivalence nonlazy_trivial_equivalence(const Hypergraph& h) {
  if (!h.trivial_weights()) throw Error(ErrorKind::NotTrivialWeights, "every vertex weight must be 1");
  const auto P_h = nonlazy_transition_matrix(h);

  const auto n = static_cast<Eigen::Index>(h.num_vertices());
  Matrix w = Matrix::Zero(n, n);
  for (const auto& edge : h.edges()) {
    const double share = edge.weight / static_cast<double>(edge.members.size() - 1);
    for (const auto& a : edge.members)
      for (const auto& b : edge.members)
        if (a.vertex != b.vertex) w(a.vertex, b.vertex) += share;
  }
  WeightedGraph graph(h.shared_names(), std::move(w));
  const double dev = (P_h.matrix() - graph_random_walk(graph).matrix()).cwiseAbs().maxCoeff();
  return {std::move(graph), dev};
}

WeightedGraph sandwich_weights(const Hypergraph& h) { return clique_product_weights(rho_normalized(h)); }

double vertex_weight_spread(const Hypergraph& h) {
  double c = 1.0;
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t e : h.incident_edges(v)) {
      lo = std::min(lo, h.gamma(e, v));
      hi = std::max(hi, h.gamma(e, v));
    }
    c = std::max(c, hi / lo);
  }
  return c;
}

SandwichCheck sandwich_check(const Hypergraph& h) {
  const auto rho = stationary_rho(h);
  const Hypergraph scaled = rho_normalized(h, rho);

  const auto P_h = transition_matrix(h);
  const auto lap_h = laplacian(P_h, rho.pi);

  const WeightedGraph g = clique_product_weights(scaled);
  const auto P_g = graph_random_walk(g);
  const Vector pi_g = stationary_direct(P_g).pi;
  const auto lap_g = laplacian(P_g, pi_g);

  SandwichCheck out{};
  out.lambda1_H = spectral_gap(lap_h.L);
  out.lambda1_G = spectral_gap(lap_g.L);
  out.c = vertex_weight_spread(scaled);
  out.c_raw = vertex_weight_spread(h);
  out.pi_gap = (pi_g - rho.pi).lpNorm<Eigen::Infinity>();
  out.holds = out.lambda1_H / out.c - kSandwichTolerance <= out.lambda1_G &&
              out.lambda1_G <= out.c * out.lambda1_H + kSandwichTolerance;
  return out;
}

}  // namespace hyperwalk

#include "hyperwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hyperwalk {

namespace {

void check_dense_size(std::size_t n) {
  if (n > kMaxDenseVertices)
    throw Error(ErrorKind::SizeLimit, std::to_string(n) + " vertices exceeds the dense limit of " +
                                          std::to_string(kMaxDenseVertices));
}

}  // namespace

TransitionMatrix::TransitionMatrix(VertexNames names, Matrix P) : names_(std::move(names)), P_(std::move(P)) {
  const auto n = static_cast<Eigen::Index>(names_->size());
  if (P_.rows() != n || P_.cols() != n)
    throw Error(ErrorKind::InvalidArgument, "transition matrix shape does not match " + std::to_string(n) +
                                                " vertices");
  for (Eigen::Index r = 0; r < n; ++r) {
    const double sum = P_.row(r).sum();
    if (!(std::abs(sum - 1.0) <= 1e-12))
      throw Error(ErrorKind::BadDistribution,
                  "row '" + (*names_)[r] + "' sums to " + std::to_string(sum) + ", not 1");
    for (Eigen::Index c = 0; c < n; ++c) {
      const double p = P_(r, c);
      if (!(p >= 0.0 && p <= 1.0 + 1e-12))
        throw Error(ErrorKind::BadDistribution, "entry (" + (*names_)[r] + ", " + (*names_)[c] + ") = " +
                                                    std::to_string(p));
    }
  }
}

TransitionMatrix transition_matrix(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  check_dense_size(n);
  Matrix P = Matrix::Zero(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const double dv = h.vertex_degree(v);
    for (std::size_t e : h.incident_edges(v)) {
      const auto& edge = h.edge(e);
      const double pick_edge = edge.weight / dv;
      const double delta = h.edge_degree(e);
      for (const auto& m : edge.members) P(v, m.vertex) += pick_edge * (m.gamma / delta);
    }
  }
  return TransitionMatrix(h.shared_names(), std::move(P));
}

TransitionMatrix nonlazy_transition_matrix(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  check_dense_size(n);
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (h.edge(e).members.size() < 2)
      throw Error(ErrorKind::SingletonEdge, "edge e" + std::to_string(e + 1) + " has the single member '" +
                                                h.vertex_name(h.edge(e).members.front().vertex) + "'");
  }
  Matrix P = Matrix::Zero(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const double dv = h.vertex_degree(v);
    for (std::size_t e : h.incident_edges(v)) {
      const auto& edge = h.edge(e);
      const double pick_edge = edge.weight / dv;
      const double rest = h.edge_degree(e) - edge.gamma(v);
      for (const auto& m : edge.members)
        if (m.vertex != v) P(v, m.vertex) += pick_edge * (m.gamma / rest);
    }
  }
  return TransitionMatrix(h.shared_names(), std::move(P));
}

TransitionMatrix restart_matrix(const TransitionMatrix& P, double beta, const Vector& restart) {
  if (!(beta > 0.0 && beta < 1.0))
    throw Error(ErrorKind::BadBeta, "restart probability " + std::to_string(beta) + " is outside (0, 1)");
  const auto n = static_cast<Eigen::Index>(P.size());
  if (restart.size() != n)
    throw Error(ErrorKind::BadDistribution, "restart distribution has " + std::to_string(restart.size()) +
                                                " entries for " + std::to_string(n) + " vertices");
  if ((restart.array() < 0.0).any() || std::abs(restart.sum() - 1.0) > 1e-12)
    throw Error(ErrorKind::BadDistribution, "restart distribution must be nonnegative and sum to 1");

  Matrix out = (1.0 - beta) * P.matrix();
  out.rowwise() += beta * restart.transpose();
  return TransitionMatrix(P.shared_names(), std::move(out));
}

TransitionMatrix restart_matrix(const TransitionMatrix& P, double beta) {
  const auto n = static_cast<Eigen::Index>(P.size());
  return restart_matrix(P, beta, Vector::Constant(n, 1.0 / static_cast<double>(n)));
}

Vector point_distribution(std::size_t n, std::size_t vertex) {
  Vector r = Vector::Zero(static_cast<Eigen::Index>(n));
  r(static_cast<Eigen::Index>(vertex)) = 1.0;
  return r;
}

std::vector<std::size_t> simulate(const TransitionMatrix& P, std::size_t start, std::size_t steps,
                                  std::uint64_t seed) {
  const std::size_t n = P.size();
  if (start >= n) throw Error(ErrorKind::UnknownVertex, "start index " + std::to_string(start));

  // Cumulative rows; from the last positive entry onward each row is pinned to 1
  // so rounding never lets a draw fall off the end.
  Matrix cumulative(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t c = 0; c < n; ++c) {
      acc += P(r, c);
      cumulative(r, c) = acc;
      if (P(r, c) > 0.0) last_positive = c;
    }
    for (std::size_t c = last_positive; c < n; ++c) cumulative(r, c) = 1.0;
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::size_t> path;
  path.reserve(steps + 1);
  path.push_back(start);
  std::size_t at = start;
  for (std::size_t t = 0; t < steps; ++t) {
    const double u = unit(rng);
    const auto row = cumulative.row(at);
    std::size_t next = 0;
    while (row(next) <= u) ++next;
    at = next;
    path.push_back(at);
  }
  return path;
}

std::vector<std::size_t> simulate(const TransitionMatrix& P, std::string_view start, std::size_t steps,
                                  std::uint64_t seed) {
  const auto& names = P.vertex_names();
  auto it = std::find(names.begin(), names.end(), start);
  if (it == names.end()) throw Error(ErrorKind::UnknownVertex, "no vertex named '" + std::string(start) + "'");
  return simulate(P, static_cast<std::size_t>(it - names.begin()), steps, seed);
}

double stationarity_residual(const TransitionMatrix& P, const Vector& pi) {
  const Vector moved = P.matrix().transpose() * pi;
  return (moved - pi).cwiseAbs().maxCoeff();
}

}  // namespace hyperwalk

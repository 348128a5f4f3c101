#include "hyperwalk/stationary.hpp"

#include <cmath>

#include <Eigen/LU>

namespace hyperwalk {

namespace {

constexpr double kPowerTolerance = 1e-12;
constexpr std::size_t kPowerCap = 1'000'000;
constexpr std::size_t kStallWindow = 1000;

Vector edge_weights(const Hypergraph& h) {
  Vector w(h.num_edges());
  for (std::size_t e = 0; e < h.num_edges(); ++e) w(e) = h.edge(e).weight;
  return w;
}

// Solve (A - I) rho = 0 with the last equation replaced by omega . rho = 1.
Vector rho_by_elimination(const Matrix& A, const Vector& omega) {
  const auto m = A.rows();
  Matrix system = A - Matrix::Identity(m, m);
  system.row(m - 1) = omega.transpose();
  Vector rhs = Vector::Zero(m);
  rhs(m - 1) = 1.0;
  Eigen::FullPivLU<Matrix> lu(system);
  if (!lu.isInvertible()) throw Error(ErrorKind::ConvergenceFailure, "rho system is rank deficient");
  return lu.solve(rhs);
}

}  // namespace

std::string_view to_string(StationaryMethod method) {
  switch (method) {
    case StationaryMethod::RhoEigenvector: return "rho";
    case StationaryMethod::DirectSolve: return "direct";
    case StationaryMethod::ClosedFormEdgeIndependent: return "edge_independent";
    case StationaryMethod::ClosedFormTrivial: return "trivial";
  }
  return "unknown";
}

Matrix rho_matrix(const Hypergraph& h) {
  const auto m = static_cast<Eigen::Index>(h.num_edges());
  Matrix A = Matrix::Zero(m, m);
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    const double dv = h.vertex_degree(v);
    const auto inc = h.incident_edges(v);
    for (std::size_t f : inc) {
      const double contribution = h.edge(f).weight * (h.gamma(f, v) / h.edge_degree(f)) / dv;
      for (std::size_t e : inc) A(e, f) += contribution;
    }
  }
  return A;
}

StationaryResult stationary_rho(const Hypergraph& h) {
  if (!h.connected())
    throw Error(ErrorKind::DisconnectedHypergraph, "stationary_rho requires a connected hypergraph");
  const Matrix A = rho_matrix(h);
  const Vector omega = edge_weights(h);
  const auto m = A.rows();

  // omega^T A = omega^T, so the normalization omega . rho = 1 is preserved by
  // each multiplication up to rounding; renormalize anyway.
  Vector rho = Vector::Constant(m, 1.0 / omega.sum());
  StationaryResult out{Vector(), Vector(), StationaryMethod::RhoEigenvector, 0.0, 0, false};
  bool converged = false;
  double window_start_diff = 0.0;
  for (std::size_t it = 1; it <= kPowerCap; ++it) {
    Vector next = A * rho;
    next /= omega.dot(next);
    const double diff = (next - rho).lpNorm<Eigen::Infinity>();
    rho = std::move(next);
    out.iterations = it;
    if (diff < kPowerTolerance) {
      converged = true;
      break;
    }
    if (it % kStallWindow == 0) {
      // Geometric rate over the window; bail out early when the cap is out of reach.
      if (window_start_diff > 0.0 && diff > 0.0) {
        const double rate = std::pow(diff / window_start_diff, 1.0 / static_cast<double>(kStallWindow));
        if (rate >= 1.0) break;
        const double needed = std::log(kPowerTolerance / diff) / std::log(rate);
        if (needed > static_cast<double>(kPowerCap - it)) break;
      }
      window_start_diff = diff;
    }
  }
  if (!converged) {
    rho = rho_by_elimination(A, omega);
    out.used_fallback = true;
    if ((rho.array() <= 0.0).any() || (A * rho - rho).lpNorm<Eigen::Infinity>() > 1e-9)
      throw Error(ErrorKind::ConvergenceFailure, "no positive eigenvector for eigenvalue 1 of the rho matrix");
  }

  Vector pi = Vector::Zero(h.num_vertices());
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto& edge = h.edge(e);
    const double delta = h.edge_degree(e);
    for (const auto& mem : edge.members) pi(mem.vertex) += rho(e) * edge.weight * (mem.gamma / delta);
  }
  out.pi = std::move(pi);
  out.rho = std::move(rho);
  out.residual = stationarity_residual(transition_matrix(h), out.pi);
  return out;
}

StationaryResult stationary_direct(const TransitionMatrix& P) {
  const auto n = static_cast<Eigen::Index>(P.size());
  Matrix system = P.matrix().transpose() - Matrix::Identity(n, n);
  system.row(n - 1).setOnes();
  Vector rhs = Vector::Zero(n);
  rhs(n - 1) = 1.0;

  Eigen::PartialPivLU<Matrix> lu(system);
  if (!(lu.rcond() > 1e-14))
    throw Error(ErrorKind::SingularSystem, "stationary system is singular (rcond " + std::to_string(lu.rcond()) +
                                               "); is the chain irreducible?");
  Vector pi = lu.solve(rhs);
  // One step of iterative refinement.
  pi += lu.solve(rhs - system * pi);

  StationaryResult out{std::move(pi), Vector(), StationaryMethod::DirectSolve, 0.0, 0, false};
  out.residual = stationarity_residual(P, out.pi);
  return out;
}

StationaryResult stationary_edge_independent(const Hypergraph& h) {
  if (!h.edge_independent())
    throw Error(ErrorKind::NotEdgeIndependent, "some vertex has different weights in different hyperedges");
  Vector pi(h.num_vertices());
  for (std::size_t v = 0; v < h.num_vertices(); ++v)
    pi(v) = h.vertex_degree(v) * h.gamma(h.incident_edges(v).front(), v);
  pi /= pi.sum();
  const auto method = h.trivial_weights() ? StationaryMethod::ClosedFormTrivial
                                          : StationaryMethod::ClosedFormEdgeIndependent;
  StationaryResult out{std::move(pi), Vector(), method, 0.0, 0, false};
  out.residual = stationarity_residual(transition_matrix(h), out.pi);
  return out;
}

Vector naive_stationary(const Hypergraph& h) {
  Vector pi(h.num_vertices());
  for (std::size_t v = 0; v < h.num_vertices(); ++v) pi(v) = h.vertex_degree(v);
  return pi / pi.sum();
}

Hypergraph rho_normalized(const Hypergraph& h) { return rho_normalized(h, stationary_rho(h)); }

Hypergraph rho_normalized(const Hypergraph& h, const StationaryResult& rho) {
  if (rho.method != StationaryMethod::RhoEigenvector || rho.rho.size() != static_cast<Eigen::Index>(h.num_edges()))
    throw Error(ErrorKind::InvalidArgument, "rho_normalized needs a rho-eigenvector result for this hypergraph");
  std::vector<double> factors(h.num_edges());
  for (std::size_t e = 0; e < h.num_edges(); ++e) factors[e] = rho.rho(e) / h.edge_degree(e);
  return h.rescale_edges(factors);
}

}  // namespace hyperwalk

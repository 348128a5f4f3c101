#pragma once

#include <string_view>

#include "hyperwalk/hypergraph.hpp"
#include "hyperwalk/walk.hpp"

namespace hyperwalk {

enum class StationaryMethod { RhoEigenvector, DirectSolve, ClosedFormEdgeIndependent, ClosedFormTrivial };

std::string_view to_string(StationaryMethod method);

struct StationaryResult {
  Vector pi;
  /// Per-edge constants rho_e (over delta-normalized vertex weights); empty
  /// unless method == RhoEigenvector.
  Vector rho;
  StationaryMethod method;
  /// max |pi P - pi| against the lazy walk (or the supplied matrix).
  double residual = 0.0;
  /// Power iterations spent on rho; zero for other methods.
  std::size_t iterations = 0;
  /// rho came from the elimination fallback rather than power iteration.
  bool used_fallback = false;
};

/// The |E| x |E| matrix A(e, f) = sum over v in e∩f of omega(f) gamma_f(v) / d(v),
/// built after scaling each edge to delta(e) = 1. omega^T A = omega^T, so its
/// Perron root is 1.
Matrix rho_matrix(const Hypergraph& h);

/// Stationary distribution pi_v = sum over e in E(v) of rho_e omega(e) gamma_e(v),
/// with rho the Perron eigenvector of rho_matrix() scaled to sum rho_e omega(e) = 1.
/// Power iteration (tolerance 1e-12, cap 1e6) with a full-pivot elimination
/// fallback. Throws DisconnectedHypergraph or ConvergenceFailure.
StationaryResult stationary_rho(const Hypergraph& h);

/// Solves pi P = pi, sum pi = 1 by LU with partial pivoting. Throws SingularSystem.
StationaryResult stationary_direct(const TransitionMatrix& P);

/// pi_v proportional to d(v) gamma(v). Throws NotEdgeIndependent.
StationaryResult stationary_edge_independent(const Hypergraph& h);

/// d(v) / sum d(u). Ignores the vertex weights entirely, so it is wrong for
/// most edge-dependent hypergraphs; kept to generate counterexamples.
Vector naive_stationary(const Hypergraph& h);

/// Copy of h with gamma_e(v) replaced by rho_e gamma_e(v) / delta(e), after
/// which pi_v = sum over e in E(v) of omega(e) gamma_e(v) (every rho_e is 1).
Hypergraph rho_normalized(const Hypergraph& h);
Hypergraph rho_normalized(const Hypergraph& h, const StationaryResult& rho);

}  // namespace hyperwalk

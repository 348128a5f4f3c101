#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hyperwalk/hypergraph.hpp"

namespace hyperwalk {

/// Identifier of the PRNG behind every seeded routine (std::mt19937_64).
inline constexpr std::string_view kPrngAlgorithm = "mt19937_64";

/// Row-stochastic matrix over a vertex set.
class TransitionMatrix {
 public:
  /// Validates row sums (1e-12) and entry range; throws BadDistribution.
  TransitionMatrix(VertexNames names, Matrix P);

  std::size_t size() const { return names_->size(); }
  const Matrix& matrix() const { return P_; }
  double operator()(std::size_t from, std::size_t to) const { return P_(from, to); }
  const std::vector<std::string>& vertex_names() const { return *names_; }
  const VertexNames& shared_names() const { return names_; }

 private:
  VertexNames names_;
  Matrix P_;
};

/// Lazy walk: p(v,w) = sum over e in E(v) of (omega(e)/d(v)) (gamma_e(w)/delta(e)).
TransitionMatrix transition_matrix(const Hypergraph& h);

/// Non-lazy walk: the second step never picks the current vertex.
/// Throws SingletonEdge if any edge has a single member.
TransitionMatrix nonlazy_transition_matrix(const Hypergraph& h);

/// (1 - beta) P + beta 1 r^T. Throws BadBeta unless 0 < beta < 1.
TransitionMatrix restart_matrix(const TransitionMatrix& P, double beta, const Vector& restart);
/// Restart to the uniform distribution.
TransitionMatrix restart_matrix(const TransitionMatrix& P, double beta);

/// Restart distribution concentrated on one vertex.
Vector point_distribution(std::size_t n, std::size_t vertex);

enum class WalkKind { Lazy, NonLazy, Restart };

/// Trajectory of `steps` moves from `start`; length steps + 1. Deterministic for a seed.
std::vector<std::size_t> simulate(const TransitionMatrix& P, std::size_t start, std::size_t steps,
                                  std::uint64_t seed);
/// As above, naming the start vertex. Throws UnknownVertex.
std::vector<std::size_t> simulate(const TransitionMatrix& P, std::string_view start, std::size_t steps,
                                  std::uint64_t seed);

/// max |pi P - pi|.
double stationarity_residual(const TransitionMatrix& P, const Vector& pi);

}  // namespace hyperwalk

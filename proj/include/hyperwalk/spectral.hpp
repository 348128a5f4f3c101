#pragma once

#include <optional>
#include <vector>

#include "hyperwalk/hypergraph.hpp"
#include "hyperwalk/walk.hpp"

namespace hyperwalk {

/// Largest vertex count for exhaustive Cheeger enumeration.
inline constexpr std::size_t kMaxCheegerVertices = 24;

struct HypergraphLaplacian {
  Matrix L;           ///< Pi - (Pi P + P^T Pi) / 2
  Vector pi;          ///< stationary distribution used for Pi
  Matrix normalized;  ///< Pi^{-1/2} L Pi^{-1/2}
};

/// Random-walk Laplacian of the lazy walk on h, with pi from stationary_rho.
HypergraphLaplacian laplacian(const Hypergraph& h);
/// Same construction for an arbitrary chain with stationary distribution pi.
HypergraphLaplacian laplacian(const TransitionMatrix& P, const Vector& pi);

/// Second-smallest eigenvalue. For an irreducible chain the kernel of either
/// Laplacian is one-dimensional, so this is the smallest non-zero eigenvalue.
double spectral_gap(const Matrix& symmetric);

struct CheegerResult {
  double phi;
  /// Lexicographically smallest minimizing subset, ascending vertex indices.
  std::vector<std::size_t> subset;
};

/// min over S with 0 < pi(S) <= 1/2 of sum_{x in S, y not in S} pi_x p_xy / pi(S),
/// by exhaustive enumeration. pi(S) <= 1/2 is tested with slack 1e-12.
/// Throws SizeLimit above kMaxCheegerVertices.
CheegerResult cheeger_constant(const TransitionMatrix& P, const Vector& pi);
CheegerResult cheeger_constant(const Hypergraph& h);

struct CheegerCheck {
  double lambda;               ///< spectral gap of the normalized Laplacian
  double lambda_unnormalized;  ///< spectral gap of L itself (reported only)
  double phi;
  bool holds;                  ///< phi^2/2 - 1e-9 <= lambda <= 2 phi + 1e-9
};

CheegerCheck check_cheeger(const Hypergraph& h);

struct MixingBound {
  double bound;     ///< ceil((8 beta1 / phi^2) log(1 / (2 eps sqrt(d_min beta2)))), or 0 if vacuous
  /// ceil((2 / (beta1 phi^2)) log(...)) with the same logarithm. The laziness beta1
  /// belongs in the denominator; `bound` can undercut the true mixing time when beta1 < 1/2.
  double corrected_bound;
  bool vacuous;     ///< the logarithm was non-positive
  double beta1;     ///< min gamma_e(v) / delta(e)
  double beta2;     ///< min gamma_e(v), after rescaling every rho_e to 1
  double d_min;
  double phi;
  double log_term;
};

/// Mixing-time upper bound for the lazy walk. Requires 0 < eps < 1/2.
MixingBound mixing_time_bound(const Hypergraph& h, double eps);

/// The bound itself from its ingredients; a non-positive logarithm gives 0
/// with `vacuous` set.
MixingBound evaluate_mixing_bound(double beta1, double beta2, double d_min, double phi, double eps);

/// Half the L1 distance.
double total_variation(const Vector& a, const Vector& b);

struct MixingMeasurement {
  /// First t with max_s ||P^t(s, .) - pi||_TV <= eps; empty if the cap was hit.
  std::optional<std::size_t> steps;
  double distance;  ///< worst-start TV distance at `steps` (or at the cap)
};

MixingMeasurement empirical_mixing_time(const TransitionMatrix& P, const Vector& pi, double eps,
                                        std::size_t cap);

struct SpectralReport {
  std::vector<double> eigenvalues;  ///< of L, ascending
  double lambda;                    ///< spectral gap of the normalized Laplacian
  double lambda_unnormalized;
  Vector pi;
  std::optional<CheegerResult> cheeger;  ///< absent above kMaxCheegerVertices
  std::optional<MixingBound> mixing;
};

SpectralReport spectral_report(const Hypergraph& h, double eps);

}  // namespace hyperwalk

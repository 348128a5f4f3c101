#include "hyperwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "hyperwalk/linalg.hpp"
#include "hyperwalk/stationary.hpp"

namespace hyperwalk {

namespace {

constexpr double kHalfSlack = 1e-12;
constexpr double kCheegerTolerance = 1e-9;

}  // namespace

HypergraphLaplacian laplacian(const TransitionMatrix& P, const Vector& pi) {
  const auto n = static_cast<Eigen::Index>(P.size());
  if (pi.size() != n) throw Error(ErrorKind::InvalidArgument, "pi has the wrong length");
  if ((pi.array() <= 0.0).any())
    throw Error(ErrorKind::BadDistribution, "stationary distribution must be strictly positive");

  const Matrix flow = pi.asDiagonal() * P.matrix();
  Matrix L = -0.5 * (flow + flow.transpose());
  L.diagonal() += pi;
  // Exact symmetry; the two halves above agree only up to rounding.
  L = 0.5 * (L + L.transpose()).eval();

  const Vector inv_sqrt = pi.cwiseSqrt().cwiseInverse();
  Matrix normalized = inv_sqrt.asDiagonal() * L * inv_sqrt.asDiagonal();
  normalized = 0.5 * (normalized + normalized.transpose()).eval();
  return {std::move(L), pi, std::move(normalized)};
}

HypergraphLaplacian laplacian(const Hypergraph& h) {
  return laplacian(transition_matrix(h), stationary_rho(h).pi);
}

double spectral_gap(const Matrix& symmetric) {
  if (symmetric.rows() < 2) throw Error(ErrorKind::InvalidArgument, "spectral gap needs at least two vertices");
  return jacobi_eigen(symmetric).values(1);
}

CheegerResult cheeger_constant(const TransitionMatrix& P, const Vector& pi) {
  const std::size_t n = P.size();
  if (n > kMaxCheegerVertices)
    throw Error(ErrorKind::SizeLimit, std::to_string(n) + " vertices; exhaustive Cheeger enumeration stops at " +
                                          std::to_string(kMaxCheegerVertices));
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "Cheeger constant needs at least two vertices");

  CheegerResult best{std::numeric_limits<double>::infinity(), {}};
  std::vector<std::size_t> inside;
  std::vector<std::size_t> outside;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    inside.clear();
    outside.clear();
    for (std::size_t v = 0; v < n; ++v) ((mask >> v) & 1U ? inside : outside).push_back(v);

    double mass = 0.0;
    for (std::size_t x : inside) mass += pi(x);
    if (mass > 0.5 + kHalfSlack) continue;

    double flow = 0.0;
    for (std::size_t x : inside)
      for (std::size_t y : outside) flow += pi(x) * P(x, y);
    const double ratio = flow / mass;

    if (ratio < best.phi || (ratio == best.phi && inside < best.subset)) {
      best.phi = ratio;
      best.subset = inside;
    }
  }
  return best;
}

CheegerResult cheeger_constant(const Hypergraph& h) {
  return cheeger_constant(transition_matrix(h), stationary_rho(h).pi);
}

CheegerCheck check_cheeger(const Hypergraph& h) {
  const auto P = transition_matrix(h);
  const auto pi = stationary_rho(h).pi;
  const auto lap = laplacian(P, pi);
  CheegerCheck out{};
  out.phi = cheeger_constant(P, pi).phi;
  out.lambda = spectral_gap(lap.normalized);
  out.lambda_unnormalized = spectral_gap(lap.L);
  out.holds = out.phi * out.phi / 2.0 - kCheegerTolerance <= out.lambda &&
              out.lambda <= 2.0 * out.phi + kCheegerTolerance;
  return out;
}

MixingBound mixing_time_bound(const Hypergraph& h, double eps) {
  if (!(eps > 0.0 && eps < 0.5))
    throw Error(ErrorKind::InvalidArgument, "epsilon " + std::to_string(eps) + " is outside (0, 1/2)");
  if (h.num_vertices() > kMaxCheegerVertices)
    throw Error(ErrorKind::SizeLimit, "mixing bound needs the Cheeger constant (at most " +
                                          std::to_string(kMaxCheegerVertices) + " vertices)");

  const auto rho = stationary_rho(h);
  const Hypergraph scaled = rho_normalized(h, rho);

  MixingBound out{};
  out.beta1 = std::numeric_limits<double>::infinity();
  out.beta2 = std::numeric_limits<double>::infinity();
  out.d_min = std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < scaled.num_edges(); ++e) {
    for (const auto& m : scaled.edge(e).members) {
      out.beta1 = std::min(out.beta1, m.gamma / scaled.edge_degree(e));
      out.beta2 = std::min(out.beta2, m.gamma);
    }
  }
  for (std::size_t v = 0; v < scaled.num_vertices(); ++v) out.d_min = std::min(out.d_min, scaled.vertex_degree(v));

  const double phi = cheeger_constant(transition_matrix(h), rho.pi).phi;
  return evaluate_mixing_bound(out.beta1, out.beta2, out.d_min, phi, eps);
}

MixingBound evaluate_mixing_bound(double beta1, double beta2, double d_min, double phi, double eps) {
  MixingBound out{};
  out.beta1 = beta1;
  out.beta2 = beta2;
  out.d_min = d_min;
  out.phi = phi;
  out.log_term = std::log(1.0 / (2.0 * eps * std::sqrt(d_min * beta2)));
  out.vacuous = !(out.log_term > 0.0);
  out.bound = out.vacuous ? 0.0 : std::ceil(8.0 * beta1 / (phi * phi) * out.log_term);
  // Jerison's comparison E_{P*P} >= 2 delta E_{(P+P*)/2} with 1 - b >= phi^2/2 gives a
  // Dirichlet ratio of at least delta phi^2, hence alpha <= 1 - delta phi^2 / 2.
  out.corrected_bound = out.vacuous ? 0.0 : std::ceil(2.0 / (beta1 * phi * phi) * out.log_term);
  return out;
}

double total_variation(const Vector& a, const Vector& b) { return 0.5 * (a - b).lpNorm<1>(); }

MixingMeasurement empirical_mixing_time(const TransitionMatrix& P, const Vector& pi, double eps, std::size_t cap) {
  const auto n = static_cast<Eigen::Index>(P.size());
  if (pi.size() != n) throw Error(ErrorKind::InvalidArgument, "pi has the wrong length");

  auto worst = [&pi, n](const Matrix& powers) {
    double d = 0.0;
    for (Eigen::Index s = 0; s < n; ++s) d = std::max(d, total_variation(powers.row(s).transpose(), pi));
    return d;
  };

  Matrix powers = Matrix::Identity(n, n);
  double distance = worst(powers);
  for (std::size_t t = 0;; ++t) {
    if (distance <= eps) return {t, distance};
    if (t == cap) return {std::nullopt, distance};
    powers = (powers * P.matrix()).eval();
    distance = worst(powers);
  }
}

SpectralReport spectral_report(const Hypergraph& h, double eps) {
  const auto P = transition_matrix(h);
  const auto pi = stationary_rho(h).pi;
  const auto lap = laplacian(P, pi);

  SpectralReport out;
  out.eigenvalues = eigenvalues_symmetric(lap.L);
  out.lambda = h.num_vertices() > 1 ? spectral_gap(lap.normalized) : 0.0;
  out.lambda_unnormalized = out.eigenvalues.size() > 1 ? out.eigenvalues[1] : 0.0;
  out.pi = pi;
  if (h.num_vertices() > 1 && h.num_vertices() <= kMaxCheegerVertices) {
    out.cheeger = cheeger_constant(P, pi);
    out.mixing = mixing_time_bound(h, eps);
  }
  return out;
}

}  // namespace hyperwalk

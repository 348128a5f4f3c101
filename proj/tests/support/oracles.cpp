#include "oracles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace hyperwalk::testkit {

namespace {

Rational integral(double x) {
  if (x != std::floor(x)) throw std::invalid_argument("exact oracle needs integer weights");
  return Rational(static_cast<long long>(x));
}

void enumerate(const TransitionMatrix& P, const Vector& pi, std::vector<bool>& in, std::size_t v,
               CheegerResult& best) {
  const std::size_t n = P.size();
  if (v == n) {
    std::vector<std::size_t> inside, outside;
    for (std::size_t x = 0; x < n; ++x) (in[x] ? inside : outside).push_back(x);
    if (inside.empty() || outside.empty()) return;
    double mass = 0.0;
    for (std::size_t x : inside) mass += pi(x);
    if (mass > 0.5 + 1e-12) return;
    double flow = 0.0;
    for (std::size_t x : inside)
      for (std::size_t y : outside) flow += pi(x) * P(x, y);
    const double ratio = flow / mass;
    if (ratio < best.phi || (ratio == best.phi && inside < best.subset)) best = {ratio, inside};
    return;
  }
  in[v] = true;
  enumerate(P, pi, in, v + 1, best);
  in[v] = false;
  enumerate(P, pi, in, v + 1, best);
}

}  // namespace

RationalMatrix exact_transition(const HypergraphSpec& spec) {
  const std::size_t n = spec.vertices.size();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < n; ++v) index[spec.vertices[v]] = v;

  std::vector<Rational> d(n, Rational(0));
  for (const auto& e : spec.edges)
    for (const auto& [name, g] : e.members) d[index.at(name)] += integral(e.weight);

  RationalMatrix P(n, std::vector<Rational>(n, Rational(0)));
  for (const auto& e : spec.edges) {
    Rational delta(0);
    for (const auto& [name, g] : e.members) delta += integral(g);
    for (const auto& [from, gf] : e.members) {
      const std::size_t v = index.at(from);
      for (const auto& [to, gt] : e.members)
        P[v][index.at(to)] += integral(e.weight) / d[v] * integral(gt) / delta;
    }
  }
  return P;
}

std::vector<Rational> exact_stationary(const RationalMatrix& P) {
  const std::size_t n = P.size();
  // Rows: (P^T - I) with the last equation replaced by sum pi = 1.
  RationalMatrix A(n, std::vector<Rational>(n + 1, Rational(0)));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) A[i][j] = P[j][i] - (i == j ? Rational(1) : Rational(0));
  }
  for (std::size_t j = 0; j < n; ++j) A[n - 1][j] = 1;
  A[n - 1][n] = 1;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && A[pivot][col].numerator() == 0) ++pivot;
    if (pivot == n) throw std::runtime_error("singular system");
    std::swap(A[col], A[pivot]);
    const Rational lead = A[col][col];
    for (auto& x : A[col]) x /= lead;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || A[r][col].numerator() == 0) continue;
      const Rational factor = A[r][col];
      for (std::size_t c = col; c <= n; ++c) A[r][c] -= factor * A[col][c];
    }
  }
  std::vector<Rational> pi(n);
  for (std::size_t i = 0; i < n; ++i) pi[i] = A[i][n];
  return pi;
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Matrix factored_transition(const Hypergraph& h) {
  const auto m = incidence_matrices(h);
  return m.D_V.cwiseInverse().asDiagonal() * m.W * m.D_E.cwiseInverse().asDiagonal() * m.R;
}

CheegerResult cheeger_recursive(const TransitionMatrix& P, const Vector& pi) {
  CheegerResult best{std::numeric_limits<double>::infinity(), {}};
  std::vector<bool> in(P.size(), false);
  enumerate(P, pi, in, 0, best);
  return best;
}

Matrix reversibilized_laplacian(const TransitionMatrix& P, const Vector& pi) {
  const auto n = static_cast<Eigen::Index>(P.size());
  Matrix w(n, n);
  for (Eigen::Index u = 0; u < n; ++u)
    for (Eigen::Index v = 0; v < n; ++v) w(u, v) = 0.5 * (pi(u) * P.matrix()(u, v) + pi(v) * P.matrix()(v, u));
  Matrix L = -w;
  for (Eigen::Index u = 0; u < n; ++u) L(u, u) += w.row(u).sum();
  return L;
}

double rho_fixed_point_residual(const Hypergraph& h, const Vector& rho) {
  double worst = 0.0;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    double sum = 0.0;
    for (const auto& m : h.edge(e).members) {
      for (std::size_t f : h.incident_edges(m.vertex)) {
        const double g_hat = h.gamma(f, m.vertex) / h.edge_degree(f);
        sum += rho(static_cast<Eigen::Index>(f)) * h.edge(f).weight * g_hat / h.vertex_degree(m.vertex);
      }
    }
    worst = std::max(worst, std::abs(rho(static_cast<Eigen::Index>(e)) - sum));
  }
  return worst;
}

double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace hyperwalk::testkit

#include "hyperwalk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace hyperwalk {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTolerance = 1e-12;
constexpr double kSymmetryTolerance = 1e-10;

double off_diagonal_norm(const Matrix& A) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < A.cols(); ++j)
    for (Eigen::Index i = 0; i < A.rows(); ++i)
      if (i != j) sum += A(i, j) * A(i, j);
  return std::sqrt(sum);
}

// Apply the rotation in the (p, q) plane to columns p and q of X.
void rotate_columns(Matrix& X, Eigen::Index p, Eigen::Index q, double c, double s) {
  for (Eigen::Index k = 0; k < X.rows(); ++k) {
    const double xp = X(k, p);
    const double xq = X(k, q);
    X(k, p) = c * xp - s * xq;
    X(k, q) = s * xp + c * xq;
  }
}

void rotate_rows(Matrix& X, Eigen::Index p, Eigen::Index q, double c, double s) {
  for (Eigen::Index k = 0; k < X.cols(); ++k) {
    const double xp = X(p, k);
    const double xq = X(q, k);
    X(p, k) = c * xp - s * xq;
    X(q, k) = s * xp + c * xq;
  }
}

}  // namespace

SymmetricEigen jacobi_eigen(const Matrix& M) {
  if (M.rows() != M.cols())
    throw Error(ErrorKind::NotSymmetric, "matrix is " + std::to_string(M.rows()) + "x" + std::to_string(M.cols()));
  const Eigen::Index n = M.rows();
  const double asym = n == 0 ? 0.0 : (M - M.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTolerance)
    throw Error(ErrorKind::NotSymmetric, "max |M - M^T| = " + std::to_string(asym));

  Matrix A = 0.5 * (M + M.transpose());
  Matrix V = Matrix::Identity(n, n);
  const double scale = std::max(A.norm(), std::numeric_limits<double>::min());

  int sweep = 0;
  for (;; ++sweep) {
    if (off_diagonal_norm(A) <= kOffDiagonalTolerance * scale) break;
    if (sweep == kMaxSweeps)
      throw Error(ErrorKind::ConvergenceFailure,
                  "Jacobi eigensolver did not converge in " + std::to_string(kMaxSweeps) + " sweeps");
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (apq == 0.0) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        rotate_columns(A, p, q, c, s);
        rotate_rows(A, p, q, c, s);
        A(p, q) = 0.0;
        A(q, p) = 0.0;
        rotate_columns(V, p, q, c, s);
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&A](Eigen::Index a, Eigen::Index b) { return A(a, a) < A(b, b); });

  SymmetricEigen out{Vector(n), Matrix(n, n), sweep};
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = A(order[i], order[i]);
    out.vectors.col(i) = V.col(order[i]);
  }
  return out;
}

std::vector<double> eigenvalues_symmetric(const Matrix& M) {
  const auto eig = jacobi_eigen(M);
  return {eig.values.data(), eig.values.data() + eig.values.size()};
}

}  // namespace hyperwalk

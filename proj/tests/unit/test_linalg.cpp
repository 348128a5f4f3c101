#include <gtest/gtest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "hyperwalk/linalg.hpp"

using namespace hyperwalk;

namespace {

Matrix random_symmetric(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = g(rng);
  return 0.5 * (a + a.transpose());
}

}  // namespace

TEST(Linalg, Diagonal) {
  Matrix d = Vector((Vector(3) << 3, 1, 2).finished()).asDiagonal();
  EXPECT_EQ(eigenvalues_symmetric(d), (std::vector<double>{1, 2, 3}));
}

TEST(Linalg, CenteringMatrix) {
  const Matrix m = Matrix::Identity(3, 3) / 3.0 - Matrix::Ones(3, 3) / 9.0;
  const auto ev = eigenvalues_symmetric(m);
  ASSERT_EQ(ev.size(), 3u);
  EXPECT_NEAR(ev[0], 0.0, 1e-14);
  EXPECT_NEAR(ev[1], 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(ev[2], 1.0 / 3.0, 1e-14);
}

TEST(Linalg, AgreesWithReferenceSolver) {
  std::mt19937_64 rng(1);
  for (Eigen::Index n : {1, 2, 3, 5, 8, 16, 40}) {
    const Matrix m = random_symmetric(rng, n);
    const auto mine = jacobi_eigen(m);
    Eigen::SelfAdjointEigenSolver<Matrix> ref(m);
    EXPECT_LE((mine.values - ref.eigenvalues()).cwiseAbs().maxCoeff(), 1e-10 * std::max(1.0, m.norm())) << n;
  }
}

TEST(Linalg, ResidualsAndOrthonormality) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = random_symmetric(rng, 12);
    const auto eig = jacobi_eigen(m);
    for (Eigen::Index k = 0; k < m.rows(); ++k) {
      const Vector x = eig.vectors.col(k);
      EXPECT_LE((m * x - eig.values(k) * x).norm(), 1e-8 * m.norm());
    }
    EXPECT_LE((eig.vectors.transpose() * eig.vectors - Matrix::Identity(12, 12)).cwiseAbs().maxCoeff(), 1e-10);
    for (Eigen::Index k = 1; k < m.rows(); ++k) EXPECT_LE(eig.values(k - 1), eig.values(k));
  }
}

TEST(Linalg, Deterministic) {
  std::mt19937_64 rng(3);
  const Matrix m = random_symmetric(rng, 9);
  EXPECT_EQ(eigenvalues_symmetric(m), eigenvalues_symmetric(m));
}

TEST(Linalg, ZeroMatrix) { EXPECT_EQ(eigenvalues_symmetric(Matrix::Zero(3, 3)), (std::vector<double>{0, 0, 0})); }

TEST(Linalg, RejectsAsymmetric) {
  Matrix m(2, 2);
  m << 1, 2, 2.1, 1;
  try {
    eigenvalues_symmetric(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSymmetric);
  }
  EXPECT_THROW(eigenvalues_symmetric(Matrix::Zero(2, 3)), Error);
}

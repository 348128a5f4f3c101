#pragma once

#include <vector>

#include "hyperwalk/hypergraph.hpp"

namespace hyperwalk {

struct SymmetricEigen {
  Vector values;   ///< ascending
  Matrix vectors;  ///< column i pairs with values(i)
  int sweeps = 0;
};

/// Cyclic Jacobi rotations. Stops once the off-diagonal Frobenius norm drops to
/// 1e-12 of the matrix norm; throws ConvergenceFailure after 100 sweeps and
/// NotSymmetric if |M - M^T| exceeds 1e-10.
SymmetricEigen jacobi_eigen(const Matrix& M);

/// All eigenvalues of a symmetric matrix, ascending.
std::vector<double> eigenvalues_symmetric(const Matrix& M);

}  // namespace hyperwalk

#pragma once

#include "carent/types.hpp"

namespace carent {

/// Eigensystem of a Hermitian matrix.
struct HermEigenSystem {
  RVector eigenvalues;   ///< sorted descending
  CMatrix eigenvectors;  ///< columns, unitary; eigenvectors.col(k) pairs with eigenvalues(k)
};

/// Max-abs entry of m - m^+; zero iff m is exactly Hermitian.
double hermiticity_defect(const CMatrix& m);

/// Kronecker product of two square matrices.  The result dimension must stay
/// within kMaxDim.
template <typename DerivedA, typename DerivedB>
CMatrix kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) {
    throw DimensionError("kron: inputs must be square");
  }
  if (a.rows() < 1 || b.rows() < 1) {
    throw DimensionError("kron: inputs must be non-empty");
  }
  const Eigen::Index n = a.rows() * b.rows();
  if (n > kMaxDim) {
    throw DimensionError("kron: result dimension exceeds " + std::to_string(kMaxDim));
  }
  CMatrix out(n, n);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = Complex(a(i, j)) * b;
    }
  }
  return out;
}

/// Full eigensystem of a Hermitian matrix (checked to `tol`), eigenvalues
/// sorted descending.  The output is a deterministic function of the input:
/// each eigenvector is rotated so its largest-modulus component is real and
/// positive (ties broken by the lowest index).
HermEigenSystem herm_eigensystem(const CMatrix& h, double tol = defaults::hermiticity_tol);

/// Positive-semidefinite square root.  Eigenvalues in [-tol, 0) are clipped
/// to zero; anything below -tol is an error.
CMatrix psd_sqrt(const CMatrix& d, double tol = defaults::hermiticity_tol);

}  // namespace carent

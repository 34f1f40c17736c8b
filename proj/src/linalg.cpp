#include "carent/linalg.hpp"

#include <cmath>

namespace carent {

double hermiticity_defect(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("hermiticity_defect: matrix must be square");
  }
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermEigenSystem herm_eigensystem(const CMatrix& h, double tol) {
  if (h.rows() != h.cols()) {
    throw DimensionError("herm_eigensystem: matrix must be square");
  }
  if (h.rows() < 1 || h.rows() > kMaxDim) {
    throw DimensionError("herm_eigensystem: dimension out of range");
  }
  if (!h.allFinite()) {
    throw ContractError("herm_eigensystem: entries must be finite");
  }
  if (hermiticity_defect(h) > tol) {
    throw ContractError("herm_eigensystem: matrix is not Hermitian within tolerance");
  }

  const CMatrix sym = (h + h.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("herm_eigensystem: eigensolver did not converge");
  }

  // Eigen returns ascending order; flip to descending.
  HermEigenSystem out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();

  // Phase convention: rotate each column so its largest-modulus entry is real
  // and positive.  Ties go to the lowest row index, so the convention is a
  // pure function of the entries.
  const Eigen::Index n = h.rows();
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pick = 0;
    double best = -1.0;
    for (Eigen::Index r = 0; r < n; ++r) {
      const double mag = std::abs(out.eigenvectors(r, c));
      if (mag > best) {
        best = mag;
        pick = r;
      }
    }
    const Complex z = out.eigenvectors(pick, c);
    if (best > 0.0) {
      out.eigenvectors.col(c) *= std::conj(z) / best;
    }
  }
  return out;
}

CMatrix psd_sqrt(const CMatrix& d, double tol) {
  const HermEigenSystem es = herm_eigensystem(d, tol);
  if (es.eigenvalues.size() > 0 && es.eigenvalues.minCoeff() < -tol) {
    throw ContractError("psd_sqrt: matrix has an eigenvalue below -tol");
  }
  const RVector roots = es.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors * roots.cast<Complex>().asDiagonal() * es.eigenvectors.adjoint();
}

}  // namespace carent

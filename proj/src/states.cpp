#include "carent/states.hpp"

#include "carent/linalg.hpp"

#include <cmath>
#include <numbers>

namespace carent {

DensityMatrix::DensityMatrix(CMatrix mat, double tol) : mat_(std::move(mat)) {
  if (mat_.rows() != mat_.cols()) {
    throw DimensionError("DensityMatrix: matrix must be square");
  }
  if (mat_.rows() < 2 || mat_.rows() > kMaxDim) {
    throw DimensionError("DensityMatrix: dimension out of range");
  }
  if (!mat_.allFinite()) {
    throw ContractError("DensityMatrix: entries must be finite");
  }
  if (hermiticity_defect(mat_) > tol) {
    throw ContractError("DensityMatrix: matrix is not Hermitian within tolerance");
  }
  if (std::abs(mat_.trace() - Complex(1.0)) > tol) {
    throw ContractError("DensityMatrix: trace differs from 1 beyond tolerance");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver((mat_ + mat_.adjoint()) / 2.0,
                                                Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error("DensityMatrix: eigenvalue check failed to converge");
  }
  if (solver.eigenvalues().minCoeff() < -tol) {
    throw ContractError("DensityMatrix: matrix is not positive semidefinite within tolerance");
  }
}

bool is_pure(const DensityMatrix& w, double tol) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver((w.mat() + w.mat().adjoint()) / 2.0,
                                                Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff() >= 1.0 - tol;
}

PureCoeffs::PureCoeffs(const Matrix2c& c, double tol) : c_(c) {
  if (!c_.allFinite()) {
    throw ContractError("PureCoeffs: entries must be finite");
  }
  if (std::abs(c_.norm() - 1.0) > tol) {
    throw ContractError("PureCoeffs: coefficients must have unit norm");
  }
}

CVector PureCoeffs::vec() const {
  CVector v(4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      v(2 * i + j) = c_(i, j);
    }
  }
  return v;
}

void validate_family_params(const FamilyParams& p) {
  const double half_pi = std::numbers::pi / 2.0;
  const double two_pi = 2.0 * std::numbers::pi;
  auto check_angle = [](double value, double lo, double hi, bool open_top, const char* name) {
    const bool ok = value >= lo && (open_top ? value < hi : value <= hi);
    if (!std::isfinite(value) || !ok) {
      throw UsageError(std::string("family parameter ") + name + " out of range");
    }
  };
  check_angle(p.phi, 0.0, half_pi, false, "phi");
  check_angle(p.phi_prime, 0.0, half_pi, false, "phi_prime");
  check_angle(p.theta, 0.0, two_pi, true, "theta");
  check_angle(p.theta_prime, 0.0, two_pi, true, "theta_prime");
}

Matrix2c pure_qubit_density(double phi, double theta) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const Complex phase = std::polar(1.0, theta);
  Matrix2c d;
  d(0, 0) = c * c;
  d(0, 1) = phase * (c * s);
  d(1, 0) = std::conj(phase) * (c * s);
  d(1, 1) = s * s;
  return d;
}

Matrix2c real_rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Matrix2c v;
  v(0, 0) = c;
  v(0, 1) = -s;
  v(1, 0) = s;
  v(1, 1) = c;
  return v;
}

DensityMatrix state_from_coeffs(const PureCoeffs& coeffs) {
  const CVector v = coeffs.vec();
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix restrict_state(const DensityMatrix& w, const SubalgebraBasis& basis) {
  if (basis.ambient_dim() != w.dim()) {
    throw DimensionError("restrict_state: basis and state dimensions differ");
  }
  Matrix2c out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out(i, j) = (w.mat() * basis.unit(j, i)).trace();
    }
  }
  return DensityMatrix(CMatrix(out));
}

double entropy(const DensityMatrix& w) {
  const HermEigenSystem es = herm_eigensystem(w.mat());
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues.size(); ++i) {
    const double p = es.eigenvalues(i);
    if (p > defaults::spectrum_clip) {
      s -= p * std::log(p);
    }
  }
  return std::max(s, 0.0);
}

double triangle_gap(const DensityMatrix& w) {
  if (w.dim() != 4) {
    throw DimensionError("triangle_gap: state must be 4-dimensional");
  }
  const double s1 = entropy(restrict_state(w, standard_subalgebra(AlgebraLabel::A1)));
  const double s2 = entropy(restrict_state(w, standard_subalgebra(AlgebraLabel::A2)));
  return std::abs(s1 - s2) - entropy(w);
}

double subadditivity_gap(const DensityMatrix& w) {
  if (w.dim() != 4) {
    throw DimensionError("subadditivity_gap: state must be 4-dimensional");
  }
  const double s1 = entropy(restrict_state(w, standard_subalgebra(AlgebraLabel::A1)));
  const double s2 = entropy(restrict_state(w, standard_subalgebra(AlgebraLabel::A2)));
  return s1 + s2 - entropy(w);
}

DensityMatrix product_family(const FamilyParams& p) {
  validate_family_params(p);
  const Matrix2c d1 = pure_qubit_density(p.phi, p.theta);
  const Matrix2c d2 = pure_qubit_density(p.phi_prime, p.theta_prime);
  return DensityMatrix(kron(d1, d2));
}

DensityMatrix apply_local_automorphism(const DensityMatrix& w, const CMatrix& v) {
  if (w.dim() != 4) {
    throw DimensionError("apply_local_automorphism: state must be 4-dimensional");
  }
  if (v.rows() != 2 || v.cols() != 2) {
    throw DimensionError("apply_local_automorphism: unitary must be 2x2");
  }
  if ((v.adjoint() * v - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() >
      defaults::unitarity_tol) {
    throw ContractError("apply_local_automorphism: v is not unitary within tolerance");
  }
  const CMatrix u = kron(v, Matrix2c::Identity());
  return DensityMatrix(u * w.mat() * u.adjoint());
}

DensityMatrix random_density(Rng& rng, Eigen::Index dim, Eigen::Index rank) {
  if (rank == 0) {
    rank = dim;
  }
  if (dim < 2 || dim > kMaxDim || rank < 1 || rank > dim) {
    throw DimensionError("random_density: dimension or rank out of range");
  }
  const CMatrix g = random_ginibre(rng, dim, rank);
  CMatrix w = g * g.adjoint();
  w /= w.trace();
  return DensityMatrix(std::move(w));
}

PureCoeffs random_coeffs(Rng& rng) {
  while (true) {
    Matrix2c c;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        c(i, j) = rng.complex_gaussian();
      }
    }
    const double norm = c.norm();
    if (norm > 1e-6) {
      return PureCoeffs(Matrix2c(c / norm));
    }
  }
}

}  // namespace carent

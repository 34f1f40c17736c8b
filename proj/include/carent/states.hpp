#pragma once

#include "carent/car_algebra.hpp"
#include "carent/rng.hpp"
#include "carent/types.hpp"

namespace carent {

/// A validated density matrix: Hermitian, positive semidefinite and of unit
/// trace, each within `tol`.  Dimensions 2 through kMaxDim are supported (4
/// for the two-mode system itself, 2 for its one-mode marginals, 8 for
/// three-factor composites).
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix mat, double tol = defaults::density_tol);

  const CMatrix& mat() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  CMatrix mat_;
};

/// True when the largest eigenvalue is at least 1 - tol.
bool is_pure(const DensityMatrix& w, double tol = defaults::purity_tol);

/// Coefficients of a pure two-mode vector in the occupation basis
/// (e0, e1, e2, e3) of C^4: component 2*i + j carries c(i, j).  Unit norm is
/// enforced on construction.
class PureCoeffs {
 public:
  explicit PureCoeffs(const Matrix2c& c, double tol = defaults::coeff_norm_tol);

  const Matrix2c& c() const { return c_; }

  /// Flattened state vector (c00, c01, c10, c11).
  CVector vec() const;

 private:
  Matrix2c c_;
};

/// Parameters of the two-parameter product family: each factor is the pure
/// qubit state with polar angle phi (phi_prime) and relative phase theta
/// (theta_prime).  Valid ranges: phi, phi_prime in [0, pi/2]; theta,
/// theta_prime in [0, 2*pi).
struct FamilyParams {
  double phi = 0.0;
  double theta = 0.0;
  double phi_prime = 0.0;
  double theta_prime = 0.0;
};

/// Throws UsageError when a parameter leaves its range.
void validate_family_params(const FamilyParams& p);

/// 2x2 pure density matrix [[cos^2 phi, e^{i theta} cos phi sin phi],
///                          [e^{-i theta} cos phi sin phi, sin^2 phi]].
Matrix2c pure_qubit_density(double phi, double theta);

/// Real rotation [[cos, -sin], [sin, cos]]; handy unitary for the local
/// automorphism below.
Matrix2c real_rotation(double angle);

/// Rank-one density |v><v| built from pure coefficients.
DensityMatrix state_from_coeffs(const PureCoeffs& coeffs);

/// Restriction (marginal) of a state to a 2x2 subalgebra: the unique 2x2
/// density m with m(i, j) = tr(w * e(j, i)).
DensityMatrix restrict_state(const DensityMatrix& w, const SubalgebraBasis& basis);

/// Von Neumann entropy in nats.  Eigenvalues below defaults::spectrum_clip
/// are treated as exact zeros; the result is clamped to be >= 0.
double entropy(const DensityMatrix& w);

/// |S(w|A1) - S(w|A2)| - S(w).  Positive values witness failure of the
/// entropic triangle (Araki-Lieb-style) inequality for this pair of
/// subalgebras; w must be 4-dimensional.
double triangle_gap(const DensityMatrix& w);

/// S(w|A1) + S(w|A2) - S(w); subadditivity says this is >= 0.
double subadditivity_gap(const DensityMatrix& w);

/// Product of two pure qubit densities, kron(D(phi, theta),
/// D(phi_prime, theta_prime)); a product state across the tensor splitting.
DensityMatrix product_family(const FamilyParams& p);

/// Conjugate w by kron(v, I2): a unitary v (2x2, checked) acting on the
/// first tensor factor only.
DensityMatrix apply_local_automorphism(const DensityMatrix& w, const CMatrix& v);

/// Random density of the given dimension; `rank` in [1, dim] controls the
/// number of Ginibre columns (defaults to full rank).
DensityMatrix random_density(Rng& rng, Eigen::Index dim, Eigen::Index rank = 0);

/// Haar-like random pure coefficients (normalized complex Gaussian vector).
PureCoeffs random_coeffs(Rng& rng);

}  // namespace carent

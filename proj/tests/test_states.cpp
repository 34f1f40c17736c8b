#include "carent/states.hpp"

#include "carent/linalg.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

using namespace carent;

namespace {

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

/// Closed-form marginals of a pure state with coefficient matrix c: the
/// mode-1 marginal is c c^+; the tensor-local mode-2 marginal is the
/// conjugate of c^+ c; the anticommuting mode-2 marginal is the same with
/// the sign of c(1,1) flipped.  These are the oracles the restriction
/// operation must reproduce.
Matrix2c oracle_mode1(const Matrix2c& c) { return c * c.adjoint(); }

Matrix2c oracle_mode2_spin(const Matrix2c& c) { return (c.adjoint() * c).conjugate(); }

Matrix2c oracle_mode2(const Matrix2c& c) {
  Matrix2c flipped = c;
  flipped(1, 1) = -flipped(1, 1);
  return (flipped.adjoint() * flipped).conjugate();
}

Matrix2c half_coeffs() {
  Matrix2c c;
  c << 0.5, 0.5, 0.5, 0.5;
  return c;
}

}  // namespace

TEST_SUITE("states") {

TEST_CASE("density validation accepts states and rejects non-states") {
  CHECK_NOTHROW(DensityMatrix(CMatrix(CMatrix::Identity(4, 4) / 4.0)));
  CHECK_NOTHROW(DensityMatrix(CMatrix(CMatrix::Identity(2, 2) / 2.0)));
  CHECK_NOTHROW(DensityMatrix(CMatrix(CMatrix::Identity(8, 8) / 8.0)));
  CHECK_NOTHROW(DensityMatrix(CMatrix(CMatrix::Identity(16, 16) / 16.0)));

  CMatrix skew(2, 2);
  skew << 0.5, 0.3, -0.3, 0.5;
  CHECK_THROWS_AS(DensityMatrix{skew}, ContractError);  // not Hermitian

  CHECK_THROWS_AS(DensityMatrix(CMatrix(CMatrix::Identity(2, 2))), ContractError);  // trace 2

  CMatrix indefinite = CMatrix::Zero(2, 2);
  indefinite(0, 0) = 1.5;
  indefinite(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{indefinite}, ContractError);

  CMatrix nan_mat = CMatrix::Identity(2, 2) / 2.0;
  nan_mat(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(DensityMatrix{nan_mat}, ContractError);

  CHECK_THROWS_AS(DensityMatrix(CMatrix::Zero(2, 3)), DimensionError);
  CHECK_THROWS_AS(DensityMatrix(CMatrix(CMatrix::Identity(17, 17) / 17.0)), DimensionError);
}

TEST_CASE("purity detection") {
  CHECK(is_pure(state_from_coeffs(PureCoeffs(half_coeffs()))));
  CHECK_FALSE(is_pure(DensityMatrix(CMatrix(CMatrix::Identity(4, 4) / 4.0))));
}

TEST_CASE("pure coefficients enforce normalization and flatten row-major") {
  CHECK_THROWS_AS(PureCoeffs(Matrix2c(half_coeffs() * 2.0)), ContractError);
  Matrix2c nan_c = half_coeffs();
  nan_c(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(PureCoeffs{nan_c}, ContractError);

  Matrix2c c = Matrix2c::Zero();
  c(1, 0) = 1.0;  // the (2,1) occupation-basis vector
  const CVector v = PureCoeffs(c).vec();
  CHECK(v(2) == Complex(1.0));
  CHECK(v.cwiseAbs().sum() == 1.0);
}

TEST_CASE("state_from_coeffs builds the rank-one projector") {
  const DensityMatrix w = state_from_coeffs(PureCoeffs(half_coeffs()));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(w.mat()(i, j) == Complex(0.25));
    }
  }
}

TEST_CASE("restriction matches the closed-form marginals on random pure states") {
  Rng rng(40);
  const SubalgebraBasis& a1 = standard_subalgebra(AlgebraLabel::A1);
  const SubalgebraBasis& a2 = standard_subalgebra(AlgebraLabel::A2);
  const SubalgebraBasis& a2s = standard_subalgebra(AlgebraLabel::A2Spin);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const PureCoeffs coeffs = random_coeffs(rng);
    const DensityMatrix w = state_from_coeffs(coeffs);
    worst = std::max(worst, max_abs(restrict_state(w, a1).mat() - oracle_mode1(coeffs.c())));
    worst = std::max(worst, max_abs(restrict_state(w, a2).mat() - oracle_mode2(coeffs.c())));
    worst =
        std::max(worst, max_abs(restrict_state(w, a2s).mat() - oracle_mode2_spin(coeffs.c())));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("the equal-coefficients state has opposite marginal characters") {
  const DensityMatrix w = state_from_coeffs(PureCoeffs(half_coeffs()));

  Matrix2c pure_half;
  pure_half << 0.5, 0.5, 0.5, 0.5;
  CHECK(max_abs(restrict_state(w, standard_subalgebra(AlgebraLabel::A1)).mat() - pure_half) <
        1e-15);

  const Matrix2c tracial = Matrix2c::Identity() / 2.0;
  CHECK(max_abs(restrict_state(w, standard_subalgebra(AlgebraLabel::A2)).mat() - tracial) <
        1e-15);

  CHECK(triangle_gap(w) == doctest::Approx(std::numbers::ln2).epsilon(1e-12));
}

TEST_CASE("restriction rejects mismatched dimensions") {
  const DensityMatrix small(CMatrix(CMatrix::Identity(2, 2) / 2.0));
  CHECK_THROWS_AS(restrict_state(small, standard_subalgebra(AlgebraLabel::A1)), DimensionError);
}

TEST_CASE("entropy handles pure, tracial and mixed spectra") {
  CMatrix pure = CMatrix::Zero(4, 4);
  pure(0, 0) = 1.0;
  CHECK(entropy(DensityMatrix(pure)) == 0.0);

  CHECK(entropy(DensityMatrix(CMatrix(CMatrix::Identity(4, 4) / 4.0))) ==
        doctest::Approx(2.0 * std::numbers::ln2).epsilon(1e-12));

  CMatrix mixed = CMatrix::Zero(4, 4);
  mixed(0, 0) = 0.75;
  mixed(1, 1) = 0.25;
  // frozen: H(1/4, 3/4) = 0.5623351446188083 nats
  CHECK(entropy(DensityMatrix(mixed)) == doctest::Approx(0.5623351446188083).epsilon(1e-12));
}

TEST_CASE("pure qubit densities are pure with the requested phase") {
  const Matrix2c diag = pure_qubit_density(0.0, 0.0);
  CHECK(diag(0, 0) == Complex(1.0));
  CHECK(diag(1, 1) == Complex(0.0));
  CHECK(diag(0, 1) == Complex(0.0));

  const double phi = 0.7;
  const double theta = 2.1;
  const Matrix2c d = pure_qubit_density(phi, theta);
  CHECK(std::abs(d(0, 0).real() - std::cos(phi) * std::cos(phi)) < 1e-15);
  CHECK(std::abs(d(0, 1) - std::polar(std::cos(phi) * std::sin(phi), theta)) < 1e-15);
  CHECK(std::abs(d.trace() - Complex(1.0)) < 1e-15);
  CHECK(std::abs((d * d - d).cwiseAbs().maxCoeff()) < 1e-15);  // idempotent: pure
}

TEST_CASE("product_family is the Kronecker product of its factors") {
  const FamilyParams p{0.3, 1.2, 1.1, 5.0};
  const DensityMatrix w = product_family(p);
  const CMatrix expected =
      kron(pure_qubit_density(p.phi, p.theta), pure_qubit_density(p.phi_prime, p.theta_prime));
  CHECK(max_abs(w.mat() - expected) == 0.0);
  CHECK(is_pure(w));
}

TEST_CASE("family parameters are range-checked") {
  CHECK_THROWS_AS(product_family(FamilyParams{-0.1, 0.0, 0.0, 0.0}), UsageError);
  CHECK_THROWS_AS(product_family(FamilyParams{0.0, 0.0, 2.0, 0.0}), UsageError);
  CHECK_THROWS_AS(product_family(FamilyParams{0.0, 2.0 * std::numbers::pi, 0.0, 0.0}),
                  UsageError);
  CHECK_THROWS_AS(product_family(FamilyParams{0.0, -1.0, 0.0, 0.0}), UsageError);
  CHECK_NOTHROW(product_family(FamilyParams{std::numbers::pi / 2.0, 6.28, 0.0, 0.0}));
}

TEST_CASE("entropy gaps of pure product states") {
  // When both factors are diagonal the mode-2 marginal is pure as well, so
  // every entropy in sight vanishes.
  const DensityMatrix diag = product_family(FamilyParams{0.4, 0.0, 0.0, 0.0});
  CHECK(std::abs(triangle_gap(diag)) < 1e-12);
  CHECK(std::abs(subadditivity_gap(diag)) < 1e-12);

  // A generic pure product state violates the triangle inequality: the
  // mode-1 marginal stays pure while the mode-2 marginal mixes, so the gap
  // is exactly the mode-2 marginal entropy.  Subadditivity still holds.
  const DensityMatrix generic = product_family(FamilyParams{0.4, 0.0, 1.0, 0.0});
  const double expected = entropy(restrict_state(generic, standard_subalgebra(AlgebraLabel::A2)));
  CHECK(expected > 0.3);
  CHECK(triangle_gap(generic) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(subadditivity_gap(generic) >= -1e-12);

  const DensityMatrix small(CMatrix(CMatrix::Identity(2, 2) / 2.0));
  CHECK_THROWS_AS(triangle_gap(small), DimensionError);
  CHECK_THROWS_AS(subadditivity_gap(small), DimensionError);
}

TEST_CASE("the tensor-local marginal pair satisfies the entropic triangle inequality") {
  // In contrast to the (A1, A2) pair, the commuting pair (A1, A2spin) obeys
  // |S(w|A1) - S(w|A2spin)| <= S(w) on every state.
  Rng rng(41);
  const SubalgebraBasis& a1 = standard_subalgebra(AlgebraLabel::A1);
  const SubalgebraBasis& a2s = standard_subalgebra(AlgebraLabel::A2Spin);
  for (int trial = 0; trial < 200; ++trial) {
    const DensityMatrix w = random_density(rng, 4, 1 + (trial % 4));
    const double s1 = entropy(restrict_state(w, a1));
    const double s2 = entropy(restrict_state(w, a2s));
    CHECK(std::abs(s1 - s2) <= entropy(w) + 1e-9);
  }
}

TEST_CASE("local automorphisms rotate the first factor only") {
  const DensityMatrix w = product_family(FamilyParams{0.0, 0.0, std::numbers::pi / 4.0, 0.0});

  // Identity leaves the state untouched.
  CHECK(max_abs(apply_local_automorphism(w, Matrix2c::Identity()).mat() - w.mat()) == 0.0);

  // Rotating by pi/4 turns the first factor from diag(1, 0) into the
  // symmetric pure state, i.e. the product family at phi = pi/4.
  const DensityMatrix rotated = apply_local_automorphism(w, real_rotation(std::numbers::pi / 4.0));
  const DensityMatrix expected =
      product_family(FamilyParams{std::numbers::pi / 4.0, 0.0, std::numbers::pi / 4.0, 0.0});
  CHECK(max_abs(rotated.mat() - expected.mat()) < 1e-15);

  // Unitarity preserves the spectrum, hence the entropy.
  CHECK(std::abs(entropy(rotated) - entropy(w)) < 1e-12);
}

TEST_CASE("local automorphisms validate their input") {
  const DensityMatrix w = product_family(FamilyParams{0.0, 0.0, 0.0, 0.0});
  CHECK_THROWS_AS(apply_local_automorphism(w, CMatrix(Matrix2c::Identity() * 2.0)),
                  ContractError);
  CHECK_THROWS_AS(apply_local_automorphism(w, CMatrix::Identity(4, 4)), DimensionError);
  const DensityMatrix small(CMatrix(CMatrix::Identity(2, 2) / 2.0));
  CHECK_THROWS_AS(apply_local_automorphism(small, Matrix2c::Identity()), DimensionError);
}

TEST_CASE("random densities honor dimension, rank and determinism") {
  Rng rng(42);
  const DensityMatrix full = random_density(rng, 4);
  CHECK(full.dim() == 4);

  const DensityMatrix rank1 = random_density(rng, 4, 1);
  CHECK(is_pure(rank1));

  const DensityMatrix rank2 = random_density(rng, 4, 2);
  const HermEigenSystem es = herm_eigensystem(rank2.mat());
  int positive = 0;
  for (Eigen::Index i = 0; i < 4; ++i) {
    if (es.eigenvalues(i) > defaults::spectrum_clip) {
      ++positive;
    }
  }
  CHECK(positive == 2);

  Rng r1(9);
  Rng r2(9);
  CHECK(max_abs(random_density(r1, 4).mat() - random_density(r2, 4).mat()) == 0.0);

  CHECK_THROWS_AS(random_density(rng, 1), DimensionError);
  CHECK_THROWS_AS(random_density(rng, 4, 5), DimensionError);
}

TEST_CASE("random coefficients are normalized and deterministic") {
  Rng r1(13);
  Rng r2(13);
  const PureCoeffs c1 = random_coeffs(r1);
  const PureCoeffs c2 = random_coeffs(r2);
  CHECK(max_abs(c1.c() - c2.c()) == 0.0);
  CHECK(std::abs(c1.c().norm() - 1.0) < 1e-12);
}

}  // TEST_SUITE("states")

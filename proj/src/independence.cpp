#include "carent/independence.hpp"

#include "carent/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace carent {

namespace {

void check_angles(const QubitAngles& p, const char* which) {
  const double half_pi = std::numbers::pi / 2.0;
  const double two_pi = 2.0 * std::numbers::pi;
  if (!std::isfinite(p.phi) || p.phi < 0.0 || p.phi > half_pi) {
    throw UsageError(std::string("pure_pair_compatibility: phi of ") + which +
                     " must lie in [0, pi/2]");
  }
  if (!std::isfinite(p.theta) || p.theta < 0.0 || p.theta >= two_pi) {
    throw UsageError(std::string("pure_pair_compatibility: theta of ") + which +
                     " must lie in [0, 2*pi)");
  }
}

/// Euclidean projection of a real vector onto the probability simplex
/// (sorting algorithm).
RVector project_simplex(const RVector& v) {
  const Eigen::Index n = v.size();
  std::vector<double> u(v.data(), v.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double running = 0.0;
  double theta = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    running += u[static_cast<std::size_t>(i)];
    const double candidate = (running - 1.0) / static_cast<double>(i + 1);
    if (u[static_cast<std::size_t>(i)] - candidate > 0.0) {
      theta = candidate;
    }
  }
  RVector out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out(i) = std::max(v(i) - theta, 0.0);
  }
  return out;
}

/// Frobenius projection onto the density matrices: hermitize, then project
/// the spectrum onto the simplex.
CMatrix project_density_cone(const CMatrix& x) {
  const CMatrix sym = (x + x.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  const RVector lam = project_simplex(solver.eigenvalues());
  return solver.eigenvectors() * lam.cast<Complex>().asDiagonal() *
         solver.eigenvectors().adjoint();
}

/// The marginal conditions "tr(X e(j,i)) = m(i,j) for both subalgebras" as
/// real-linear constraints tr(X G_k) = b_k with Hermitian G_k.
struct AffineConstraints {
  std::array<CMatrix, 8> mats;
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> gram;  // pseudo-inverse of tr(G_k G_l)

  AffineConstraints() {
    const SubalgebraBasis a1 = matrix_units(standard_generators(), AlgebraLabel::A1);
    const SubalgebraBasis a2 = matrix_units(standard_generators(), AlgebraLabel::A2);
    int k = 0;
    for (const SubalgebraBasis* basis : {&a1, &a2}) {
      const CMatrix& e00 = basis->unit(0, 0);
      const CMatrix& e01 = basis->unit(0, 1);
      const CMatrix& e10 = basis->unit(1, 0);
      const CMatrix& e11 = basis->unit(1, 1);
      mats[k++] = e00;
      mats[k++] = e11;
      mats[k++] = e10 + e01;                 // picks out 2 Re m(0,1)
      mats[k++] = Complex(0, 1) * (e10 - e01);  // picks out -2 Im m(0,1)
    }
    Eigen::MatrixXd gram_mat(8, 8);
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        gram_mat(i, j) = (mats[i] * mats[j]).trace().real();
      }
    }
    // The two "diagonal units sum to tr X" relations overlap, so the Gram
    // matrix is rank-deficient; solve in the least-squares sense.
    gram.compute(gram_mat);
  }

  Eigen::Matrix<double, 8, 1> targets(const Matrix2c& m1, const Matrix2c& m2) const {
    Eigen::Matrix<double, 8, 1> b;
    int k = 0;
    for (const Matrix2c* m : {&m1, &m2}) {
      b(k++) = (*m)(0, 0).real();
      b(k++) = (*m)(1, 1).real();
      b(k++) = 2.0 * (*m)(0, 1).real();
      b(k++) = -2.0 * (*m)(0, 1).imag();
    }
    return b;
  }

  /// Frobenius projection of Hermitian x onto {X : tr(X G_k) = b_k}.
  CMatrix project(const CMatrix& x, const Eigen::Matrix<double, 8, 1>& b) const {
    Eigen::Matrix<double, 8, 1> g;
    for (int i = 0; i < 8; ++i) {
      g(i) = (x * mats[i]).trace().real();
    }
    const Eigen::VectorXd c = gram.solve(g - b);
    CMatrix out = x;
    for (int i = 0; i < 8; ++i) {
      out -= Complex(c(i)) * mats[i];
    }
    return out;
  }

  /// Max-abs deviation of the marginals of y from the targets.
  double residual(const CMatrix& y, const Eigen::Matrix<double, 8, 1>& b) const {
    double worst = 0.0;
    for (int i = 0; i < 8; ++i) {
      worst = std::max(worst, std::abs((y * mats[i]).trace().real() - b(i)));
    }
    return worst;
  }
};

const AffineConstraints& affine_constraints() {
  static const AffineConstraints instance;
  return instance;
}

}  // namespace

std::string to_string(PairCompatibility c) {
  return c == PairCompatibility::Compatible ? "Compatible" : "Incompatible";
}

std::string to_string(FeasibilityStatus s) {
  switch (s) {
    case FeasibilityStatus::Feasible:
      return "Feasible";
    case FeasibilityStatus::Infeasible:
      return "Infeasible";
    case FeasibilityStatus::Undecided:
      return "Undecided";
  }
  return "Undecided";
}

PairCompatibility pure_pair_compatibility(const QubitAngles& p1, const QubitAngles& p2,
                                          double diagonal_tol) {
  check_angles(p1, "the first marginal");
  check_angles(p2, "the second marginal");
  const bool off1 = std::abs(std::cos(p1.phi) * std::sin(p1.phi)) > diagonal_tol;
  const bool off2 = std::abs(std::cos(p2.phi) * std::sin(p2.phi)) > diagonal_tol;
  return (off1 && off2) ? PairCompatibility::Incompatible : PairCompatibility::Compatible;
}

FeasibilityReport joint_feasibility(const DensityMatrix& m1, const DensityMatrix& m2,
                                    double tol, int max_iters) {
  if (m1.dim() != 2 || m2.dim() != 2) {
    throw DimensionError("joint_feasibility: marginals must be 2x2");
  }
  if (!(tol > 0.0)) {
    throw UsageError("joint_feasibility: tol must be positive");
  }
  if (max_iters < 1) {
    throw UsageError("joint_feasibility: max_iters must be positive");
  }

  const AffineConstraints& cons = affine_constraints();
  const Eigen::Matrix<double, 8, 1> b = cons.targets(m1.mat(), m2.mat());

  CMatrix x = CMatrix::Identity(4, 4) / 4.0;
  CMatrix p = CMatrix::Zero(4, 4);
  CMatrix q = CMatrix::Zero(4, 4);

  double prev_gap = std::numeric_limits<double>::infinity();
  double last_residual = std::numeric_limits<double>::infinity();
  int stable = 0;

  FeasibilityReport report;
  for (int it = 1; it <= max_iters; ++it) {
    const CMatrix y = project_density_cone(x + p);
    p = x + p - y;
    const CMatrix x_next = cons.project(y + q, b);
    q = y + q - x_next;

    last_residual = cons.residual(y, b);
    if (last_residual <= tol) {
      report.status = FeasibilityStatus::Feasible;
      report.witness = DensityMatrix(y);
      report.residual = last_residual;
      report.iterations = it;
      return report;
    }

    // An infeasible pair makes the projection pair converge to the two
    // closest points of the (disjoint) sets, so the gap stalls at a positive
    // value.
    const double gap = (y - x_next).norm();
    if (gap > 10.0 * tol && std::abs(gap - prev_gap) <= defaults::feasibility_gap_eps) {
      if (++stable >= defaults::feasibility_window) {
        report.status = FeasibilityStatus::Infeasible;
        report.residual = gap;
        report.iterations = it;
        return report;
      }
    } else {
      stable = 0;
    }
    prev_gap = gap;
    x = x_next;
  }

  report.status = FeasibilityStatus::Undecided;
  report.residual = last_residual;
  report.iterations = max_iters;
  return report;
}

bool product_check(const DensityMatrix& w, const SubalgebraBasis& a, const SubalgebraBasis& b,
                   double tol) {
  if (a.ambient_dim() != w.dim() || b.ambient_dim() != w.dim()) {
    throw DimensionError("product_check: basis and state dimensions differ");
  }
  if (!(tol > 0.0)) {
    throw UsageError("product_check: tol must be positive");
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          const CMatrix& ea = a.unit(i, j);
          const CMatrix& eb = b.unit(k, l);
          if ((ea * eb - eb * ea).cwiseAbs().maxCoeff() > defaults::commute_tol) {
            throw UsageError(
                "product_check: the subalgebras do not commute elementwise; "
                "factorization across them is not defined");
          }
        }
      }
    }
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          const Complex joint = (w.mat() * (a.unit(i, j) * b.unit(k, l))).trace();
          const Complex split = (w.mat() * a.unit(i, j)).trace() * (w.mat() * b.unit(k, l)).trace();
          if (std::abs(joint - split) > tol) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace carent

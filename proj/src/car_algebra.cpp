#include "carent/car_algebra.hpp"

#include "carent/linalg.hpp"

namespace carent {

namespace {

Matrix2c lowering2() {
  Matrix2c e21 = Matrix2c::Zero();
  e21(1, 0) = 1.0;
  return e21;
}

Matrix2c sign2() {
  Matrix2c d = Matrix2c::Zero();
  d(0, 0) = 1.0;
  d(1, 1) = -1.0;
  return d;
}

}  // namespace

CarGenerators build_generators() {
  const Matrix2c e21 = lowering2();
  const Matrix2c d = sign2();
  const Matrix2c id = Matrix2c::Identity();

  CarGenerators gen;
  gen.a1 = kron(e21, id);
  gen.b2 = kron(id, e21);
  gen.u1 = kron(d, id);
  gen.u2 = kron(id, d);
  gen.a2 = gen.u1 * gen.b2;
  gen.b1 = gen.u2 * gen.a1;
  return gen;
}

const CarGenerators& standard_generators() {
  static const CarGenerators gen = build_generators();
  return gen;
}

std::string to_string(AlgebraLabel label) {
  switch (label) {
    case AlgebraLabel::A1:
      return "A1";
    case AlgebraLabel::A2:
      return "A2";
    case AlgebraLabel::A1Spin:
      return "A1spin";
    case AlgebraLabel::A2Spin:
      return "A2spin";
    case AlgebraLabel::Custom:
      return "custom";
  }
  return "custom";
}

AlgebraLabel parse_algebra_label(const std::string& text) {
  if (text == "A1") return AlgebraLabel::A1;
  if (text == "A2") return AlgebraLabel::A2;
  if (text == "A1spin") return AlgebraLabel::A1Spin;
  if (text == "A2spin") return AlgebraLabel::A2Spin;
  throw UsageError("unknown algebra label '" + text +
                   "' (expected A1, A2, A1spin or A2spin)");
}

SubalgebraBasis::SubalgebraBasis(AlgebraLabel label, const std::array<CMatrix, 4>& units,
                                 double tol)
    : label_(label), units_(units) {
  const Eigen::Index n = units_[0].rows();
  if (n < 2 || n > kMaxDim) {
    throw DimensionError("SubalgebraBasis: ambient dimension out of range");
  }
  for (const CMatrix& u : units_) {
    if (u.rows() != n || u.cols() != n) {
      throw DimensionError("SubalgebraBasis: all units must be square with one ambient dimension");
    }
    if (!u.allFinite()) {
      throw ContractError("SubalgebraBasis: unit entries must be finite");
    }
  }

  auto at = [&](int i, int j) -> const CMatrix& { return units_[2 * i + j]; };

  // Adjoint structure: e(i,j)^+ = e(j,i).
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if ((at(i, j).adjoint() - at(j, i)).cwiseAbs().maxCoeff() > tol) {
        throw ContractError("SubalgebraBasis: units do not satisfy e(i,j)^+ = e(j,i)");
      }
    }
  }

  // Multiplication table: e(i,j) e(k,l) = delta_jk e(i,l).
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          const CMatrix prod = at(i, j) * at(k, l);
          const CMatrix expect = (j == k) ? at(i, l) : CMatrix::Zero(n, n);
          if ((prod - expect).cwiseAbs().maxCoeff() > tol) {
            throw ContractError("SubalgebraBasis: units violate the matrix-unit products");
          }
        }
      }
    }
  }

  // Unitality: e(0,0) + e(1,1) = 1.
  if ((at(0, 0) + at(1, 1) - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > tol) {
    throw ContractError("SubalgebraBasis: diagonal units do not sum to the identity");
  }
}

const CMatrix& SubalgebraBasis::unit(int i, int j) const {
  if (i < 0 || i > 1 || j < 0 || j > 1) {
    throw UsageError("SubalgebraBasis::unit: indices must be 0 or 1");
  }
  return units_[2 * i + j];
}

SubalgebraBasis matrix_units(const CarGenerators& gen, AlgebraLabel label) {
  auto from_annihilator = [&](const CMatrix& a) {
    return std::array<CMatrix, 4>{CMatrix(a.adjoint() * a), CMatrix(a.adjoint()), a,
                                  CMatrix(a * a.adjoint())};
  };
  switch (label) {
    case AlgebraLabel::A1:
      return SubalgebraBasis(label, from_annihilator(gen.a1));
    case AlgebraLabel::A2:
      return SubalgebraBasis(label, from_annihilator(gen.a2));
    case AlgebraLabel::A1Spin:
      return SubalgebraBasis(label, from_annihilator(gen.b1));
    case AlgebraLabel::A2Spin:
      return SubalgebraBasis(label, from_annihilator(gen.b2));
    case AlgebraLabel::Custom:
      break;
  }
  throw UsageError("matrix_units: pass explicit units for a custom subalgebra");
}

const SubalgebraBasis& standard_subalgebra(AlgebraLabel label) {
  static const SubalgebraBasis a1 = matrix_units(standard_generators(), AlgebraLabel::A1);
  static const SubalgebraBasis a2 = matrix_units(standard_generators(), AlgebraLabel::A2);
  static const SubalgebraBasis a1s = matrix_units(standard_generators(), AlgebraLabel::A1Spin);
  static const SubalgebraBasis a2s = matrix_units(standard_generators(), AlgebraLabel::A2Spin);
  switch (label) {
    case AlgebraLabel::A1:
      return a1;
    case AlgebraLabel::A2:
      return a2;
    case AlgebraLabel::A1Spin:
      return a1s;
    case AlgebraLabel::A2Spin:
      return a2s;
    case AlgebraLabel::Custom:
      break;
  }
  throw UsageError("standard_subalgebra: no shared units for custom subalgebras");
}

CMatrix apply_grading(const CarGenerators& gen, const CMatrix& x) {
  if (x.rows() != gen.u1.rows() || x.cols() != gen.u1.cols()) {
    throw DimensionError("apply_grading: operand must match the representation dimension");
  }
  const CMatrix g = gen.u1 * gen.u2;
  return g * x * g;
}

EvenOddParts even_odd_split(const CarGenerators& gen, const CMatrix& x) {
  const CMatrix flipped = apply_grading(gen, x);
  EvenOddParts parts;
  parts.even = (x + flipped) / 2.0;
  parts.odd = (x - flipped) / 2.0;
  return parts;
}

}  // namespace carent

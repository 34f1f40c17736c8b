#pragma once

#include "carent/types.hpp"

#include <array>
#include <string>

namespace carent {

/// Generators of two fermionic modes represented concretely on C^4.
///
/// The representation is fixed once and for all:
///   a1 = E21 (x) I2          annihilator of mode 1,
///   b2 = I2 (x) E21          tensor-local annihilator of mode 2,
///   u1 = diag(1,-1) (x) I2   Klein unitary of mode 1,
///   u2 = I2 (x) diag(1,-1)   Klein unitary of mode 2,
///   a2 = u1 * b2             anticommuting annihilator of mode 2,
///   b1 = u2 * a1             tensor-local version of mode 1.
/// All entries are exact integers, so algebraic identities between the
/// generators hold to the last bit.
struct CarGenerators {
  CMatrix a1;
  CMatrix a2;
  CMatrix u1;
  CMatrix u2;
  CMatrix b1;
  CMatrix b2;
};

/// Build the generators above from scratch.
CarGenerators build_generators();

/// Shared immutable copy of build_generators().
const CarGenerators& standard_generators();

/// The four distinguished 2x2 subalgebras of the 4x4 representation, plus a
/// label for caller-supplied bases.
enum class AlgebraLabel { A1, A2, A1Spin, A2Spin, Custom };

std::string to_string(AlgebraLabel label);

/// Parse "A1" / "A2" / "A1spin" / "A2spin" (as accepted on the command line).
AlgebraLabel parse_algebra_label(const std::string& text);

/// A system of 2x2 matrix units inside the ambient algebra: four matrices
/// e(i,j), i,j in {0,1}, with e(i,j)*e(k,l) = delta_jk e(i,l),
/// e(i,j)^+ = e(j,i) and e(0,0) + e(1,1) = 1.  Construction validates all of
/// these, so holding a SubalgebraBasis certifies the relations.
class SubalgebraBasis {
 public:
  /// `units` in row-major order: { e(0,0), e(0,1), e(1,0), e(1,1) }.
  SubalgebraBasis(AlgebraLabel label, const std::array<CMatrix, 4>& units,
                  double tol = defaults::commute_tol);

  const CMatrix& unit(int i, int j) const;
  AlgebraLabel label() const { return label_; }
  Eigen::Index ambient_dim() const { return units_[0].rows(); }

 private:
  AlgebraLabel label_;
  std::array<CMatrix, 4> units_;
};

/// Matrix units of one of the four named subalgebras.  The unit systems are
///   A1:     from a1          (mode 1, anticommuting form)
///   A2:     from a2          (mode 2, anticommuting form)
///   A1spin: from b1          (mode 1, tensor-local form)
///   A2spin: from b2          (mode 2, tensor-local form)
/// via (a^+ a, a^+, a, a a^+).  A1 commutes elementwise with A2spin, and
/// A1spin with A2; A1 and A2 only graded-commute.
SubalgebraBasis matrix_units(const CarGenerators& gen, AlgebraLabel label);

/// Shared immutable matrix units of a named subalgebra in the standard
/// representation (rejects Custom).
const SubalgebraBasis& standard_subalgebra(AlgebraLabel label);

/// Grading automorphism x -> (u1 u2) x (u1 u2).  Flips the sign of odd
/// monomials in the generators; involutive.
CMatrix apply_grading(const CarGenerators& gen, const CMatrix& x);

/// Even/odd parts of x under the grading; even + odd == x exactly.
struct EvenOddParts {
  CMatrix even;
  CMatrix odd;
};
EvenOddParts even_odd_split(const CarGenerators& gen, const CMatrix& x);

}  // namespace carent

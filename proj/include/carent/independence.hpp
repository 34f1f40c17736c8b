#pragma once

#include "carent/car_algebra.hpp"
#include "carent/states.hpp"
#include "carent/types.hpp"

#include <optional>
#include <string>

namespace carent {

/// Polar data of a pure qubit state: density pure_qubit_density(phi, theta).
/// The state is diagonal exactly when cos(phi)*sin(phi) vanishes, i.e. at
/// phi = 0 or pi/2.
struct QubitAngles {
  double phi = 0.0;
  double theta = 0.0;
};

enum class PairCompatibility { Compatible, Incompatible };

std::string to_string(PairCompatibility c);

/// Decide whether pure prescribed marginals (one per mode) admit a joint
/// state.  They fail to exactly when BOTH marginals are non-diagonal: any
/// diagonal member can be extended, while two non-diagonal pure marginals
/// cannot be realized by one state on the two-mode algebra.
PairCompatibility pure_pair_compatibility(const QubitAngles& p1, const QubitAngles& p2,
                                          double diagonal_tol = defaults::diagonal_tol);

enum class FeasibilityStatus { Feasible, Infeasible, Undecided };

std::string to_string(FeasibilityStatus s);

struct FeasibilityReport {
  FeasibilityStatus status = FeasibilityStatus::Undecided;
  std::optional<DensityMatrix> witness;  ///< joint state, present iff Feasible
  double residual = 0.0;  ///< marginal residual (Feasible/Undecided) or stalled gap (Infeasible)
  int iterations = 0;
};

/// Numerically decide whether 2x2 marginals (m1 for the first mode's
/// subalgebra, m2 for the second) extend to a joint 4x4 state.
///
/// Runs Dykstra's alternating projections between the set of density
/// matrices and the affine set of Hermitian matrices with the prescribed
/// marginals.  If the sets intersect, the cone iterate converges into the
/// intersection and is returned as a witness once its marginal residual
/// drops to `tol`.  If they do not, the distance between the two projections
/// stalls at the positive set-to-set gap: once that gap exceeds 10*tol and
/// stays fixed (within defaults::feasibility_gap_eps) for
/// defaults::feasibility_window consecutive iterations, the pair is declared
/// Infeasible.  Neither event within max_iters returns Undecided.
FeasibilityReport joint_feasibility(const DensityMatrix& m1, const DensityMatrix& m2,
                                    double tol = defaults::feasibility_tol,
                                    int max_iters = defaults::feasibility_max_iters);

/// True when w factorizes across the two subalgebras on products of their
/// units: tr(w eA eB) = tr(w eA) tr(w eB) for all sixteen unit pairs, within
/// tol.  The bases must commute elementwise (UsageError otherwise); the
/// check is meaningless for merely graded-commuting pairs.
bool product_check(const DensityMatrix& w, const SubalgebraBasis& a, const SubalgebraBasis& b,
                   double tol = 1e-8);

}  // namespace carent

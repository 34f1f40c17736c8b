#pragma once

#include "carent/car_algebra.hpp"
#include "carent/states.hpp"
#include "carent/types.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace carent {

/// Knobs of the convex-roof search.  The defaults are the ones the test
/// suite and the CLI use; with a fixed seed the search is fully
/// deterministic.
struct RoofSettings {
  int ensemble_size = 8;     ///< number of pure members kept in the ensemble
  int starts = 16;           ///< independent restarts (start 0 is the eigen-ensemble)
  std::uint64_t seed = 0;    ///< base seed; each restart derives its own stream
  int max_iters = 2000;      ///< proposal budget per restart
  double step_tol = 1e-9;    ///< stop once the step size decays below this
};

/// One pure state with its mixing weight.
struct EnsembleMember {
  double weight = 0.0;
  DensityMatrix state;
};
using Ensemble = std::vector<EnsembleMember>;

/// Outcome of a roof computation.  `value` always equals the weighted
/// objective of `ensemble`; `converged` reports whether the best restart
/// halted on its own (step decay or objective at the floor) rather than by
/// exhausting max_iters.
struct RoofResult {
  double value = 0.0;
  Ensemble ensemble;
  bool converged = false;
  long long iterations = 0;  ///< proposals evaluated across all restarts
};

/// Objective evaluated on a single normalized pure member.
using MemberCost = std::function<double(const CVector&)>;

/// Cost psi -> S(psi restricted to `a`).
MemberCost marginal_entropy_cost(const SubalgebraBasis& a);

/// Cost psi -> |S(psi|a) - S(psi|b)|.
MemberCost asymmetry_cost(const SubalgebraBasis& a, const SubalgebraBasis& b);

/// Minimize sum_i weight_i * cost(member_i) over pure decompositions of w.
///
/// Decompositions are parametrized the standard way: with w = sum_r mu_r
/// |v_r><v_r| (rank r), every size-k ensemble arises as psi_i = F * (row i of
/// U)^T for F = [sqrt(mu_1) v_1 ... sqrt(mu_r) v_r] and U a k x k unitary of
/// which only the first r rows enter.  The search walks U with random complex
/// Givens rotations and an adaptive step, accepting strict improvements;
/// restarts are reduced order-independently (smallest value, ties to the
/// earliest restart).  Requires ensemble_size >= rank(w).
RoofResult roof_optimize(const DensityMatrix& w, const MemberCost& cost,
                         const RoofSettings& settings = {});

/// Entanglement of w relative to the subalgebra `a`: the convex roof of the
/// marginal entropy.  Pure states short-circuit to S(w|a) with the trivial
/// one-member ensemble.
RoofResult roof_entanglement(const DensityMatrix& w, const SubalgebraBasis& a,
                             const RoofSettings& settings = {});

/// Asymmetry entanglement of w for the pair (a, b): the convex roof of
/// |S(.|a) - S(.|b)|.  Pure states short-circuit analogously.  Symmetric in
/// (a, b) bit for bit.
RoofResult roof_asymmetry(const DensityMatrix& w, const SubalgebraBasis& a,
                          const SubalgebraBasis& b, const RoofSettings& settings = {});

/// Classification of an optimal ensemble: `half_sided` when every member
/// restricts purely (entropy <= tol) to the subalgebra `a`; `maximal` when
/// in addition the roof value reaches log 2 - tol, the largest value a 2x2
/// marginal entropy can contribute.
struct Classification {
  bool half_sided = false;
  bool maximal = false;
};
Classification classify_half_sided(const RoofResult& result, const SubalgebraBasis& a,
                                   double tol = defaults::classify_tol);

/// Eigenvalues of the A2-restriction of product_family(phi, 0, phi_prime, 0):
///   p_pm = (1 +- sqrt(1 - 4 (1 - g^2) cos^2 phi' sin^2 phi')) / 2,
/// with g = cos^2 phi - sin^2 phi.  Clamped into [0, 1] against roundoff.
struct FamilyEigenvalues {
  double p_plus = 1.0;
  double p_minus = 0.0;
};
FamilyEigenvalues family_eigenvalues(double phi, double phi_prime);

/// Asymmetry entanglement of the product family in closed form:
/// H(p_plus, p_minus) in nats.  Zero exactly when phi_prime = 0; increases
/// to log 2 at phi = phi_prime = pi/4.
double family_asymmetry(double phi, double phi_prime);

/// Invert x = family_asymmetry(pi/4, phi_prime) for phi_prime in [0, pi/4]
/// by bisection; the returned parameters reproduce x within tol.  Requires
/// x in [0, log 2].
FamilyParams invert_asymmetry(double x, double tol = 1e-9);

}  // namespace carent

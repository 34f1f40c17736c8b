#pragma once

#include "carent/entanglement.hpp"
#include "carent/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace carent {

/// One check inside a verification report.
struct CheckLine {
  enum class Kind {
    Closeness,   ///< pass iff |measured - expected| <= tol
    LowerBound,  ///< pass iff measured >= expected - tol
    Flag,        ///< pass iff the boolean condition held (measured unused)
  };

  std::string name;
  Kind kind = Kind::Closeness;
  bool pass = false;
  double measured = 0.0;
  double expected = 0.0;
  double tol = 0.0;
  bool in_nats = false;  ///< entropy-like; may be displayed in bits
};

/// Outcome of one verification section.
struct VerifyReport {
  std::string section;
  std::vector<CheckLine> lines;
  double elapsed_ms = 0.0;

  bool pass() const;
  void add_closeness(const std::string& name, double measured, double expected, double tol,
                     bool in_nats = false);
  void add_lower_bound(const std::string& name, double measured, double bound, double tol,
                       bool in_nats = false);
  void add_flag(const std::string& name, bool ok);
};

/// Pretty-print one report; entropy-like values are converted to bits when
/// `bits` is set.
void print_report(std::ostream& os, const VerifyReport& report, bool bits = false);

/// The maximally value-violating pure state: all coefficients 1/2.  Checks
/// S(w|A1) = 0, S(w|A2) = log 2, S(w) = 0 and triangle gap = log 2, each to
/// 1e-9.  elapsed_ms times only the computation (caches pre-warmed).
VerifyReport verify_triangle();

/// Sweep a grid of pure marginal pairs.  Non-diagonal pairs (an
/// interior grid of `grid_steps` x `grid_steps` polar angles) must be
/// declared Incompatible and never admit a feasible joint state; every pair
/// with a diagonal member must produce a witness whose marginals match to
/// `witness_tol`.
VerifyReport verify_nonindependence(int grid_steps = 20, double witness_tol = 1e-7);

/// For each target x: invert the closed-form asymmetry (tolerance
/// `invert_tol`), rebuild the state, and cross-check the convex roof against
/// x (tolerance `roof_tol`).  Also checks that the resulting ensemble is
/// half-sided for the first mode.
VerifyReport verify_theorem2(const std::vector<double>& targets,
                             double invert_tol = 1e-9, double roof_tol = 1e-6,
                             const RoofSettings& settings = {});

/// Default target list for verify_theorem2: {0, 0.1, 0.3, 0.5, 0.6, log 2}.
std::vector<double> default_theorem2_targets();

/// A local unitary on the first tensor factor raises the mode-2 marginal
/// entropy from 0 to log 2 while leaving the tensor-local mode-2 marginal
/// untouched.
VerifyReport verify_local_automorphism();

/// Sample random 4x4 states (ranks cycling 1..4) and check the
/// subadditivity gap S(w|A1) + S(w|A2) - S(w) >= -1e-9.
VerifyReport verify_subadditivity(int samples = 1000, std::uint64_t seed = 0);

}  // namespace carent

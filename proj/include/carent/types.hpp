#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace carent {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Matrix2c = Eigen::Matrix2cd;

/// Largest ambient dimension the library works with.  Two fermionic modes
/// live in dimension 4; composite examples with a third tensor factor need
/// dimension 8, so we allow a little headroom.
inline constexpr int kMaxDim = 16;

/// Central numeric defaults.  Every tolerance used by the library is named
/// here so tests and the CLI agree on the same values.
namespace defaults {
inline constexpr double hermiticity_tol = 1e-10;   // input hermiticity checks
inline constexpr double density_tol = 1e-10;       // density-matrix invariants
inline constexpr double spectrum_clip = 1e-12;     // eigenvalues below this count as zero
inline constexpr double diagonal_tol = 1e-12;      // |cos*sin| threshold for diagonal qubit states
inline constexpr double unitarity_tol = 1e-10;     // ||v^+ v - 1|| for supplied unitaries
inline constexpr double purity_tol = 1e-10;        // top eigenvalue >= 1 - tol means pure
inline constexpr double coeff_norm_tol = 1e-12;    // pure-coefficient normalization
inline constexpr double commute_tol = 1e-12;       // commutation precondition checks
inline constexpr double feasibility_tol = 1e-8;    // marginal residual for a feasibility witness
inline constexpr int feasibility_max_iters = 20000;
inline constexpr int feasibility_window = 200;     // iterations of a stable gap before declaring infeasible
inline constexpr double feasibility_gap_eps = 1e-11;  // "stable" means the gap moves less than this
inline constexpr double roof_floor = 1e-14;        // objective value at which the roof search stops
inline constexpr double roof_weight_clip = 1e-12;  // ensemble members below this weight are dropped
inline constexpr double classify_tol = 1e-6;       // half-sided / maximal classification
}  // namespace defaults

/// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix or vector sizes do not match what an operation requires.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value violates a mathematical invariant (hermiticity, positivity, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// The caller asked for something outside an operation's domain.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written, or its contents are malformed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace carent

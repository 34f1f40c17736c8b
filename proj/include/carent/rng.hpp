#pragma once

#include "carent/types.hpp"

#include <cstdint>
#include <random>

namespace carent {

/// Deterministic random source.  All randomness in the library flows through
/// this class so that a fixed seed reproduces every result bit for bit.  The
/// Gaussian variates use an explicit Box-Muller transform rather than
/// std::normal_distribution, whose output is not pinned down by the standard
/// and differs between standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1).
  double uniform();

  /// Standard normal variate.
  double gaussian();

  /// Complex variate with independent standard normal real/imaginary parts.
  Complex complex_gaussian();

  /// Uniform integer in [0, bound).  Requires bound >= 1.
  std::uint64_t integer(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Derive an independent stream for (seed, stream) pairs, e.g. one stream per
/// optimizer restart.  Uses a splitmix64-style mix so nearby seeds decorrelate.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// n x n matrix with i.i.d. complex standard normal entries.
CMatrix random_ginibre(Rng& rng, Eigen::Index rows, Eigen::Index cols);

/// Haar-distributed n x n unitary (QR of a Ginibre matrix with the phase
/// ambiguity fixed by the diagonal of R).
CMatrix random_unitary(Rng& rng, Eigen::Index n);

}  // namespace carent

#include "carent/rng.hpp"

#include <cmath>
#include <numbers>

namespace carent {

double Rng::uniform() {
  // 53 random bits scaled into [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Basic (trigonometric) Box-Muller.  1 - uniform() lies in (0, 1], which
  // keeps the logarithm finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::complex_gaussian() {
  // Sequence the two draws explicitly: the evaluation order of function
  // arguments is unspecified and must not affect reproducibility.
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im);
}

std::uint64_t Rng::integer(std::uint64_t bound) {
  if (bound == 0) {
    throw UsageError("Rng::integer: bound must be positive");
  }
  // Scaling a 53-bit uniform is deterministic and unbiased enough for the
  // small bounds used here (index selection).
  return static_cast<std::uint64_t>(uniform() * static_cast<double>(bound));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

CMatrix random_ginibre(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  if (rows < 1 || cols < 1) {
    throw DimensionError("random_ginibre: dimensions must be positive");
  }
  CMatrix g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      g(i, j) = rng.complex_gaussian();
    }
  }
  return g;
}

CMatrix random_unitary(Rng& rng, Eigen::Index n) {
  const CMatrix g = random_ginibre(rng, n, n);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the column phases so the factorization (and hence the sample) is a
  // well-defined function of the Ginibre draw.
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double ad = std::abs(d);
    if (ad > 0.0) {
      q.col(j) *= d / ad;
    }
  }
  return q;
}

}  // namespace carent

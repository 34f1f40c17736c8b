#include "carent/entanglement.hpp"

#include "carent/linalg.hpp"
#include "carent/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace carent {

namespace {

/// Entropy of a 2x2 density from trace and determinant (the eigenvalues are
/// the roots of p^2 - tr p + det).
double entropy_2x2(double tr, double det) {
  double disc = tr * tr - 4.0 * det;
  disc = std::max(disc, 0.0);
  const double root = std::sqrt(disc);
  double hi = (tr + root) / 2.0;
  double lo = (tr - root) / 2.0;
  hi = std::min(std::max(hi, 0.0), 1.0);
  lo = std::min(std::max(lo, 0.0), 1.0);
  double s = 0.0;
  if (hi > defaults::spectrum_clip) s -= hi * std::log(hi);
  if (lo > defaults::spectrum_clip) s -= lo * std::log(lo);
  return std::max(s, 0.0);
}

/// Marginal data of a normalized pure vector in a 2x2 subalgebra, reduced to
/// the (trace, determinant) pair that fixes the spectrum.
struct MarginalTraceDet {
  double tr = 0.0;
  double det = 0.0;
};

MarginalTraceDet pure_marginal_trace_det(const CMatrix& e00, const CMatrix& e10,
                                         const CMatrix& e11, const CVector& psi) {
  const double m00 = psi.dot(e00 * psi).real();
  const double m11 = psi.dot(e11 * psi).real();
  const Complex m01 = psi.dot(e10 * psi);  // marginal entry (0,1) = <psi| e(1,0) |psi>
  return {m00 + m11, m00 * m11 - std::norm(m01)};
}

/// Weighted cost of one (possibly unnormalized) ensemble column.  Columns of
/// negligible weight contribute nothing.
double column_cost(const CVector& column, const MemberCost& cost) {
  const double weight = column.squaredNorm();
  if (weight < defaults::roof_weight_clip) {
    return 0.0;
  }
  return weight * cost(CVector(column / std::sqrt(weight)));
}

void check_roof_settings(const RoofSettings& s) {
  if (s.ensemble_size < 1 || s.ensemble_size > 256) {
    throw UsageError("roof settings: ensemble_size must be in [1, 256]");
  }
  if (s.starts < 1) {
    throw UsageError("roof settings: starts must be positive");
  }
  if (s.max_iters < 0) {
    throw UsageError("roof settings: max_iters must be non-negative");
  }
  if (!(s.step_tol > 0.0) || s.step_tol >= 1.0) {
    throw UsageError("roof settings: step_tol must lie in (0, 1)");
  }
}

RoofResult pure_shortcut(const DensityMatrix& w, double value) {
  RoofResult r;
  r.value = value;
  r.ensemble.push_back(EnsembleMember{1.0, w});
  r.converged = true;
  r.iterations = 0;
  return r;
}

}  // namespace

MemberCost marginal_entropy_cost(const SubalgebraBasis& a) {
  const CMatrix e00 = a.unit(0, 0);
  const CMatrix e10 = a.unit(1, 0);
  const CMatrix e11 = a.unit(1, 1);
  return [e00, e10, e11](const CVector& psi) {
    const MarginalTraceDet m = pure_marginal_trace_det(e00, e10, e11, psi);
    return entropy_2x2(m.tr, m.det);
  };
}

MemberCost asymmetry_cost(const SubalgebraBasis& a, const SubalgebraBasis& b) {
  const CMatrix a00 = a.unit(0, 0);
  const CMatrix a10 = a.unit(1, 0);
  const CMatrix a11 = a.unit(1, 1);
  const CMatrix b00 = b.unit(0, 0);
  const CMatrix b10 = b.unit(1, 0);
  const CMatrix b11 = b.unit(1, 1);
  return [a00, a10, a11, b00, b10, b11](const CVector& psi) {
    const MarginalTraceDet ma = pure_marginal_trace_det(a00, a10, a11, psi);
    const MarginalTraceDet mb = pure_marginal_trace_det(b00, b10, b11, psi);
    return std::abs(entropy_2x2(ma.tr, ma.det) - entropy_2x2(mb.tr, mb.det));
  };
}

RoofResult roof_optimize(const DensityMatrix& w, const MemberCost& cost,
                         const RoofSettings& settings) {
  check_roof_settings(settings);
  if (!cost) {
    throw UsageError("roof_optimize: cost function must be callable");
  }

  const HermEigenSystem es = herm_eigensystem(w.mat());
  Eigen::Index rank = 0;
  while (rank < es.eigenvalues.size() && es.eigenvalues(rank) > defaults::spectrum_clip) {
    ++rank;
  }
  if (rank == 0) {
    throw ContractError("roof_optimize: state has numerically empty spectrum");
  }
  const Eigen::Index k = settings.ensemble_size;
  if (k < rank) {
    throw UsageError("roof settings: ensemble_size is below the state rank");
  }

  // Thin factor F with columns sqrt(mu_r) v_r; every ensemble is F * W for a
  // row-coisometric r x k block W taken from a k x k unitary.
  const Eigen::Index n = w.dim();
  CMatrix factor(n, rank);
  for (Eigen::Index c = 0; c < rank; ++c) {
    factor.col(c) = es.eigenvectors.col(c) * std::sqrt(es.eigenvalues(c));
  }

  double best_value = std::numeric_limits<double>::infinity();
  CMatrix best_psi;
  bool best_converged = false;
  long long proposals = 0;

  for (int start = 0; start < settings.starts; ++start) {
    Rng rng(mix_seed(settings.seed, static_cast<std::uint64_t>(start)));
    const CMatrix u = (start == 0) ? CMatrix(CMatrix::Identity(k, k)) : random_unitary(rng, k);
    CMatrix psi = factor * u.topRows(rank);  // n x k ensemble block

    std::vector<double> contrib(static_cast<std::size_t>(k), 0.0);
    double objective = 0.0;
    for (Eigen::Index c = 0; c < k; ++c) {
      contrib[static_cast<std::size_t>(c)] = column_cost(psi.col(c), cost);
      objective += contrib[static_cast<std::size_t>(c)];
    }

    double step = 0.5;
    int fails = 0;
    bool converged = false;
    // The walk explores with an accept-rewarded step for the first part of
    // the budget, then anneals monotonically so the step tolerance is
    // actually reachable.
    const int explore_iters = (settings.max_iters / 5) * 3;
    if (k < 2) {
      converged = true;  // a single column admits no rotation; objective is fixed
    } else {
      for (int it = 0; it < settings.max_iters; ++it) {
        if (objective <= defaults::roof_floor) {
          converged = true;
          break;
        }
        // Random complex Givens rotation on a random column pair.
        const Eigen::Index p = static_cast<Eigen::Index>(rng.integer(static_cast<std::uint64_t>(k)));
        Eigen::Index q = static_cast<Eigen::Index>(rng.integer(static_cast<std::uint64_t>(k - 1)));
        if (q >= p) ++q;
        const double alpha = step * rng.gaussian();
        const double beta = 2.0 * std::numbers::pi * rng.uniform();
        const double ca = std::cos(alpha);
        const double sa = std::sin(alpha);
        const Complex phase = std::polar(1.0, beta);

        const CVector new_p = ca * psi.col(p) + std::conj(phase) * sa * psi.col(q);
        const CVector new_q = -phase * sa * psi.col(p) + ca * psi.col(q);
        ++proposals;
        const double cost_p = column_cost(new_p, cost);
        const double cost_q = column_cost(new_q, cost);
        const double old = contrib[static_cast<std::size_t>(p)] + contrib[static_cast<std::size_t>(q)];
        if (cost_p + cost_q < old - 1e-15) {
          psi.col(p) = new_p;
          psi.col(q) = new_q;
          objective += cost_p + cost_q - old;
          contrib[static_cast<std::size_t>(p)] = cost_p;
          contrib[static_cast<std::size_t>(q)] = cost_q;
          fails = 0;
          if (it < explore_iters) {
            step = std::min(step * 1.2, 0.5);
          }
        } else if (++fails >= 12) {
          fails = 0;
          step /= 2.0;
          if (step < settings.step_tol) {
            converged = true;
            break;
          }
        }
      }
    }

    if (objective < best_value) {
      best_value = objective;
      best_psi = psi;
      best_converged = converged;
    }
  }

  RoofResult result;
  result.converged = best_converged;
  result.iterations = proposals;
  double total = 0.0;
  for (Eigen::Index c = 0; c < best_psi.cols(); ++c) {
    const double weight = best_psi.col(c).squaredNorm();
    if (weight < defaults::roof_weight_clip) {
      continue;
    }
    const CVector unit = best_psi.col(c) / std::sqrt(weight);
    result.ensemble.push_back(EnsembleMember{weight, DensityMatrix(unit * unit.adjoint())});
    total += weight * cost(unit);
  }
  result.value = total;
  return result;
}

RoofResult roof_entanglement(const DensityMatrix& w, const SubalgebraBasis& a,
                             const RoofSettings& settings) {
  if (a.ambient_dim() != w.dim()) {
    throw DimensionError("roof_entanglement: basis and state dimensions differ");
  }
  if (is_pure(w)) {
    return pure_shortcut(w, entropy(restrict_state(w, a)));
  }
  return roof_optimize(w, marginal_entropy_cost(a), settings);
}

RoofResult roof_asymmetry(const DensityMatrix& w, const SubalgebraBasis& a,
                          const SubalgebraBasis& b, const RoofSettings& settings) {
  if (a.ambient_dim() != w.dim() || b.ambient_dim() != w.dim()) {
    throw DimensionError("roof_asymmetry: basis and state dimensions differ");
  }
  if (is_pure(w)) {
    const double sa = entropy(restrict_state(w, a));
    const double sb = entropy(restrict_state(w, b));
    return pure_shortcut(w, std::abs(sa - sb));
  }
  return roof_optimize(w, asymmetry_cost(a, b), settings);
}

Classification classify_half_sided(const RoofResult& result, const SubalgebraBasis& a,
                                   double tol) {
  Classification c;
  if (result.ensemble.empty()) {
    return c;
  }
  c.half_sided = true;
  for (const EnsembleMember& member : result.ensemble) {
    if (entropy(restrict_state(member.state, a)) > tol) {
      c.half_sided = false;
      break;
    }
  }
  c.maximal = c.half_sided && result.value >= std::numbers::ln2 - tol;
  return c;
}

FamilyEigenvalues family_eigenvalues(double phi, double phi_prime) {
  validate_family_params(FamilyParams{phi, 0.0, phi_prime, 0.0});
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const double g = c * c - s * s;  // off-diagonal damping of the A2 marginal
  const double cs = std::cos(phi_prime) * std::sin(phi_prime);
  double disc = 1.0 - 4.0 * (1.0 - g * g) * cs * cs;
  disc = std::min(std::max(disc, 0.0), 1.0);
  const double root = std::sqrt(disc);
  FamilyEigenvalues ev;
  ev.p_plus = std::min(std::max((1.0 + root) / 2.0, 0.0), 1.0);
  ev.p_minus = std::min(std::max((1.0 - root) / 2.0, 0.0), 1.0);
  return ev;
}

double family_asymmetry(double phi, double phi_prime) {
  const FamilyEigenvalues ev = family_eigenvalues(phi, phi_prime);
  double s = 0.0;
  if (ev.p_plus > defaults::spectrum_clip) s -= ev.p_plus * std::log(ev.p_plus);
  if (ev.p_minus > defaults::spectrum_clip) s -= ev.p_minus * std::log(ev.p_minus);
  return std::max(s, 0.0);
}

FamilyParams invert_asymmetry(double x, double tol) {
  const double top = std::numbers::ln2;
  if (!std::isfinite(x) || x < -1e-12 || x > top + 1e-12) {
    throw UsageError("invert_asymmetry: x must lie in [0, log 2]");
  }
  if (!(tol > 0.0)) {
    throw UsageError("invert_asymmetry: tol must be positive");
  }
  x = std::min(std::max(x, 0.0), top);

  const double quarter_pi = std::numbers::pi / 4.0;
  FamilyParams p{quarter_pi, 0.0, 0.0, 0.0};
  if (x == 0.0) {
    return p;  // phi_prime = 0 gives exactly zero
  }
  if (x >= family_asymmetry(quarter_pi, quarter_pi)) {
    p.phi_prime = quarter_pi;
    return p;
  }

  // family_asymmetry(pi/4, .) increases monotonically on [0, pi/4]; plain
  // bisection on the residual.
  double lo = 0.0;
  double hi = quarter_pi;
  for (int it = 0; it < 200; ++it) {
    const double mid = (lo + hi) / 2.0;
    const double f = family_asymmetry(quarter_pi, mid);
    if (std::abs(f - x) <= tol) {
      p.phi_prime = mid;
      return p;
    }
    if (f < x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw Error("invert_asymmetry: bisection did not reach the requested tolerance");
}

}  // namespace carent

#include "carent/verify.hpp"

#include "carent/independence.hpp"
#include "carent/rng.hpp"
#include "carent/states.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

namespace carent {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

bool VerifyReport::pass() const {
  for (const CheckLine& line : lines) {
    if (!line.pass) {
      return false;
    }
  }
  return true;
}

void VerifyReport::add_closeness(const std::string& name, double measured, double expected,
                                 double tol, bool in_nats) {
  CheckLine line;
  line.name = name;
  line.kind = CheckLine::Kind::Closeness;
  line.measured = measured;
  line.expected = expected;
  line.tol = tol;
  line.in_nats = in_nats;
  line.pass = std::isfinite(measured) && std::abs(measured - expected) <= tol;
  lines.push_back(std::move(line));
}

void VerifyReport::add_lower_bound(const std::string& name, double measured, double bound,
                                   double tol, bool in_nats) {
  CheckLine line;
  line.name = name;
  line.kind = CheckLine::Kind::LowerBound;
  line.measured = measured;
  line.expected = bound;
  line.tol = tol;
  line.in_nats = in_nats;
  line.pass = std::isfinite(measured) && measured >= bound - tol;
  lines.push_back(std::move(line));
}

void VerifyReport::add_flag(const std::string& name, bool ok) {
  CheckLine line;
  line.name = name;
  line.kind = CheckLine::Kind::Flag;
  line.pass = ok;
  lines.push_back(std::move(line));
}

void print_report(std::ostream& os, const VerifyReport& report, bool bits) {
  os << "== " << report.section << " ==\n";
  for (const CheckLine& line : report.lines) {
    const double scale = (bits && line.in_nats) ? std::numbers::ln2 : 1.0;
    const char* unit = (bits && line.in_nats) ? " bits" : "";
    os << (line.pass ? "[ ok ] " : "[FAIL] ") << line.name;
    switch (line.kind) {
      case CheckLine::Kind::Closeness:
        os << ": value=" << format_value(line.measured / scale) << unit
           << " expected=" << format_value(line.expected / scale) << unit
           << " tol=" << format_value(line.tol / scale);
        break;
      case CheckLine::Kind::LowerBound:
        os << ": value=" << format_value(line.measured / scale) << unit
           << " bound=" << format_value(line.expected / scale) << unit
           << " tol=" << format_value(line.tol / scale);
        break;
      case CheckLine::Kind::Flag:
        break;
    }
    os << "\n";
  }
  os << report.section << ": " << (report.pass() ? "PASS" : "FAIL") << " ("
     << format_value(report.elapsed_ms) << " ms)\n";
}

VerifyReport verify_triangle() {
  VerifyReport report;
  report.section = "triangle";

  const SubalgebraBasis& a1 = standard_subalgebra(AlgebraLabel::A1);
  const SubalgebraBasis& a2 = standard_subalgebra(AlgebraLabel::A2);

  Matrix2c c;
  c << 0.5, 0.5, 0.5, 0.5;

  // Warm-up run so the timed section below measures arithmetic, not
  // first-use initialization.
  {
    const DensityMatrix w = state_from_coeffs(PureCoeffs(c));
    (void)entropy(restrict_state(w, a1));
    (void)entropy(restrict_state(w, a2));
    (void)entropy(w);
    (void)triangle_gap(w);
  }

  const auto t0 = Clock::now();
  const DensityMatrix w = state_from_coeffs(PureCoeffs(c));
  const double s1 = entropy(restrict_state(w, a1));
  const double s2 = entropy(restrict_state(w, a2));
  const double s = entropy(w);
  const double gap = triangle_gap(w);
  report.elapsed_ms = ms_since(t0);

  const double tol = 1e-9;
  report.add_closeness("S(w|A1), mode-1 marginal entropy", s1, 0.0, tol, true);
  report.add_closeness("S(w|A2), mode-2 marginal entropy", s2, std::numbers::ln2, tol, true);
  report.add_closeness("S(w), total entropy", s, 0.0, tol, true);
  report.add_closeness("triangle gap |S(w|A1) - S(w|A2)| - S(w)", gap, std::numbers::ln2, tol,
                       true);
  return report;
}

VerifyReport verify_nonindependence(int grid_steps, double witness_tol) {
  VerifyReport report;
  report.section = "nonindependence";
  if (grid_steps < 1) {
    throw UsageError("verify_nonindependence: grid_steps must be positive");
  }

  const auto t0 = Clock::now();
  const double half_pi = std::numbers::pi / 2.0;
  const double two_pi = 2.0 * std::numbers::pi;
  const int n = grid_steps;

  std::vector<QubitAngles> interior;
  interior.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    QubitAngles a;
    a.phi = half_pi * static_cast<double>(i + 1) / static_cast<double>(n + 1);
    a.theta = two_pi * static_cast<double>(i) / static_cast<double>(n);
    interior.push_back(a);
  }

  // Non-diagonal grid: both marginals strictly between the diagonal states.
  int incompatible = 0;
  int infeasible = 0;
  int feasible = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      QubitAngles p1 = interior[static_cast<std::size_t>(i)];
      QubitAngles p2 = interior[static_cast<std::size_t>(j)];
      p2.theta = two_pi * (static_cast<double>(j) + 0.5) / static_cast<double>(n + 1);
      if (pure_pair_compatibility(p1, p2) == PairCompatibility::Incompatible) {
        ++incompatible;
      }
      const DensityMatrix m1{CMatrix(pure_qubit_density(p1.phi, p1.theta))};
      const DensityMatrix m2{CMatrix(pure_qubit_density(p2.phi, p2.theta))};
      const FeasibilityReport fr = joint_feasibility(m1, m2);
      if (fr.status == FeasibilityStatus::Infeasible) {
        ++infeasible;
      } else if (fr.status == FeasibilityStatus::Feasible) {
        ++feasible;
      }
    }
  }
  const int grid_total = n * n;
  report.add_closeness("non-diagonal pairs declared Incompatible",
                       static_cast<double>(incompatible), static_cast<double>(grid_total), 0.0);
  report.add_closeness("non-diagonal pairs with a feasible joint state",
                       static_cast<double>(feasible), 0.0, 0.0);
  report.add_closeness("non-diagonal pairs declared Infeasible", static_cast<double>(infeasible),
                       static_cast<double>(grid_total), 0.0);

  // Pairs with at least one diagonal member must extend to a joint state.
  std::vector<QubitAngles> all = interior;
  all.push_back(QubitAngles{0.0, 0.0});
  all.push_back(QubitAngles{half_pi, 0.0});
  const std::vector<QubitAngles> diagonal = {QubitAngles{0.0, 0.0}, QubitAngles{half_pi, 0.0}};

  int diag_pairs = 0;
  int diag_feasible = 0;
  int diag_compatible = 0;
  double worst_witness_residual = 0.0;
  auto check_pair = [&](const QubitAngles& p1, const QubitAngles& p2) {
    ++diag_pairs;
    if (pure_pair_compatibility(p1, p2) == PairCompatibility::Compatible) {
      ++diag_compatible;
    }
    const DensityMatrix m1{CMatrix(pure_qubit_density(p1.phi, p1.theta))};
    const DensityMatrix m2{CMatrix(pure_qubit_density(p2.phi, p2.theta))};
    const FeasibilityReport fr = joint_feasibility(m1, m2);
    if (fr.status != FeasibilityStatus::Feasible || !fr.witness.has_value()) {
      return;
    }
    ++diag_feasible;
    const CMatrix d1 =
        restrict_state(*fr.witness, standard_subalgebra(AlgebraLabel::A1)).mat() - m1.mat();
    const CMatrix d2 =
        restrict_state(*fr.witness, standard_subalgebra(AlgebraLabel::A2)).mat() - m2.mat();
    worst_witness_residual = std::max(
        {worst_witness_residual, d1.cwiseAbs().maxCoeff(), d2.cwiseAbs().maxCoeff()});
  };
  for (const QubitAngles& d : diagonal) {
    for (const QubitAngles& other : all) {
      check_pair(d, other);
      check_pair(other, d);
    }
  }
  report.add_closeness("diagonal-member pairs declared Compatible",
                       static_cast<double>(diag_compatible), static_cast<double>(diag_pairs), 0.0);
  report.add_closeness("diagonal-member pairs with a witness", static_cast<double>(diag_feasible),
                       static_cast<double>(diag_pairs), 0.0);
  report.add_closeness("worst witness marginal residual", worst_witness_residual, 0.0,
                       witness_tol);

  report.elapsed_ms = ms_since(t0);
  return report;
}

std::vector<double> default_theorem2_targets() {
  return {0.0, 0.1, 0.3, 0.5, 0.6, std::numbers::ln2};
}

VerifyReport verify_theorem2(const std::vector<double>& targets, double invert_tol,
                             double roof_tol, const RoofSettings& settings) {
  VerifyReport report;
  report.section = "theorem2";
  const auto t0 = Clock::now();

  const SubalgebraBasis& a1 = standard_subalgebra(AlgebraLabel::A1);
  const SubalgebraBasis& a2 = standard_subalgebra(AlgebraLabel::A2);

  for (const double x : targets) {
    const std::string tag = "x=" + format_value(x);
    const FamilyParams p = invert_asymmetry(x, invert_tol);
    const double closed = family_asymmetry(p.phi, p.phi_prime);
    report.add_closeness(tag + ": closed-form asymmetry at inverted angles", closed, x,
                         invert_tol, true);

    const DensityMatrix w = product_family(p);
    const RoofResult roof = roof_asymmetry(w, a1, a2, settings);
    report.add_closeness(tag + ": convex-roof asymmetry of the rebuilt state", roof.value, x,
                         roof_tol, true);

    const Classification cls = classify_half_sided(roof, a1);
    report.add_flag(tag + ": optimal ensemble is half-sided for mode 1", cls.half_sided);
  }

  report.elapsed_ms = ms_since(t0);
  return report;
}

VerifyReport verify_local_automorphism() {
  VerifyReport report;
  report.section = "local-auto";
  const auto t0 = Clock::now();

  const SubalgebraBasis& a2 = standard_subalgebra(AlgebraLabel::A2);
  const SubalgebraBasis& a2s = standard_subalgebra(AlgebraLabel::A2Spin);

  const DensityMatrix before = product_family(FamilyParams{0.0, 0.0, std::numbers::pi / 4.0, 0.0});
  const double s_before = entropy(restrict_state(before, a2));
  const CMatrix spin_before = restrict_state(before, a2s).mat();

  const DensityMatrix after = apply_local_automorphism(before, real_rotation(std::numbers::pi / 4.0));
  const double s_after = entropy(restrict_state(after, a2));
  const CMatrix spin_after = restrict_state(after, a2s).mat();

  report.add_closeness("S(w|A2) before the mode-1 rotation", s_before, 0.0, 1e-9, true);
  report.add_closeness("S(w|A2) after the mode-1 rotation", s_after, std::numbers::ln2, 1e-9,
                       true);
  report.add_closeness("change of the tensor-local mode-2 marginal",
                       (spin_after - spin_before).cwiseAbs().maxCoeff(), 0.0, 1e-12);

  report.elapsed_ms = ms_since(t0);
  return report;
}

VerifyReport verify_subadditivity(int samples, std::uint64_t seed) {
  VerifyReport report;
  report.section = "subadditivity";
  if (samples < 1) {
    throw UsageError("verify_subadditivity: samples must be positive");
  }
  const auto t0 = Clock::now();

  Rng rng(mix_seed(seed, 0));
  double min_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const Eigen::Index rank = 1 + (i % 4);
    const DensityMatrix w = random_density(rng, 4, rank);
    min_gap = std::min(min_gap, subadditivity_gap(w));
  }

  report.add_lower_bound("minimum subadditivity gap over " + std::to_string(samples) +
                             " random states",
                         min_gap, 0.0, 1e-9, true);
  report.elapsed_ms = ms_since(t0);
  return report;
}

}  // namespace carent

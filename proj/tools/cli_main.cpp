#include "carent/car_algebra.hpp"
#include "carent/entanglement.hpp"
#include "carent/independence.hpp"
#include "carent/io.hpp"
#include "carent/states.hpp"
#include "carent/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

namespace {

using namespace carent;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

/// Entropy-like value with its unit, honoring --bits.
std::string fmt_entropy(double nats, bool bits) {
  if (bits) {
    return fmt12(nats / std::numbers::ln2) + " bits";
  }
  return fmt12(nats) + " nats";
}

struct VerifyOptions {
  std::string section;
  int samples = 1000;
  int grid = 20;
  std::uint64_t seed = 0;
  double x = 0.0;
  bool has_x = false;
  double tol = 0.0;
  bool has_tol = false;
  bool bits = false;
  RoofSettings roof;
};

int run_verify(const VerifyOptions& opt) {
  VerifyReport report;
  if (opt.section == "triangle") {
    report = verify_triangle();
  } else if (opt.section == "nonindependence") {
    report = verify_nonindependence(opt.grid);
  } else if (opt.section == "theorem2") {
    const double invert_tol = opt.has_tol ? opt.tol : 1e-9;
    const std::vector<double> targets =
        opt.has_x ? std::vector<double>{opt.x} : default_theorem2_targets();
    report = verify_theorem2(targets, invert_tol, 1e-6, opt.roof);
    if (opt.has_x) {
      const FamilyParams p = invert_asymmetry(opt.x, invert_tol);
      std::cout << "inverted phi' = " << fmt17(p.phi_prime) << " (phi = pi/4)\n";
    }
  } else if (opt.section == "local-auto" || opt.section == "localauto") {
    report = verify_local_automorphism();
  } else if (opt.section == "subadditivity") {
    report = verify_subadditivity(opt.samples, opt.seed);
  } else {
    throw UsageError("unknown verify section '" + opt.section +
                     "' (expected triangle, nonindependence, theorem2, local-auto or "
                     "subadditivity)");
  }
  print_report(std::cout, report, opt.bits);
  return report.pass() ? 0 : 1;
}

struct SweepOptions {
  int phi_steps = 0;
  int phip_steps = 0;
  double phi_max = std::numbers::pi / 4.0;
  double phip_max = std::numbers::pi / 4.0;
  std::string out;
};

int run_sweep(const SweepOptions& opt) {
  if (opt.phi_steps < 2 || opt.phip_steps < 2) {
    throw UsageError("sweep: --phi-steps and --phip-steps must be at least 2");
  }
  const double half_pi = std::numbers::pi / 2.0;
  if (!(opt.phi_max > 0.0) || opt.phi_max > half_pi || !(opt.phip_max > 0.0) ||
      opt.phip_max > half_pi) {
    throw UsageError("sweep: grid maxima must lie in (0, pi/2]");
  }

  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!opt.out.empty()) {
    file.open(opt.out);
    if (!file) {
      throw ParseError("cannot open '" + opt.out + "' for writing");
    }
    os = &file;
  }

  *os << "phi,phiP,p_plus,p_minus,asym_entanglement_nats\n";
  long rows = 0;
  for (int i = 0; i < opt.phi_steps; ++i) {
    const double phi = opt.phi_max * static_cast<double>(i) / static_cast<double>(opt.phi_steps - 1);
    for (int j = 0; j < opt.phip_steps; ++j) {
      const double phip =
          opt.phip_max * static_cast<double>(j) / static_cast<double>(opt.phip_steps - 1);
      const FamilyEigenvalues ev = family_eigenvalues(phi, phip);
      const double asym = family_asymmetry(phi, phip);
      *os << fmt17(phi) << ',' << fmt17(phip) << ',' << fmt17(ev.p_plus) << ','
          << fmt17(ev.p_minus) << ',' << fmt17(asym) << '\n';
      ++rows;
    }
  }
  if (!opt.out.empty()) {
    file.close();
    if (!file) {
      throw ParseError("failed while writing '" + opt.out + "'");
    }
    std::cout << "sweep: wrote " << rows << " rows to " << opt.out << "\n";
  }
  return 0;
}

struct RoofOptions {
  std::string state_path;
  std::string algebra;
  std::string algebra_b;
  std::string mode = "E";
  RoofSettings settings;
  double classify_tol = defaults::classify_tol;
  bool bits = false;
};

int run_roof(const RoofOptions& opt) {
  const DensityMatrix w = load_state(opt.state_path);
  const SubalgebraBasis& a = standard_subalgebra(parse_algebra_label(opt.algebra));

  RoofResult result;
  const SubalgebraBasis* b = nullptr;
  if (opt.mode == "E") {
    result = roof_entanglement(w, a, opt.settings);
  } else if (opt.mode == "asym") {
    if (opt.algebra_b.empty()) {
      throw UsageError("roof: --algebra-b is required with --mode asym");
    }
    b = &standard_subalgebra(parse_algebra_label(opt.algebra_b));
    result = roof_asymmetry(w, a, *b, opt.settings);
  } else {
    throw UsageError("roof: --mode must be E or asym");
  }

  std::cout << "roof value = " << fmt_entropy(result.value, opt.bits) << "\n";
  std::cout << "converged = " << (result.converged ? "yes" : "no")
            << ", proposals evaluated = " << result.iterations << "\n";
  std::cout << "ensemble (" << result.ensemble.size() << " members):\n";
  for (const EnsembleMember& member : result.ensemble) {
    std::cout << "  weight = " << fmt12(member.weight)
              << "  S(member|" << opt.algebra
              << ") = " << fmt_entropy(entropy(restrict_state(member.state, a)), opt.bits);
    if (b != nullptr) {
      std::cout << "  S(member|" << opt.algebra_b
                << ") = " << fmt_entropy(entropy(restrict_state(member.state, *b)), opt.bits);
    }
    std::cout << "\n";
  }
  const Classification cls = classify_half_sided(result, a, opt.classify_tol);
  std::cout << "half-sided for " << opt.algebra << " = " << (cls.half_sided ? "yes" : "no")
            << ", maximal = " << (cls.maximal ? "yes" : "no") << "\n";
  return 0;
}

struct FeasibilityOptions {
  std::string m1_path;
  std::string m2_path;
  std::string out;
  double tol = defaults::feasibility_tol;
  int max_iters = defaults::feasibility_max_iters;
};

int run_feasibility(const FeasibilityOptions& opt) {
  const DensityMatrix m1 = load_state(opt.m1_path);
  const DensityMatrix m2 = load_state(opt.m2_path);
  const FeasibilityReport report = joint_feasibility(m1, m2, opt.tol, opt.max_iters);

  std::cout << "status = " << to_string(report.status) << "\n";
  std::cout << (report.status == FeasibilityStatus::Infeasible ? "stalled projection gap = "
                                                               : "marginal residual = ")
            << fmt12(report.residual) << "\n";
  std::cout << "iterations = " << report.iterations << "\n";
  if (report.witness.has_value() && !opt.out.empty()) {
    save_state(opt.out, *report.witness);
    std::cout << "witness written to " << opt.out << "\n";
  }
  return report.status == FeasibilityStatus::Undecided ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entanglement toolkit for a two-mode fermion system"};
  app.require_subcommand(1);

  VerifyOptions vopt;
  CLI::App* verify = app.add_subcommand(
      "verify", "run a verification suite (triangle, nonindependence, theorem2, local-auto, "
                "subadditivity)");
  verify->add_option("section", vopt.section, "suite to run")->required();
  verify->add_option("--samples", vopt.samples, "random states for subadditivity");
  verify->add_option("--grid", vopt.grid, "grid steps per axis for nonindependence");
  verify->add_option("--seed", vopt.seed, "random seed");
  CLI::Option* vx = verify->add_option("--x", vopt.x, "single asymmetry target for theorem2");
  CLI::Option* vtol = verify->add_option("--tol", vopt.tol, "tolerance override");
  verify->add_flag("--bits", vopt.bits, "display entropies in bits");
  verify->add_option("--starts", vopt.roof.starts, "roof restarts");
  verify->add_option("--ensemble-size", vopt.roof.ensemble_size, "roof ensemble size");

  SweepOptions sopt;
  CLI::App* sweep = app.add_subcommand("sweep", "tabulate the closed-form product family as CSV");
  sweep->add_option("--phi-steps", sopt.phi_steps, "grid steps in phi")->required();
  sweep->add_option("--phip-steps", sopt.phip_steps, "grid steps in phi'")->required();
  sweep->add_option("--phi-max", sopt.phi_max, "largest phi (default pi/4)");
  sweep->add_option("--phip-max", sopt.phip_max, "largest phi' (default pi/4)");
  sweep->add_option("--out", sopt.out, "output CSV path (stdout when omitted)");

  RoofOptions ropt;
  CLI::App* roof = app.add_subcommand("roof", "convex-roof entanglement of a stored state");
  roof->add_option("--state", ropt.state_path, "state JSON file")->required();
  roof->add_option("--algebra", ropt.algebra, "subalgebra label (A1, A2, A1spin, A2spin)")
      ->required();
  roof->add_option("--mode", ropt.mode, "E (marginal entropy) or asym (entropy asymmetry)");
  roof->add_option("--algebra-b", ropt.algebra_b, "second subalgebra for --mode asym");
  roof->add_option("--seed", ropt.settings.seed, "random seed");
  roof->add_option("--starts", ropt.settings.starts, "independent restarts");
  roof->add_option("--ensemble-size", ropt.settings.ensemble_size, "pure members kept");
  roof->add_option("--max-iters", ropt.settings.max_iters, "proposals per restart");
  roof->add_option("--tol", ropt.classify_tol, "classification tolerance");
  roof->add_flag("--bits", ropt.bits, "display entropies in bits");

  FeasibilityOptions fopt;
  CLI::App* feas = app.add_subcommand(
      "feasibility", "decide whether two 2x2 marginals admit a joint two-mode state");
  feas->add_option("--m1", fopt.m1_path, "first marginal (state JSON)")->required();
  feas->add_option("--m2", fopt.m2_path, "second marginal (state JSON)")->required();
  feas->add_option("--tol", fopt.tol, "witness residual tolerance");
  feas->add_option("--max-iters", fopt.max_iters, "projection iteration budget");
  feas->add_option("--out", fopt.out, "write the witness state here when feasible");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help and friends
    }
    app.exit(e);
    return 2;
  }

  try {
    vopt.has_x = vx->count() > 0;
    vopt.has_tol = vtol->count() > 0;
    if (verify->parsed()) {
      return run_verify(vopt);
    }
    if (sweep->parsed()) {
      return run_sweep(sopt);
    }
    if (roof->parsed()) {
      return run_roof(ropt);
    }
    if (feas->parsed()) {
      return run_feasibility(fopt);
    }
  } catch (const carent::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

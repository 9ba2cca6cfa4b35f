// gck: verification campaigns, pencil construction, separation runs and
// machine-readable reports for Gamma-convexity experiments.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gck/report.hpp"

namespace {

using namespace gck;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GCK_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

void write_or_print(const Json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  os << j.dump(2) << "\n";
}

Json load_json(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open input file: " + path);
  Json j;
  is >> j;
  return j;
}

int finish(RunReport& rep, const std::chrono::steady_clock::time_point& t0,
           const std::string& out_path) {
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
  write_or_print(rep.to_json(), out_path);
  return rep.all_pass() ? 0 : 1;
}

std::vector<int> parse_levels(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw CLI::ValidationError("--levels", "empty level list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gamma-convexity toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = default_seed();
  int threads = 1;
  app.add_option("--seed", seed, "RNG seed (default: GCK_SEED or 0)");
  app.add_option("--threads", threads,
                 "worker threads; 1 (default) guarantees bit-stable reports");

  // construct-pencil
  auto* sc_construct = app.add_subcommand("construct-pencil", "build a TV screen pencil");
  int cp_d = 2;
  bool cp_explicit = false;
  std::string cp_emit = "json", cp_out;
  sc_construct->add_option("--d", cp_d, "TV screen degree")->required();
  sc_construct->add_flag("--explicit", cp_explicit, "use the tabulated d=3,4 pencil");
  sc_construct->add_option("--emit", cp_emit, "json|latex")
      ->check(CLI::IsMember({"json", "latex"}));
  sc_construct->add_option("--out", cp_out, "output path (default stdout)");

  // verify-identity
  auto* sc_ident = app.add_subcommand("verify-identity", "exact recipe identity check");
  int vi_d = 8;
  std::string vi_out;
  sc_ident->add_option("--d", vi_d, "verify for 1..d")->required();
  sc_ident->add_option("--out", vi_out, "report path (default stdout)");

  // verify-tv
  auto* sc_tv = app.add_subcommand("verify-tv", "pencil vs polynomial set equality");
  int tv_d = 1, tv_samples = 200;
  std::string tv_levels = "1,2,3", tv_report;
  double tv_band = 1e-6;
  bool tv_explicit = false;
  sc_tv->add_option("--d", tv_d, "TV screen degree")->required();
  sc_tv->add_option("--levels", tv_levels, "comma-separated levels");
  sc_tv->add_option("--samples", tv_samples, "samples per level");
  sc_tv->add_option("--band", tv_band, "boundary band");
  sc_tv->add_flag("--explicit", tv_explicit, "test the tabulated pencil (d=3,4)");
  sc_tv->add_option("--report", tv_report, "report path (default stdout)");

  // check-convexity
  auto* sc_cvx = app.add_subcommand("check-convexity", "randomized Gamma-convexity check");
  std::string cvx_gamma = "y2", cvx_preset, cvx_poly_path, cvx_out;
  int cvx_trials = 1000, cvx_d = 1;
  sc_cvx->add_option("--gamma", cvx_gamma, "x|y2|xy or a JSON file");
  sc_cvx->add_option("--preset", cvx_preset, "x4 | pd | neg-pd")
      ->check(CLI::IsMember({"x4", "pd", "neg-pd"}));
  sc_cvx->add_option("--poly", cvx_poly_path, "polynomial JSON (list of terms)");
  sc_cvx->add_option("--d", cvx_d, "degree for the pd presets");
  sc_cvx->add_option("--trials", cvx_trials, "trial count");
  sc_cvx->add_option("--out", cvx_out, "report path (default stdout)");

  // separate
  auto* sc_sep = app.add_subcommand("separate", "Effros-Winkler separation run");
  std::string sep_gamma = "y2", sep_points, sep_test, sep_out, sep_report;
  double sep_delta = 1e-4;
  int sep_budget = 100000;
  sc_sep->add_option("--gamma", sep_gamma, "x|y2|xy");
  sc_sep->add_option("--points", sep_points, "FreeSetSample JSON")->required();
  sc_sep->add_option("--test", sep_test, "outlier tuple JSON")->required();
  sc_sep->add_option("--delta", sep_delta, "required outlier negativity");
  sc_sep->add_option("--budget", sep_budget, "iteration budget");
  sc_sep->add_option("--out", sep_out, "certificate path");
  sc_sep->add_option("--report", sep_report, "report path (default stdout)");

  // bmi-boundary
  auto* sc_bmi = app.add_subcommand("bmi-boundary", "xy-pencil boundary limit");
  std::string bmi_p = "tv", bmi_target, bmi_out, bmi_report;
  int bmi_d = 1, bmi_steps = 20, bmi_budget = 100000;
  double bmi_delta = 1e-4;
  sc_bmi->add_option("--p", bmi_p, "defining polynomial family (tv)")
      ->check(CLI::IsMember({"tv"}));
  sc_bmi->add_option("--d", bmi_d, "TV degree");
  sc_bmi->add_option("--target", bmi_target, "boundary tuple JSON")->required();
  sc_bmi->add_option("--steps", bmi_steps, "sequence length");
  sc_bmi->add_option("--delta", bmi_delta, "separation delta");
  sc_bmi->add_option("--budget", bmi_budget, "iteration budget per step");
  sc_bmi->add_option("--out", bmi_out, "pencil path");
  sc_bmi->add_option("--report", bmi_report, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.seed = seed;
  for (int i = 0; i < argc; ++i) rep.command += std::string(i ? " " : "") + argv[i];

  try {
    if (sc_construct->parsed()) {
      const GammaPencil l = cp_explicit ? tv_pencil_explicit(cp_d) : tv_pencil(cp_d);
      if (cp_emit == "latex") {
        if (cp_out.empty()) {
          std::cout << emit_latex(l) << "\n";
        } else {
          std::ofstream os(cp_out);
          os << emit_latex(l) << "\n";
        }
      } else {
        write_or_print(to_json(l), cp_out);
      }
      return 0;
    }

    if (sc_ident->parsed()) {
      for (int d = 1; d <= vi_d; ++d)
        rep.add("tv-identity-d" + std::to_string(d), verify_tv_identity(d), 0.0);
      return finish(rep, t0, vi_out);
    }

    if (sc_tv->parsed()) {
      const GammaPencil l = tv_explicit ? tv_pencil_explicit(tv_d) : tv_pencil(tv_d);
      const MatrixPoly p = MatrixPoly::from_scalar(tv_defining_poly(tv_d));
      const EqualityReport er = check_pencil_poly_equality(l, p, parse_levels(tv_levels),
                                                           tv_samples, tv_band, seed);
      rep.add("tv-equality-d" + std::to_string(tv_d), er.disagreements == 0,
              static_cast<double>(er.disagreements),
              "agreements=" + std::to_string(er.agreements) +
                  " skipped=" + std::to_string(er.band_skipped));
      return finish(rep, t0, tv_report);
    }

    if (sc_cvx->parsed()) {
      MatrixPoly p = MatrixPoly::from_scalar(FreePoly::variable(1, 0));
      if (!cvx_poly_path.empty()) {
        p = matrixpoly_from_json(load_json(cvx_poly_path));
      } else if (cvx_preset == "x4") {
        const FreePoly x = FreePoly::variable(1, 0);
        p = MatrixPoly::from_scalar(x * x * x * x);
      } else if (cvx_preset == "pd") {
        p = MatrixPoly::from_scalar(tv_defining_poly(cvx_d));
      } else if (cvx_preset == "neg-pd") {
        p = MatrixPoly::from_scalar(tv_defining_poly(cvx_d).scaled(-1.0));
      } else {
        throw std::invalid_argument("check-convexity: need --preset or --poly");
      }
      GammaMap g = cvx_gamma == "x" || cvx_gamma == "y2" || cvx_gamma == "xy"
                       ? GammaMap::named(cvx_gamma, p.nvars())
                       : gammamap_from_json(load_json(cvx_gamma));
      const ConvexityReport cr = check_gamma_convex(p, g, cvx_trials, seed);
      rep.add("gamma-convexity", !cr.counterexample_found,
              cr.witness ? cr.witness->gap : 0.0,
              cr.counterexample_found ? "counterexample at trial " +
                                            std::to_string(cr.trials_run)
                                      : "no counterexample");
      return finish(rep, t0, cvx_out);
    }

    if (sc_sep->parsed()) {
      const FreeSetSample k = freesetsample_from_json(load_json(sep_points));
      if (k.points.empty()) throw std::invalid_argument("separate: empty generator set");
      const HermitianTuple y = tuple_from_json(load_json(sep_test));
      const GammaMap g = GammaMap::named(sep_gamma, y.width());
      const GammaSeparation s = separate_gamma(g, k, y, sep_delta, sep_budget);
      rep.add("separation", s.found, s.outlier_eig,
              "hull_margin=" + std::to_string(s.hull_margin));
      if (s.found && !sep_out.empty()) {
        Json cert = to_json(s);
        cert["seed"] = seed;
        write_or_print(cert, sep_out);
        rep.artifacts.push_back(sep_out);
      }
      return finish(rep, t0, sep_report);
    }

    if (sc_bmi->parsed()) {
      const MatrixPoly p = MatrixPoly::from_scalar(tv_defining_poly(bmi_d));
      const HermitianTuple target = tuple_from_json(load_json(bmi_target));
      std::vector<HermitianTuple> seq;
      for (int n = 1; n <= bmi_steps; ++n) seq.push_back(target.scaled(1.0 + 1.0 / n));
      const BoundaryLimit bl =
          boundary_pencil_limit(p, seq, target, bmi_delta, bmi_budget, seed);
      rep.add("bmi-boundary", bl.status == BoundaryLimitStatus::Converged, bl.boundary_eig,
              "steps=" + std::to_string(bl.steps_used) +
                  " cauchy_gap=" + std::to_string(bl.cauchy_gap));
      if (bl.status == BoundaryLimitStatus::Converged && !bmi_out.empty()) {
        write_or_print(to_json(bl.pencil), bmi_out);
        rep.artifacts.push_back(bmi_out);
      }
      return finish(rep, t0, bmi_report);
    }
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Runs single-threaded in well under five minutes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gck/bmi.hpp"
#include "gck/report.hpp"

using namespace gck;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string details;
  bool pass = false;
  try {
    pass = fn(details);
  } catch (const std::exception& e) {
    details = std::string("exception: ") + e.what();
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::printf("[%s] criterion %2d: %s (%.0f ms)%s%s\n", pass ? "PASS" : "FAIL", number,
              name.c_str(), ms, details.empty() ? "" : " -- ", details.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

HermitianTuple scalar_pair(double x, double y) {
  Matrix mx(1, 1), my(1, 1);
  mx(0, 0) = x;
  my(0, 0) = y;
  return HermitianTuple({mx, my});
}

HermitianTuple tv_point(int d, int level, RngStream& rng) {
  auto [x, y] = random_tv_interior(d, level, rng);
  return HermitianTuple({x, y});
}

Eigen::VectorXd gamma_vec(const GammaMap& g, const HermitianTuple& t) {
  Eigen::VectorXd out(g.r());
  const auto img = g.eval(t);
  for (int j = 0; j < g.r(); ++j) out(j) = img[j](0, 0).real();
  return out;
}

// 1. Exact recipe identity in rational arithmetic, d = 2..12, under 1 s.
bool c1_exact_identity(std::string& details) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int d = 2; d <= 12; ++d)
    if (!verify_tv_identity(d)) {
      details = "identity failed at d=" + std::to_string(d);
      return false;
    }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  details = "d=2..12 exact in " + std::to_string(static_cast<int>(ms)) + " ms";
  return ms < 1000.0;
}

// 2. TV pencil / polynomial set equality.
bool c2_set_equality(std::string& details) {
  int total_disagreements = 0;
  for (int d : {1, 2, 3, 4}) {
    const GammaPencil l = tv_pencil(d);
    const MatrixPoly pd = MatrixPoly::from_scalar(tv_defining_poly(d));
    const EqualityReport r = check_pencil_poly_equality(l, pd, {1, 2, 3}, 200, 1e-6, 100 + d);
    total_disagreements += r.disagreements;
  }
  for (int d : {3, 4}) {
    const GammaPencil l = tv_pencil_explicit(d);
    const MatrixPoly pd = MatrixPoly::from_scalar(tv_defining_poly(d));
    // 500 scalar grid points
    int checked = 0;
    for (int i = 0; i < 23 && total_disagreements == 0; ++i)
      for (int j = 0; j < 23; ++j) {
        const double x = -1.3 + 2.6 * i / 22.0, y = -1.3 + 2.6 * j / 22.0;
        const HermitianTuple pt = scalar_pair(x, y);
        const double pv = min_eig(pd.eval(pt));
        const double lv = min_eig_at(l, pt);
        if (std::abs(pv) < 1e-6 || std::abs(lv) < 1e-6) continue;
        ++checked;
        if ((pv > 0) != (lv > 0)) ++total_disagreements;
      }
    const EqualityReport r =
        check_pencil_poly_equality(l, pd, {1, 2, 3}, 67, 1e-6, 200 + d);  // ~200 matrix samples
    total_disagreements += r.disagreements;
    if (checked < 400) {
      details = "grid coverage too thin";
      return false;
    }
  }
  details = std::to_string(total_disagreements) + " disagreements";
  return total_disagreements == 0;
}

// 3. Telescoping identities and monicity of the recipe pencils.
bool c3_telescoping_monic(std::string& details) {
  for (int d = 2; d <= 12; ++d) {
    const TVRecipe r = tv_recipe(d);
    for (int k = 0; k + 2 <= d - 2; ++k)
      if (std::abs(r.alpha[k] * r.alpha[k] - 2 * r.alpha[k + 1] * r.alpha[k + 1] +
                   r.alpha[k + 2] * r.alpha[k + 2]) > 1e-12) {
        details = "telescoping failed at d=" + std::to_string(d);
        return false;
      }
    if (d >= 3 &&
        std::abs(r.alpha[d - 3] * r.alpha[d - 3] - 2 * r.alpha[d - 2] * r.alpha[d - 2]) > 1e-12) {
      details = "tail identity failed at d=" + std::to_string(d);
      return false;
    }
  }
  double min_a0 = 1e300;
  for (int d = 1; d <= 8; ++d) {
    const GammaPencil raw = tv_pencil_raw(d);
    min_a0 = std::min(min_a0, min_eig(raw.coeff(0)));
    if (min_eig(raw.coeff(0)) <= 0.0) {
      details = "constant term not PD at d=" + std::to_string(d);
      return false;
    }
    if (!tv_pencil(d).monic()) {
      details = "make_monic failed at d=" + std::to_string(d);
      return false;
    }
  }
  details = "min A_0 eigenvalue over d<=8: " + std::to_string(min_a0);
  return true;
}

// 4. Star-like quantitative bound p_d(tX) >= 1 - t^2.
bool c4_star_like(std::string& details) {
  double worst = 1e300;
  for (int d : {1, 2, 3}) {
    RngStream rng(300 + d);
    const MatrixPoly pd = MatrixPoly::from_scalar(tv_defining_poly(d));
    for (int s = 0; s < 100; ++s) {
      const HermitianTuple x = tv_point(d, 1 + (s % 3), rng);
      for (int k = 1; k <= 9; ++k) {
        const double t = 0.1 * k;
        const double margin = min_eig(pd.eval(x.scaled(t)));
        worst = std::min(worst, margin - (1.0 - t * t));
        if (margin < (1.0 - t * t) - 1e-9) {
          details = "bound violated at d=" + std::to_string(d);
          return false;
        }
      }
    }
  }
  details = "worst slack " + std::to_string(worst);
  return true;
}

// 5. Slice convexity and the reducing-subspace criterion.
bool c5_slice_convexity(std::string& details) {
  const std::vector<double> grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  RngStream rng(400);
  int violations = 0;
  for (int s = 0; s < 500; ++s) {
    RngStream trial = rng.split(s);
    const int d = 1 + (s % 3);
    const int level = trial.uniform_int(1, 3);
    const MatrixPoly pd = MatrixPoly::from_scalar(tv_defining_poly(d));
    const HermitianTuple p1 = tv_point(d, level, trial);
    // second interior point sharing Y
    Matrix x2 = random_hermitian(level, 1.0, trial);
    HermitianTuple cand({x2, p1.entry(1)});
    for (int k = 0; k < 80; ++k) {
      if (min_eig(pd.eval(cand)) > 0.0) break;
      x2 *= 0.8;
      cand = HermitianTuple({x2, p1.entry(1)});
    }
    if (min_eig(pd.eval(cand)) <= 0.0) continue;
    auto member = [&](const HermitianTuple& t) { return membership(pd, t); };
    const SliceConvexityReport r =
        check_slice_convexity(member, p1.entry(1), p1.entry(0), cand.entry(0), grid);
    if (!r.ok) ++violations;
  }
  if (violations != 0) {
    details = std::to_string(violations) + " convexity violations";
    return false;
  }
  // three-way y2 pair agreement
  const GammaMap y2 = GammaMap::y2();
  for (int t = 0; t < 1000; ++t) {
    RngStream trial = rng.split(10000 + t);
    const int n = trial.uniform_int(2, 4);
    const int m = trial.uniform_int(1, n);
    const HermitianTuple xt(
        {random_hermitian(n, 1.0, trial), random_hermitian(n, 1.0, trial)});
    Matrix v;
    if (t % 2 == 0) {
      HermEig e = herm_eig(xt.entry(1));
      v = Matrix::Zero(n, m);
      for (int c = 0; c < m; ++c) v.col(c) = e.vectors.col(c);
    } else {
      v = random_isometry(n, m, trial);
    }
    const Isometry iso(std::move(v));
    const Y2PairCheck a = is_y2_pair(xt.entry(0), xt.entry(1), iso, 1e-8);
    const PairCheck b = is_gamma_pair(y2, xt, iso, 1e-8);
    const bool reduces = a.reducing_residual <= 1e-8;
    if (a.ok != b.ok || a.ok != reduces) {
      details = "pair criteria disagree at trial " + std::to_string(t);
      return false;
    }
  }
  details = "0 violations, 1000 pair trials agree";
  return true;
}

// 6. Separation soundness and level-1 oracle agreement.
bool c6_separation(std::string& details) {
  const GammaMap y2 = GammaMap::y2();
  int oracle_checked = 0, oracle_agreed = 0;
  std::string failure;
  for (int l : {1, 2}) {
    int ok = 0;
    for (int inst = 0; inst < 30; ++inst) {
      RngStream rng(500 + 100 * l + inst);
      const int d = 1 + (inst % 2);
      std::vector<HermitianTuple> gens{HermitianTuple::zero(3, 1)};
      std::vector<Eigen::VectorXd> pts{Eigen::VectorXd::Zero(3)};
      std::vector<HermitianTuple> raw{HermitianTuple::zero(2, 1)};
      const MatrixPoly pd = MatrixPoly::from_scalar(tv_defining_poly(d));
      for (int i = 0; i < 50; ++i) {
        const int lvl = l == 1 ? 1 : 1 + (i % 2);
        const HermitianTuple p = tv_point(d, lvl, rng);
        raw.push_back(p);
        gens.push_back(HermitianTuple::symmetrized(y2.eval(p)));
        if (lvl == 1) pts.push_back(gamma_vec(y2, p));
      }
      // outlier: 1.2 x a boundary point at level l
      HermitianTuple ray({random_hermitian(l, 1.0, rng), random_hermitian(l, 1.0, rng)});
      const double tb = boundary_crossing(pd, ray);
      const HermitianTuple outlier = ray.scaled(1.2 * tb);
      const HermitianTuple w = HermitianTuple::symmetrized(y2.eval(outlier));

      const SeparationOutcome so = find_separating_pencil(gens, w, 1e-4, 100000);
      if (so.found && so.certificate.hull_margin >= -1e-8 &&
          so.certificate.outlier_eig <= -1e-4 && verify_certificate(so.certificate, gens, w)) {
        ++ok;
      }

      if (l == 1) {
        // oracle agreement on the outlier and on the generator centroid
        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(3);
        for (const auto& z : pts) centroid += z / static_cast<double>(pts.size());
        const Eigen::VectorXd wv = gamma_vec(y2, outlier);
        for (const Eigen::VectorXd& probe : {wv, centroid}) {
          const double dist = hull_distance(pts, probe);
          const Level1Oracle oracle = level1_hull_oracle(pts, probe);
          if (!oracle.inside && dist < 1e-3) continue;  // boundary stratum: skip
          if (oracle.inside) {
            // require clearance before gating an inside probe
            bool deep = true;
            for (int j = 0; j < 3 && deep; ++j)
              for (double sgn : {1.0, -1.0}) {
                Eigen::VectorXd shifted = probe;
                shifted(j) += sgn * 2e-3;
                if (!level1_hull_oracle(pts, shifted).inside) deep = false;
              }
            if (!deep) continue;
          }
          std::vector<Matrix> entries;
          for (int j = 0; j < 3; ++j) {
            Matrix mm(1, 1);
            mm(0, 0) = probe(j);
            entries.push_back(mm);
          }
          const HullMembershipResult hm =
              hull_membership(gens, HermitianTuple(std::move(entries)), 1e-7, 60000);
          ++oracle_checked;
          if (hm.inside == oracle.inside) ++oracle_agreed;
        }
      }
    }
    if (ok < 28) {
      failure += " l=" + std::to_string(l) + " only " + std::to_string(ok) + "/30;";
    }
  }
  details = "oracle agreement " + std::to_string(oracle_agreed) + "/" +
            std::to_string(oracle_checked) + failure;
  return failure.empty() && oracle_checked >= 30 && oracle_agreed == oracle_checked;
}

// 7. Positive combination of Thm-2.5 type for the y2 map.
bool c7_positive_combination(std::string& details) {
  const GammaMap y2 = GammaMap::y2();
  RngStream rng(600);
  std::vector<Eigen::VectorXd> pts;
  for (int t = 0; t < 300; ++t) {
    RngStream trial = rng.split(t);
    const HermitianTuple p = tv_point(1 + (t % 2), trial.uniform_int(1, 3), trial);
    const Matrix h = random_isometry(p.level(), 1, trial);
    const auto img = y2.eval(p);
    Eigen::VectorXd z(3);
    for (int j = 0; j < 3; ++j) z(j) = (h.adjoint() * img[j] * h)(0, 0).real();
    pts.push_back(z);
  }
  const PositiveCombination pc = find_positive_polynomial(y2, pts);
  if (pc.status != PositiveCombinationStatus::Found) {
    details = "no supporting functional found";
    return false;
  }
  for (const auto& z : pts)
    if (pc.lambda.dot(z) < -1e-10) {
      details = "lambda fails on an input point";
      return false;
    }
  const bool is_y2_coordinate =
      pc.lambda(2) > 0.0 && std::abs(pc.lambda(0)) <= 1e-12 && std::abs(pc.lambda(1)) <= 1e-12;
  // Eq.(2.4)-style chain on 1000 fresh (Y, h)
  for (int t = 0; t < 1000; ++t) {
    RngStream trial = rng.split(50000 + t);
    const int n = trial.uniform_int(1, 3);
    const HermitianTuple yy(
        {random_hermitian(n, 1.0, trial), random_hermitian(n, 1.0, trial)});
    const Matrix h = random_isometry(n, 1, trial);
    const auto img = y2.eval(yy);
    Eigen::VectorXd z(3);
    for (int j = 0; j < 3; ++j) z(j) = (h.adjoint() * img[j] * h)(0, 0).real();
    const double lam_y = pc.lambda.dot(z);
    const double hqh = (h.adjoint() * pc.q.eval(yy) * h)(0, 0).real();
    if (std::abs(lam_y - hqh) > 1e-10 * std::max(1.0, std::abs(hqh))) {
      details = "evaluation chain equality failed";
      return false;
    }
    if (is_y2_coordinate && lam_y < -1e-10) {
      details = "nonnegativity failed on fresh sample";
      return false;
    }
  }
  details = is_y2_coordinate ? "q = y^2 (coordinate certificate)" : "non-coordinate lambda";
  return true;
}

// 8. BMI coefficient bounds: violated bounds are witnessed, respected bounds pass.
bool c8_bmi_bounds(std::string& details) {
  const double eps = 0.45;
  RngStream rng(700);
  int witnessed = 0, attempted = 0;
  while (attempted < 500) {
    RngStream trial = rng.split(attempted);
    const int size = trial.uniform_int(1, 3);
    const int which = attempted % 4;
    Matrix a = Matrix::Zero(size, size), b = Matrix::Zero(size, size),
           c = Matrix::Zero(size, size);
    Matrix h = random_hermitian(size, 0.0, trial);
    if (op_norm(h) < 1e-9) continue;
    if (which == 0) a = h * ((2.0 / eps) / op_norm(h));
    if (which == 1) b = h * ((2.0 / eps) / op_norm(h));
    if (which == 2) c = h * ((1.5 / (eps * eps)) / op_norm(h));  // C + C* = 2 sym(C)
    if (which == 3) c = Cx(0.0, 1.5 / (eps * eps)) * h / op_norm(h);
    ++attempted;
    const CoefficientBoundCheck cb = check_coefficient_bound(XYPencil(a, b, c), eps);
    if (!cb.bounds_hold && cb.failing_point >= 0 && cb.failing_eig < 0.0) ++witnessed;
  }
  int passed = 0, found = 0;
  for (int t = 0; t < 40000 && found < 100; ++t) {
    RngStream trial = rng.split(100000 + t);
    const int size = trial.uniform_int(1, 2);
    Matrix a = 0.45 * random_hermitian(size, 0.0, trial);
    Matrix b = 0.45 * random_hermitian(size, 0.0, trial);
    Matrix c(size, size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j)
        c(i, j) = 0.45 * Cx(trial.gaussian(), trial.gaussian());
    const CoefficientBoundCheck cb = check_coefficient_bound(XYPencil(a, b, c), eps);
    if (!cb.psd_on_points) continue;
    ++found;
    if (cb.bounds_hold) ++passed;
  }
  details = "witnessed " + std::to_string(witnessed) + "/500, respected " +
            std::to_string(passed) + "/" + std::to_string(found);
  return witnessed == 500 && found == 100 && passed == 100;
}

// 9. Gamma-convexity falsification.
bool c9_convexity_falsification(std::string& details) {
  const FreePoly x = FreePoly::variable(1, 0);
  const MatrixPoly x4 = MatrixPoly::from_scalar(x * x * x * x);
  const ConvexityReport cx4 = check_gamma_convex(x4, GammaMap::trivial(1), 1000, 900);
  if (!cx4.counterexample_found) {
    details = "x^4 counterexample not found";
    return false;
  }
  for (int d : {1, 2, 3}) {
    const MatrixPoly neg = MatrixPoly::from_scalar(tv_defining_poly(d)).scaled(-1.0);
    const ConvexityReport r = check_gamma_convex(neg, GammaMap::y2(), 1000, 910 + d);
    if (r.counterexample_found) {
      details = "false counterexample for -p_" + std::to_string(d);
      return false;
    }
  }
  details = "x^4 witnessed at trial " + std::to_string(cx4.trials_run) +
            ", -p_d clean for d=1,2,3";
  return true;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion(1, "exact TV recipe identity (rational arithmetic, d=2..12)", c1_exact_identity);
  criterion(2, "TV pencil vs polynomial set equality (d=1..4, levels 1..3)", c2_set_equality);
  criterion(3, "telescoping identities and monic normalization (d<=12)", c3_telescoping_monic);
  criterion(4, "star-like bound p_d(tX) >= 1-t^2 (d=1..3)", c4_star_like);
  criterion(5, "slice convexity and y2-pair criterion agreement", c5_slice_convexity);
  criterion(6, "Effros-Winkler separation soundness (30 instances per level)", c6_separation);
  criterion(7, "positive combination in span(Gamma) on compression points",
            c7_positive_combination);
  criterion(8, "xy-pencil coefficient bounds (500 violated + 100 respected)", c8_bmi_bounds);
  criterion(9, "convexity falsification: x^4 caught, -p_d clean", c9_convexity_falsification);
  const double total_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool budget_ok = total_s < 300.0;
  std::printf("[%s] criterion 10: full property suite at desk scale, single thread (%.1f s)\n",
              budget_ok ? "PASS" : "FAIL", total_s);
  if (!budget_ok) ++g_failures;
  return g_failures;
}

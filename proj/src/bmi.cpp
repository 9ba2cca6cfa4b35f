#include "gck/bmi.hpp"

#include <cmath>

namespace gck {

XYPencil::XYPencil(Matrix a_, Matrix b_, Matrix c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  const Eigen::Index n = a.rows();
  if (b.rows() != n || c.rows() != n || a.cols() != n || b.cols() != n || c.cols() != n)
    throw std::invalid_argument("XYPencil: coefficient sizes differ");
  if (!is_hermitian(a) || !is_hermitian(b))
    throw std::invalid_argument("XYPencil: A and B must be Hermitian");
}

Matrix XYPencil::eval(const Matrix& x, const Matrix& y) const {
  const Eigen::Index n = x.rows();
  Matrix out = Matrix::Identity(size() * n, size() * n);
  out += kron(a, x) + kron(b, y) + kron(c, x * y) + kron(c.adjoint(), y * x);
  return out;
}

Matrix XYPencil::eval(const HermitianTuple& xy) const {
  if (xy.width() != 2) throw std::invalid_argument("XYPencil::eval: need a pair");
  return eval(xy.entry(0), xy.entry(1));
}

GammaPencil XYPencil::to_gamma_pencil() const {
  const GammaMap g = GammaMap::xy();
  const Matrix sym = hermitize(c);
  const Matrix anti = (c - c.adjoint()) / Cx(0.0, 2.0);
  return GammaPencil(g, {Matrix::Identity(size(), size()), a, b, sym, hermitize(anti)});
}

XYPencil XYPencil::from_gamma_pencil(const GammaPencil& l) {
  if (l.gmap().r() != 4 || l.gmap().g() != 2)
    throw std::invalid_argument("XYPencil::from_gamma_pencil: not an xy-pencil");
  if (!l.monic()) throw std::invalid_argument("XYPencil::from_gamma_pencil: pencil must be monic");
  const Matrix c = l.coeff(3) + Cx(0.0, 1.0) * l.coeff(4);
  return XYPencil(l.coeff(1), l.coeff(2), c);
}

std::vector<HermitianTuple> bmi_test_points(double eps) {
  if (eps <= 0.0) throw std::invalid_argument("bmi_test_points: eps must be positive");
  std::vector<HermitianTuple> pts;
  auto scalar = [&](double x, double y) {
    Matrix mx(1, 1), my(1, 1);
    mx(0, 0) = x;
    my(0, 0) = y;
    pts.push_back(HermitianTuple({mx, my}));
  };
  scalar(eps, 0.0);
  scalar(-eps, 0.0);
  scalar(0.0, eps);
  scalar(0.0, -eps);
  scalar(eps, -eps);
  scalar(-eps, eps);
  scalar(eps, eps);
  scalar(-eps, -eps);
  Matrix x(2, 2), y(2, 2);
  x << 0.0, eps, eps, 0.0;
  y << eps, 0.0, 0.0, -eps;
  pts.push_back(HermitianTuple({x, y}));
  pts.push_back(HermitianTuple({-x, -y}));
  return pts;
}

CoefficientBoundCheck check_coefficient_bound(const XYPencil& l, double eps) {
  const auto pts = bmi_test_points(eps);
  CoefficientBoundCheck out{};
  out.psd_on_points = true;
  out.failing_point = -1;
  out.failing_eig = 0.0;
  double worst = 0.0;
  int worst_idx = -1;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    const double m = min_eig(l.eval(pts[i]));
    if (m < worst) {
      worst = m;
      worst_idx = i;
    }
    if (m < -tols().strict_pd) out.psd_on_points = false;
  }
  out.norm_a = op_norm(l.a);
  out.norm_b = op_norm(l.b);
  out.norm_c_plus = op_norm(l.c + l.c.adjoint());
  out.norm_c_minus = op_norm((l.c - l.c.adjoint()) / Cx(0.0, 1.0));
  const double slack = 1e-9;
  out.bounds_hold = out.norm_a <= 1.0 / eps + slack && out.norm_b <= 1.0 / eps + slack &&
                    out.norm_c_plus <= 2.0 / (eps * eps) + slack &&
                    out.norm_c_minus <= 2.0 / (eps * eps) + slack;
  if (!out.bounds_hold && worst_idx >= 0 && worst < 0.0) {
    out.failing_point = worst_idx;
    out.failing_eig = worst;
  }
  return out;
}

InteriorPdCheck check_interior_pd(const XYPencil& l, const std::vector<HermitianTuple>& s_samples,
                                  const std::vector<HermitianTuple>& interior_samples) {
  InteriorPdCheck out{};
  out.precondition_ok = true;
  out.offending_sample = -1;
  for (int i = 0; i < static_cast<int>(s_samples.size()); ++i) {
    if (min_eig(l.eval(s_samples[i])) < -tols().strict_pd) {
      out.precondition_ok = false;
      out.offending_sample = i;
      return out;
    }
  }
  out.pd_on_interior = true;
  out.failing_interior = -1;
  out.min_interior_eig = 1e300;
  for (int i = 0; i < static_cast<int>(interior_samples.size()); ++i) {
    const double m = min_eig(l.eval(interior_samples[i]));
    if (m < out.min_interior_eig) out.min_interior_eig = m;
    if (m < tols().strict_pd) {
      out.pd_on_interior = false;
      out.failing_interior = i;
    }
  }
  return out;
}

double bmi_epsilon_for(const MatrixPoly& p, double margin) {
  const HermitianTuple origin = HermitianTuple::zero(2, 1);
  if (min_eig(p.eval(origin)) <= margin)
    throw std::invalid_argument("bmi_epsilon_for: p(0) must be positive definite");
  auto all_inside = [&](double eps) {
    for (const HermitianTuple& pt : bmi_test_points(eps))
      if (min_eig(p.eval(pt)) < margin) return false;
    return true;
  };
  if (all_inside(1.0)) return 1.0;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (all_inside(mid) ? lo : hi) = mid;
  }
  return lo > 0.0 ? lo : throw std::runtime_error("bmi_epsilon_for: no admissible eps found");
}

namespace {

// Generator sample for the separation steps: a boundary ring and interior
// grid at level 1, a few level-2 interior points, the bmi test points, and 0.
FreeSetSample boundary_limit_generators(const MatrixPoly& p, double eps, std::uint64_t seed) {
  RngStream rng(seed);
  std::vector<HermitianTuple> pts;
  pts.push_back(HermitianTuple::zero(2, 1));
  for (const HermitianTuple& t : bmi_test_points(eps)) pts.push_back(t);
  const int ring = 48;
  for (int k = 0; k < ring; ++k) {
    const double th = 2.0 * M_PI * k / ring;
    Matrix mx(1, 1), my(1, 1);
    mx(0, 0) = std::cos(th);
    my(0, 0) = std::sin(th);
    HermitianTuple dir({mx, my});
    try {
      const double tb = boundary_crossing(p, dir);
      pts.push_back(dir.scaled(tb));
      pts.push_back(dir.scaled(0.6 * tb));
    } catch (const std::invalid_argument&) {
    }
  }
  for (int k = 0; k < 8; ++k) {
    RngStream sub = rng.split(k);
    std::vector<Matrix> entries{random_hermitian(2, 0.8, sub), random_hermitian(2, 0.8, sub)};
    HermitianTuple cand(std::move(entries));
    try {
      const double tb = boundary_crossing(p, cand);
      pts.push_back(cand.scaled(0.8 * tb));
    } catch (const std::invalid_argument&) {
    }
  }
  return FreeSetSample(std::move(pts));
}

double pencil_distance(const XYPencil& u, const XYPencil& v) {
  return std::sqrt((u.a - v.a).squaredNorm() + (u.b - v.b).squaredNorm() +
                   (u.c - v.c).squaredNorm());
}

}  // namespace

BoundaryLimit boundary_pencil_limit(const MatrixPoly& p,
                                    const std::vector<HermitianTuple>& y_sequence,
                                    const HermitianTuple& y_boundary, double delta, int budget,
                                    std::uint64_t seed) {
  if (y_sequence.empty()) throw std::invalid_argument("boundary_pencil_limit: empty sequence");
  const double eps = bmi_epsilon_for(p);
  const GammaMap g = GammaMap::xy();
  const FreeSetSample k = boundary_limit_generators(p, eps, seed);

  BoundaryLimit out{BoundaryLimitStatus::NotCauchy,
                    XYPencil(Matrix::Zero(1, 1), Matrix::Zero(1, 1), Matrix::Zero(1, 1)),
                    {},
                    1e300,
                    0,
                    0.0};
  std::optional<XYPencil> prev;
  for (int n = 0; n < static_cast<int>(y_sequence.size()); ++n) {
    const Membership m = membership(p, y_sequence[n]);
    if (m.verdict != Region::Outside)
      throw std::invalid_argument("boundary_pencil_limit: sequence point not outside the set");
    GammaSeparation sep = separate_gamma(g, k, y_sequence[n], delta, budget, /*extremal=*/true);
    out.steps_used = n + 1;
    if (!sep.found) {
      out.status = BoundaryLimitStatus::SeparationFailed;
      return out;
    }
    XYPencil cur = XYPencil::from_gamma_pencil(sep.pencil);
    const CoefficientBoundCheck cb = check_coefficient_bound(cur, eps);
    out.coeff_norms.push_back(
        std::max(std::max(cb.norm_a, cb.norm_b), std::max(cb.norm_c_plus, cb.norm_c_minus)));
    if (!cb.bounds_hold) {
      out.status = BoundaryLimitStatus::BoundViolation;
      out.pencil = std::move(cur);
      return out;
    }
    if (prev) {
      out.cauchy_gap = pencil_distance(cur, *prev);
      if (out.cauchy_gap <= tols().cauchy_gap) {
        out.status = BoundaryLimitStatus::Converged;
        out.pencil = std::move(cur);
        out.boundary_eig = min_eig(out.pencil.eval(y_boundary));
        return out;
      }
    }
    prev = std::move(cur);
    out.pencil = *prev;
  }
  out.boundary_eig = min_eig(out.pencil.eval(y_boundary));
  return out;
}

}  // namespace gck

#include "gck/semialg.hpp"

#include <cmath>

namespace gck {

FreePoly tv_defining_poly(int d) {
  if (d < 1) throw std::invalid_argument("tv_defining_poly: d must be >= 1");
  const FreePoly x = FreePoly::variable(2, 0);
  const FreePoly y = FreePoly::variable(2, 1);
  FreePoly ypow = FreePoly::constant(2, 1.0);
  for (int k = 0; k < 2 * d; ++k) ypow = ypow * y;
  return FreePoly::constant(2, 1.0) - x * x - ypow;
}

Membership membership(const MatrixPoly& p, const HermitianTuple& x, double band) {
  if (band <= 0.0) throw std::invalid_argument("membership: band must be positive");
  const double margin = min_eig(p.eval(x));
  Region v = Region::BoundaryBand;
  if (margin > band) v = Region::StrictlyInside;
  if (margin < -band) v = Region::Outside;
  return Membership{v, margin, band};
}

Membership membership(const FreePoly& p, const HermitianTuple& x, double band) {
  return membership(MatrixPoly::from_scalar(p), x, band);
}

double boundary_crossing(const MatrixPoly& p, const HermitianTuple& x, double t_max) {
  auto margin_at = [&](double t) { return min_eig(p.eval(x.scaled(t))); };
  if (margin_at(0.0) <= 0.0)
    throw std::invalid_argument("boundary_crossing: p(0) must be positive definite");
  double lo = 0.0, hi = 1.0;
  while (margin_at(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > t_max) throw std::invalid_argument("boundary_crossing: no crossing before t_max");
  }
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    (margin_at(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

StarLikeReport check_star_like(const MatrixPoly& p, const std::vector<HermitianTuple>& samples,
                               const std::vector<double>& t_grid) {
  StarLikeReport rep{true, {}};
  for (int i = 0; i < static_cast<int>(samples.size()); ++i) {
    const Membership m = membership(p, samples[i]);
    if (m.verdict == Region::Outside)
      throw std::invalid_argument("check_star_like: sample lies outside the set");
    for (double t : t_grid) {
      if (!(t >= 0.0 && t < 1.0)) continue;
      const double margin = min_eig(p.eval(samples[i].scaled(t)));
      if (margin <= tols().strict_pd) {
        rep.ok = false;
        rep.violations.push_back({i, t, margin});
      }
    }
  }
  return rep;
}

SliceConvexityReport check_slice_convexity(
    const std::function<Membership(const HermitianTuple&)>& k_membership, const Matrix& y,
    const Matrix& x1, const Matrix& x2, const std::vector<double>& t_grid) {
  const Membership end1 = k_membership(HermitianTuple({x1, y}));
  const Membership end2 = k_membership(HermitianTuple({x2, y}));
  if (end1.verdict == Region::Outside || end2.verdict == Region::Outside)
    throw std::invalid_argument("check_slice_convexity: endpoints must lie inside");
  SliceConvexityReport rep{true, {}};
  for (double t : t_grid) {
    const Matrix xt = hermitize(t * x1 + (1.0 - t) * x2);
    const Membership m = k_membership(HermitianTuple({xt, y}));
    if (m.verdict == Region::Outside) {
      rep.ok = false;
      rep.violations.push_back({t, m.margin});
    }
  }
  return rep;
}

namespace {

// Gaussian tuple rescaled so samples straddle the boundary: find the ray's
// boundary crossing for the polynomial and scale by a factor around it.
HermitianTuple straddle_sample(const MatrixPoly& p, int g, int level, RngStream& rng) {
  std::vector<Matrix> entries;
  for (int j = 0; j < g; ++j) entries.push_back(random_hermitian(level, 1.0, rng));
  HermitianTuple x(std::move(entries));
  try {
    const double tb = boundary_crossing(p, x);
    const double u = 0.5 + rng.uniform();  // [0.5, 1.5): about half land inside
    return x.scaled(tb * u);
  } catch (const std::invalid_argument&) {
    return x;  // no crossing on this ray (e.g. an unbounded positivity set)
  }
}

}  // namespace

EqualityReport check_pencil_poly_equality(const GammaPencil& l, const MatrixPoly& p,
                                          const std::vector<int>& levels, int n_samples,
                                          double band, std::uint64_t seed) {
  if (l.gmap().g() != p.nvars())
    throw std::invalid_argument("check_pencil_poly_equality: variable mismatch");
  RngStream rng(seed);
  // Level 1 in two variables is covered by a deterministic lattice; higher
  // levels draw rescaled Gaussian tuples straddling the boundary.
  auto lattice_point = [&](int s, int total) {
    const int side = std::max(2, static_cast<int>(std::ceil(std::sqrt(double(total)))));
    const double lo = -1.25, hi = 1.25;
    const int i = s % side, j = (s / side) % side;
    Matrix mx(1, 1), my(1, 1);
    mx(0, 0) = lo + (hi - lo) * i / (side - 1);
    my(0, 0) = lo + (hi - lo) * j / (side - 1);
    return HermitianTuple({mx, my});
  };
  EqualityReport rep;
  for (int level : levels) {
    for (int s = 0; s < n_samples; ++s) {
      RngStream srng = rng.split(static_cast<std::uint64_t>(level) * 1000003u + s);
      HermitianTuple x = (level == 1 && p.nvars() == 2)
                             ? lattice_point(s, n_samples)
                             : straddle_sample(p, p.nvars(), level, srng);
      const double mp = min_eig(p.eval(x));
      const double ml = min_eig_at(l, x);
      if (std::abs(mp) < band || std::abs(ml) < band) {
        ++rep.band_skipped;
        continue;
      }
      if ((mp > 0.0) == (ml > 0.0)) {
        ++rep.agreements;
      } else {
        ++rep.disagreements;
        if (rep.mismatches.size() < 16) rep.mismatches.push_back(x);
      }
    }
  }
  return rep;
}

}  // namespace gck

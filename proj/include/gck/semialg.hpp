#pragma once

#include "gck/pencil.hpp"

namespace gck {

enum class Region { StrictlyInside, BoundaryBand, Outside };

struct Membership {
  Region verdict;
  double margin;  // min eigenvalue of the defining evaluation
  double band;
};

// p_d = 1 - x^2 - y^{2d}, the TV screen's defining polynomial.
FreePoly tv_defining_poly(int d);

Membership membership(const MatrixPoly& p, const HermitianTuple& x,
                      double band = tols().boundary_band);
Membership membership(const FreePoly& p, const HermitianTuple& x,
                      double band = tols().boundary_band);

// Smallest t >= 0 with min eig p(tX) = 0, via bisection; requires p(0) > 0
// and an eventually-negative ray (true for star-like defining polynomials).
double boundary_crossing(const MatrixPoly& p, const HermitianTuple& x, double t_max = 8.0);

struct StarLikeViolation {
  int sample;
  double t;
  double margin;
};

struct StarLikeReport {
  bool ok;  // no violation found
  std::vector<StarLikeViolation> violations;
};

// For samples with p(X) PSD, checks p(tX) > 0 on the interior grid points.
StarLikeReport check_star_like(const MatrixPoly& p, const std::vector<HermitianTuple>& samples,
                               const std::vector<double>& t_grid);

struct SliceConvexityViolation {
  double t;
  double margin;
};

struct SliceConvexityReport {
  bool ok;
  std::vector<SliceConvexityViolation> violations;
};

// Convexity of the x-slice through Y: memberships of (t X1 + (1-t) X2, Y).
SliceConvexityReport check_slice_convexity(
    const std::function<Membership(const HermitianTuple&)>& k_membership, const Matrix& y,
    const Matrix& x1, const Matrix& x2, const std::vector<double>& t_grid);

struct EqualityReport {
  int agreements = 0;
  int disagreements = 0;
  int band_skipped = 0;
  std::vector<HermitianTuple> mismatches;
};

// Sampled comparison of the positivity sets of a pencil and a polynomial.
// Samples whose either margin falls inside the band are skipped, not
// adjudicated.
EqualityReport check_pencil_poly_equality(const GammaPencil& l, const MatrixPoly& p,
                                          const std::vector<int>& levels, int n_samples,
                                          double band, std::uint64_t seed);

}  // namespace gck

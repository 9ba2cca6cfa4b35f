#pragma once

#include "gck/semialg.hpp"
#include "gck/separation.hpp"

namespace gck {

// Monic xy-pencil I + Ax + By + Cxy + C*yx; A, B Hermitian, C arbitrary.
struct XYPencil {
  Matrix a, b, c;

  XYPencil(Matrix a_, Matrix b_, Matrix c_);
  int size() const { return static_cast<int>(a.rows()); }

  Matrix eval(const Matrix& x, const Matrix& y) const;
  Matrix eval(const HermitianTuple& xy) const;

  // Coefficients (A, B, (C+C*)/2, (C-C*)/(2i)) over {x, y, xy+yx, i(xy-yx)}.
  GammaPencil to_gamma_pencil() const;
  static XYPencil from_gamma_pencil(const GammaPencil& l);
};

// The scalar points (+-e,0), (0,+-e), +-(e,-e), +-(e,e) and the 2x2 pair
// +-(X, Y) with X = [[0,e],[e,0]], Y = diag(e,-e). Note: the published proof
// display carries Y = eI, but only diag(e,-e) anticommutes with X and makes
// the C - C* bound observable; the corrected pair is used here.
std::vector<HermitianTuple> bmi_test_points(double eps);

struct CoefficientBoundCheck {
  bool psd_on_points;       // pencil is PSD at every test point
  bool bounds_hold;         // the four norm bounds
  double norm_a, norm_b, norm_c_plus, norm_c_minus;
  int failing_point;        // when a bound fails: a test point with L not PSD
  double failing_eig;
};

// ||A||, ||B|| <= 1/eps and ||C +- C*|| <= 2/eps^2 whenever the pencil is PSD
// at the test points; on bound failure exhibits a witnessing test point.
CoefficientBoundCheck check_coefficient_bound(const XYPencil& l, double eps);

struct InteriorPdCheck {
  bool precondition_ok;     // PSD on all S samples
  int offending_sample;     // S sample violating PSD when precondition fails
  bool pd_on_interior;
  int failing_interior;     // interior sample with min eig below the threshold
  double min_interior_eig;
};

InteriorPdCheck check_interior_pd(const XYPencil& l, const std::vector<HermitianTuple>& s_samples,
                                  const std::vector<HermitianTuple>& interior_samples);

// Largest eps <= 1 whose bmi_test_points all sit inside the set of p with
// the required margin (bisection).
double bmi_epsilon_for(const MatrixPoly& p, double margin = tols().bmi_point_margin);

enum class BoundaryLimitStatus { Converged, BoundViolation, NotCauchy, SeparationFailed };

struct BoundaryLimit {
  BoundaryLimitStatus status;
  XYPencil pencil;                  // last iterate when converged
  std::vector<double> coeff_norms;  // max coefficient norm per step
  double cauchy_gap;                // last coefficient-wise step difference
  int steps_used;
  double boundary_eig;              // min eig of the limit at the boundary point
};

// Prop-3.13 flow at desk scale: separate each Y_n in the sequence via
// separate_gamma with the xy map, check the coefficient bounds along the way,
// and return the last iterate once consecutive pencils are Cauchy-close.
BoundaryLimit boundary_pencil_limit(const MatrixPoly& p,
                                    const std::vector<HermitianTuple>& y_sequence,
                                    const HermitianTuple& y_boundary, double delta, int budget,
                                    std::uint64_t seed);

}  // namespace gck

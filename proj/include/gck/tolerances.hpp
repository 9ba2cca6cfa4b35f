#pragma once

namespace gck {

// Single source of truth for every numerical threshold used across the
// library.  Margins in reports are meaningless without these, so the CLI
// embeds the active record in every run report.
struct Tolerances {
  // Constructive input validation.
  double hermitian_input = 1e-12;  // relative ||M - M*||_F at construction
  double isometry = 1e-10;         // ||V*V - I||_F

  // Dense linear algebra.
  double eig_residual = 1e-10;  // reconstruction error of herm_eig
  double pd_pivot = 1e-10;      // min eigenvalue for a usable PD pivot / A_0

  // Evaluation identities.
  double eval_sym = 1e-10;    // hermiticity of symmetric-poly evaluations
  double eval_exact = 1e-12;  // adjoint/direct-sum identities

  // Gamma machinery.
  double gamma_pair = 1e-8;        // accepted Gamma-pair residual
  double convexity_gap = 1e-8;     // eigenvalue below -gap => counterexample
  double concomitant_resid = 1e-8; // equality residual => counterexample

  // Free semialgebraic sets.
  double boundary_band = 1e-6;  // |margin| below this is "boundary"
  double strict_pd = 1e-10;     // strictly-positive threshold

  // Feasibility / separation.
  double psd_witness = 1e-8;    // witness blocks must have min eig >= -this
  double eq_residual = 1e-6;    // witness equality residual
  double hull_margin = 1e-8;    // certificate PSD slack on generators

  // BMI limits.
  double cauchy_gap = 1e-4;     // coefficient-wise Cauchy criterion
  double bmi_point_margin = 1e-6;  // test-point membership margin for eps

  // Exact-identity rational checks have no tolerance by construction.
};

// Library-wide defaults; treat as immutable.
const Tolerances& tols();

}  // namespace gck

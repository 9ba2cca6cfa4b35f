#pragma once

#include "gck/gamma.hpp"

namespace gck {

// Dense univariate real polynomial used for the TV recipe matrix entries.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly monomial(double a, int deg);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  double coeff(int k) const;
  double eval(double y) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(double a) const;
  // Drops coefficients whose magnitude is provably cancellation dust.
  UniPoly pruned(double rel_tol = 1e-9) const;

 private:
  void trim();
  std::vector<double> c_;
};

// An (affine) linear pencil A_0 + sum_j A_j z_j in r commuting-slot
// variables, evaluated on Hermitian r-tuples by A_0 (x) I + sum A_j (x) Z_j.
struct LinearPencil {
  int nvars;
  std::vector<Matrix> coeffs;  // size nvars+1, Hermitian, coeffs[0] = A_0

  LinearPencil(int r, std::vector<Matrix> cs);
  static LinearPencil monic(int r, int size);  // identity constant term, zero slopes
  int size() const { return static_cast<int>(coeffs[0].rows()); }
  bool is_monic(double tol = tols().hermitian_input) const;
  Matrix eval(const std::vector<Matrix>& z) const;
  Matrix eval(const HermitianTuple& z) const;
};

// L = A_0 + sum_j A_j gamma_j(x): a Gamma-pencil of size d.
class GammaPencil {
 public:
  GammaPencil(GammaMap gmap, std::vector<Matrix> coeffs);

  const GammaMap& gmap() const { return gmap_; }
  int size() const { return static_cast<int>(coeffs_[0].rows()); }
  const std::vector<Matrix>& coeffs() const { return coeffs_; }
  const Matrix& coeff(int j) const { return coeffs_.at(j); }  // j = 0..r
  bool monic(double tol = tols().hermitian_input) const;

  // L(X) = A_0 (x) I_n + sum_j A_j (x) gamma_j(X).
  Matrix eval(const HermitianTuple& x) const;
  MatrixPoly to_matrix_poly() const;
  LinearPencil linear_part() const;  // the same coefficients as a pencil in r slots

 private:
  GammaMap gmap_;
  std::vector<Matrix> coeffs_;
};

Matrix eval_pencil(const GammaPencil& l, const HermitianTuple& x);
double min_eig_at(const GammaPencil& l, const HermitianTuple& x);

// Congruence by A_0^{-1/2}: same positivity set, monic constant term.
GammaPencil make_monic(const GammaPencil& l);

// L' = M o Phi_Gamma for a linear pencil M in r = Gamma.r() slots.
GammaPencil compose_with_gamma(const LinearPencil& m, const GammaMap& g);

// t I + (1-t) L for monic L: pushes the positivity set strictly inside.
GammaPencil strictify(const GammaPencil& l, double t);

// The Prop-4.2-style construction data for the TV screen pencil.
struct TVRecipe {
  int d;
  std::vector<double> alpha;  // alpha_0 .. alpha_{d-2}
  std::vector<double> c;      // c_1 .. c_{d-2}
  UniPoly q;                  // sqrt(d-1) (y^2 - 1)
  std::vector<std::vector<UniPoly>> w;  // d x (d-1)
  std::vector<std::vector<UniPoly>> m;  // d x d, WW* + diag(0,..,0, 1-y^{2d})
};

TVRecipe tv_recipe(int d);

// Exact rational check of q^2 sum_j alpha_j^2 y^{2j} = (d-1) - d y^2 + y^{2d}.
bool verify_tv_identity(int d);

// Size d+1 y^2-pencil whose positivity set is the TV screen of degree d.
// tv_pencil_raw carries the recipe's PD (non-identity) constant term;
// tv_pencil is its monic congruence.
GammaPencil tv_pencil_raw(int d);
GammaPencil tv_pencil(int d);

// The verbatim small-degree pencils (d = 3, 4); the raw variant keeps the
// original constant term, the plain one is monic.
GammaPencil tv_pencil_explicit_raw(int d);
GammaPencil tv_pencil_explicit(int d);

// [[1, y], [y, y^2]]: positive semidefinite everywhere, never definite.
GammaPencil degenerate_pencil();

}  // namespace gck

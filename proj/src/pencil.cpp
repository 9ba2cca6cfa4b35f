#include "gck/pencil.hpp"

#include <cmath>

#include "gck/rational.hpp"

namespace gck {

// -- UniPoly -------------------------------------------------------------

UniPoly UniPoly::monomial(double a, int deg) {
  std::vector<double> c(deg + 1, 0.0);
  c[deg] = a;
  return UniPoly(std::move(c));
}

double UniPoly::coeff(int k) const {
  return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0.0;
}

double UniPoly::eval(double y) const {
  double acc = 0.0;
  for (int k = degree(); k >= 0; --k) acc = acc * y + c_[k];
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<double> c(std::max(c_.size(), o.c_.size()), 0.0);
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UniPoly();
  std::vector<double> c(c_.size() + o.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(double a) const {
  std::vector<double> c = c_;
  for (double& v : c) v *= a;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::pruned(double abs_tol) const {
  std::vector<double> c = c_;
  for (double& v : c)
    if (std::abs(v) <= abs_tol) v = 0.0;
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

// -- LinearPencil ----------------------------------------------------------

LinearPencil::LinearPencil(int r, std::vector<Matrix> cs) : nvars(r), coeffs(std::move(cs)) {
  if (static_cast<int>(coeffs.size()) != r + 1)
    throw std::invalid_argument("LinearPencil: need r+1 coefficients");
  const Eigen::Index d = coeffs[0].rows();
  for (const Matrix& a : coeffs) {
    if (a.rows() != d || a.cols() != d)
      throw std::invalid_argument("LinearPencil: coefficient size mismatch");
    if (!is_hermitian(a)) throw std::invalid_argument("LinearPencil: coefficients must be Hermitian");
  }
}

LinearPencil LinearPencil::monic(int r, int size) {
  std::vector<Matrix> cs(r + 1, Matrix::Zero(size, size));
  cs[0] = Matrix::Identity(size, size);
  return LinearPencil(r, std::move(cs));
}

bool LinearPencil::is_monic(double tol) const {
  return (coeffs[0] - Matrix::Identity(size(), size())).norm() <= tol;
}

Matrix LinearPencil::eval(const std::vector<Matrix>& z) const {
  if (static_cast<int>(z.size()) != nvars)
    throw std::invalid_argument("LinearPencil::eval: arity mismatch");
  const Eigen::Index n = z.empty() ? 1 : z[0].rows();
  Matrix out = kron(coeffs[0], Matrix::Identity(n, n));
  for (int j = 0; j < nvars; ++j) out += kron(coeffs[j + 1], z[j]);
  return out;
}

Matrix LinearPencil::eval(const HermitianTuple& z) const { return eval(z.entries()); }

// -- GammaPencil -----------------------------------------------------------

GammaPencil::GammaPencil(GammaMap gmap, std::vector<Matrix> coeffs)
    : gmap_(std::move(gmap)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != gmap_.r() + 1)
    throw std::invalid_argument("GammaPencil: need r+1 coefficients");
  const Eigen::Index d = coeffs_[0].rows();
  for (const Matrix& a : coeffs_) {
    if (a.rows() != d || a.cols() != d)
      throw std::invalid_argument("GammaPencil: coefficient size mismatch");
    if (!is_hermitian(a)) throw std::invalid_argument("GammaPencil: coefficients must be Hermitian");
  }
}

bool GammaPencil::monic(double tol) const {
  return (coeffs_[0] - Matrix::Identity(size(), size())).norm() <= tol;
}

Matrix GammaPencil::eval(const HermitianTuple& x) const {
  const std::vector<Matrix> gx = gmap_.eval(x);
  const Eigen::Index n = x.level();
  Matrix out = kron(coeffs_[0], Matrix::Identity(n, n));
  for (int j = 0; j < gmap_.r(); ++j) out += kron(coeffs_[j + 1], gx[j]);
  return out;
}

MatrixPoly GammaPencil::to_matrix_poly() const {
  MatrixPoly out(gmap_.g(), size());
  out.set_coeff(Word::unit(), coeffs_[0]);
  for (int j = 0; j < gmap_.r(); ++j)
    for (const auto& [w, c] : gmap_.coord(j).terms())
      out.set_coeff(w, out.coeff(w) + c * coeffs_[j + 1]);
  return out;
}

LinearPencil GammaPencil::linear_part() const { return LinearPencil(gmap_.r(), coeffs_); }

Matrix eval_pencil(const GammaPencil& l, const HermitianTuple& x) { return l.eval(x); }

double min_eig_at(const GammaPencil& l, const HermitianTuple& x) {
  return min_eig(l.eval(x));
}

GammaPencil make_monic(const GammaPencil& l) {
  if (l.monic()) return l;
  const Matrix s = inv_sqrt(l.coeff(0));  // throws unless A_0 is PD
  std::vector<Matrix> cs;
  cs.push_back(Matrix::Identity(l.size(), l.size()));
  for (int j = 1; j <= l.gmap().r(); ++j) cs.push_back(hermitize(s * l.coeff(j) * s));
  return GammaPencil(l.gmap(), std::move(cs));
}

GammaPencil compose_with_gamma(const LinearPencil& m, const GammaMap& g) {
  if (m.nvars != g.r())
    throw std::invalid_argument("compose_with_gamma: variable count mismatch");
  return GammaPencil(g, m.coeffs);
}

GammaPencil strictify(const GammaPencil& l, double t) {
  if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("strictify: t must lie in (0,1)");
  if (!l.monic()) throw std::invalid_argument("strictify: pencil must be monic");
  std::vector<Matrix> cs;
  cs.push_back(Matrix::Identity(l.size(), l.size()));
  for (int j = 1; j <= l.gmap().r(); ++j) cs.push_back((1.0 - t) * l.coeff(j));
  return GammaPencil(l.gmap(), std::move(cs));
}

// -- TV screen construction -------------------------------------------------

TVRecipe tv_recipe(int d) {
  if (d < 2) throw std::invalid_argument("tv_recipe: d must be >= 2");
  TVRecipe r;
  r.d = d;
  for (int k = 0; k <= d - 2; ++k)
    r.alpha.push_back(std::sqrt(static_cast<double>(d - 1 - k) / (d - 1)));
  for (int k = 1; k <= d - 2; ++k) r.c.push_back(r.alpha[k] / r.alpha[k - 1]);
  r.q = UniPoly({-std::sqrt(d - 1.0), 0.0, std::sqrt(d - 1.0)});

  r.w.assign(d, std::vector<UniPoly>(d - 1));
  for (int i = 0; i < d - 1; ++i) r.w[i][i] = UniPoly({1.0});
  for (int i = 1; i < d - 1; ++i) r.w[i][i - 1] = UniPoly({0.0, -r.c[i - 1]});
  for (int k = 0; k <= d - 2; ++k)
    r.w[d - 1][k] = UniPoly::monomial(r.alpha[k], k) * r.q;

  // M = W W^T + diag(0, ..., 0, 1 - y^{2d}); entries are real polynomials.
  r.m.assign(d, std::vector<UniPoly>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      UniPoly acc;
      for (int k = 0; k < d - 1; ++k) acc = acc + r.w[i][k] * r.w[j][k];
      r.m[i][j] = acc;
    }
  UniPoly corner = UniPoly({1.0}) + UniPoly::monomial(-1.0, 2 * d);
  r.m[d - 1][d - 1] = r.m[d - 1][d - 1] + corner;
  // The telescoping identity (checked exactly in verify_tv_identity) makes
  // every coefficient above degree 2 cancellation dust; drop it against the
  // matrix-wide scale.
  double gmax = 0.0;
  for (const auto& row : r.m)
    for (const UniPoly& e : row)
      for (int k = 0; k <= e.degree(); ++k) gmax = std::max(gmax, std::abs(e.coeff(k)));
  for (auto& row : r.m)
    for (UniPoly& e : row) e = e.pruned(1e-9 * gmax);
  return r;
}

bool verify_tv_identity(int d) {
  if (d < 1) throw std::invalid_argument("verify_tv_identity: d must be >= 1");
  if (d == 1) return true;  // empty sum convention: q^2 * 0th identity is vacuous at size 2
  // q^2 = (d-1)(y^2-1)^2 and alpha_j^2 = (d-1-j)/(d-1), all exactly rational.
  const RationalPoly y2m1(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});
  const RationalPoly q2 = y2m1 * y2m1 * RationalPoly::monomial(Rational(d - 1), 0);
  RationalPoly sum;
  for (int j = 0; j <= d - 2; ++j)
    sum = sum + RationalPoly::monomial(Rational(d - 1 - j, d - 1), 2 * j);
  std::vector<Rational> rhs_c(2 * d + 1);
  rhs_c[0] = Rational(d - 1);
  rhs_c[2] = Rational(-d);
  rhs_c[2 * d] = Rational(1);
  return q2 * sum == RationalPoly(std::move(rhs_c));
}

namespace {

// Split the polynomial-entry matrix into (const, y, y^2) coefficient parts;
// entries of higher degree are rejected.
void split_y2_entry(const UniPoly& e, int i, int j, Matrix& a0, Matrix& ay, Matrix& ay2) {
  if (e.degree() > 2) throw std::runtime_error("tv_pencil: entry degree exceeds 2");
  a0(i, j) += e.coeff(0);
  ay(i, j) += e.coeff(1);
  ay2(i, j) += e.coeff(2);
}

}  // namespace

GammaPencil tv_pencil_raw(int d) {
  if (d < 1) throw std::invalid_argument("tv_pencil: d must be >= 1");
  const GammaMap g = GammaMap::y2();
  if (d == 1) {
    // [[1, x], [x, 1 - y^2]]: Schur complement 1 - x^2 - y^2.
    Matrix a0 = Matrix::Identity(2, 2);
    Matrix ax = Matrix::Zero(2, 2);
    ax(0, 1) = ax(1, 0) = 1.0;
    Matrix ay = Matrix::Zero(2, 2);
    Matrix ay2 = Matrix::Zero(2, 2);
    ay2(1, 1) = -1.0;
    return GammaPencil(g, {a0, ax, ay, ay2});
  }
  const TVRecipe r = tv_recipe(d);
  const int s = d + 1;
  Matrix a0 = Matrix::Zero(s, s), ax = Matrix::Zero(s, s), ay = Matrix::Zero(s, s),
         ay2 = Matrix::Zero(s, s);
  a0(0, 0) = 1.0;
  ax(0, d) = ax(d, 0) = 1.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) split_y2_entry(r.m[i][j], i + 1, j + 1, a0, ay, ay2);
  return GammaPencil(g, {hermitize(a0), hermitize(ax), hermitize(ay), hermitize(ay2)});
}

GammaPencil tv_pencil(int d) { return make_monic(tv_pencil_raw(d)); }

GammaPencil tv_pencil_explicit_raw(int d) {
  const GammaMap g = GammaMap::y2();
  if (d == 3) {
    Matrix a0 = Matrix::Identity(4, 4);
    Matrix ax = Matrix::Zero(4, 4);
    ax(0, 3) = ax(3, 0) = 1.0;
    Matrix ay = Matrix::Zero(4, 4);
    ay(1, 2) = ay(2, 1) = 1.0;
    ay(2, 3) = ay(3, 2) = 0.5;
    Matrix ay2 = Matrix::Zero(4, 4);
    ay2(1, 3) = ay2(3, 1) = 1.0;
    ay2(2, 2) = 1.0;
    ay2(3, 3) = 0.25;
    return GammaPencil(g, {a0, ax, ay, ay2});
  }
  if (d == 4) {
    Matrix a0 = Matrix::Identity(5, 5);
    a0(3, 4) = a0(4, 3) = -5.0 / 8.0;
    a0(4, 4) = 89.0 / 64.0;
    Matrix ax = Matrix::Zero(5, 5);
    ax(0, 4) = ax(4, 0) = 1.0;
    Matrix ay = Matrix::Zero(5, 5);
    ay(1, 2) = ay(2, 1) = 1.0;
    ay(2, 3) = ay(3, 2) = 1.0;
    Matrix ay2 = Matrix::Zero(5, 5);
    ay2(1, 4) = ay2(4, 1) = 1.0;
    ay2(2, 2) = 1.0;
    ay2(3, 3) = 1.0;
    ay2(3, 4) = ay2(4, 3) = -0.5;
    ay2(4, 4) = 5.0 / 8.0;
    return GammaPencil(g, {a0, ax, ay, ay2});
  }
  throw std::invalid_argument("tv_pencil_explicit: only d = 3 and d = 4 are tabulated");
}

GammaPencil tv_pencil_explicit(int d) { return make_monic(tv_pencil_explicit_raw(d)); }

GammaPencil degenerate_pencil() {
  const GammaMap g = GammaMap::y2();
  Matrix a0 = Matrix::Zero(2, 2);
  a0(0, 0) = 1.0;
  Matrix ax = Matrix::Zero(2, 2);
  Matrix ay = Matrix::Zero(2, 2);
  ay(0, 1) = ay(1, 0) = 1.0;
  Matrix ay2 = Matrix::Zero(2, 2);
  ay2(1, 1) = 1.0;
  return GammaPencil(g, {a0, ax, ay, ay2});
}

}  // namespace gck

#include "gck/numerics.hpp"

#include <cmath>

namespace gck {

const Tolerances& tols() {
  static const Tolerances t{};
  return t;
}

double fro_norm(const Matrix& a) { return a.norm(); }

bool is_hermitian(const Matrix& a, double rel_tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).norm() <= rel_tol * std::max(1.0, a.norm());
}

Matrix hermitize(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

HermEig herm_eig(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) throw std::invalid_argument("herm_eig: square matrix required");
  if (!is_hermitian(a, tol)) throw std::invalid_argument("herm_eig: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(a));
  if (es.info() != Eigen::Success) throw std::runtime_error("herm_eig: eigensolver failed");
  return HermEig{es.eigenvalues(), es.eigenvectors()};
}

double min_eig(const Matrix& a) {
  if (!is_hermitian(a, 1e-8)) throw std::invalid_argument("min_eig: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(a));
  if (es.info() != Eigen::Success) throw std::runtime_error("min_eig: eigensolver failed");
  return es.eigenvalues()(0);
}

double op_norm(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(a));
  if (es.info() != Eigen::Success) throw std::runtime_error("op_norm: eigensolver failed");
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

Matrix psd_project(const Matrix& a) {
  HermEig e = herm_eig(a, 1e-8);
  RealVector clipped = e.values.cwiseMax(0.0);
  return e.vectors * clipped.asDiagonal() * e.vectors.adjoint();
}

Matrix inv_sqrt(const Matrix& a, double min_eig_floor) {
  HermEig e = herm_eig(a, 1e-8);
  if (e.values(0) <= min_eig_floor)
    throw std::invalid_argument("inv_sqrt: matrix is not positive definite");
  RealVector s = e.values.cwiseSqrt().cwiseInverse();
  return e.vectors * s.asDiagonal() * e.vectors.adjoint();
}

Matrix schur_complement(const Matrix& m, Eigen::Index pivot) {
  if (pivot <= 0 || pivot >= m.rows() || m.rows() != m.cols())
    throw std::invalid_argument("schur_complement: bad pivot size");
  const Matrix a = m.topLeftCorner(pivot, pivot);
  if (min_eig(a) <= tols().pd_pivot)
    throw std::invalid_argument("schur_complement: pivot block is not positive definite");
  const Matrix b = m.topRightCorner(pivot, m.cols() - pivot);
  const Matrix c = m.bottomLeftCorner(m.rows() - pivot, pivot);
  const Matrix d = m.bottomRightCorner(m.rows() - pivot, m.cols() - pivot);
  return d - c * a.llt().solve(b);
}

// -- RNG ---------------------------------------------------------------

namespace {
std::uint64_t splitmix_next(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a ^ (0x9E3779B97F4A7C15ULL + (b << 6) + (b >> 2));
  splitmix_next(s);
  return splitmix_next(s);
}
}  // namespace

RngStream::RngStream(std::uint64_t seed) : state_(seed), seq_(splitmix_next(seed)) {}

RngStream RngStream::split(std::uint64_t key) const {
  return RngStream(mix(seq_, key));
}

std::uint64_t RngStream::next_u64() { return splitmix_next(state_); }

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::gaussian() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_gauss_;
  }
  double u1 = 0.0;
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  cached_gauss_ = r * std::sin(theta);
  has_cached_ = true;
  return r * std::cos(theta);
}

int RngStream::uniform_int(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next_u64() % span);
}

Matrix random_hermitian(int n, double norm_bound, RngStream& rng) {
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = Cx(rng.gaussian(), rng.gaussian());
  Matrix h = hermitize(g) / std::sqrt(2.0 * n);
  if (norm_bound > 0.0) {
    const double nrm = op_norm(h);
    if (nrm > norm_bound) h *= norm_bound / nrm;
  }
  return h;
}

Matrix random_isometry(int rows, int cols, RngStream& rng) {
  if (cols > rows) throw std::invalid_argument("random_isometry: cols > rows");
  Matrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = Cx(rng.gaussian(), rng.gaussian());
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
  Matrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  // Fix column phases so the distribution is Haar.
  for (int j = 0; j < cols; ++j) {
    const Cx d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

std::pair<Matrix, Matrix> random_tv_interior(int d, int level, RngStream& rng,
                                             int max_tries) {
  for (int t = 0; t < max_tries; ++t) {
    Matrix x = random_hermitian(level, 0.95, rng);
    Matrix y = random_hermitian(level, 0.95, rng);
    Matrix ypow = Matrix::Identity(level, level);
    for (int k = 0; k < 2 * d; ++k) ypow = ypow * y;
    Matrix p = Matrix::Identity(level, level) - x * x - ypow;
    if (min_eig(p) > 0.0) return {x, y};
  }
  throw TvInteriorError("random_tv_interior: rejection budget exhausted");
}

}  // namespace gck

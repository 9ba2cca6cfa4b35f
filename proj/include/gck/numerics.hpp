#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "gck/tolerances.hpp"

namespace gck {

using Cx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

double fro_norm(const Matrix& a);
bool is_hermitian(const Matrix& a, double rel_tol = tols().hermitian_input);
Matrix hermitize(const Matrix& a);  // (a + a*)/2

// Kronecker product with the (coefficient (x) evaluation) convention used
// throughout: kron(A, B)[(i-1)q+k, (j-1)s+l] = A(i,j) B(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

struct HermEig {
  RealVector values;  // ascending
  Matrix vectors;     // unitary, columns are eigenvectors
};

// Eigendecomposition of a Hermitian matrix; rejects inputs whose
// anti-Hermitian part exceeds tol relative to max(1, ||a||_F).
HermEig herm_eig(const Matrix& a, double tol = tols().hermitian_input);

// Smallest/largest eigenvalue of a Hermitian matrix. Symmetrizes the
// floating-point drift of products before factorizing; rejects genuinely
// non-Hermitian input.
double min_eig(const Matrix& a);
double op_norm(const Matrix& a);  // Hermitian operator norm = max |eig|

// Frobenius-nearest PSD matrix (eigenvalue clipping at 0).
Matrix psd_project(const Matrix& a);

// Hermitian inverse square root; pivot eigenvalues must exceed min_eig_floor.
Matrix inv_sqrt(const Matrix& a, double min_eig_floor = tols().pd_pivot);

// Schur complement D - C A^{-1} B of the leading pivot x pivot block A.
Matrix schur_complement(const Matrix& m, Eigen::Index pivot);

// Deterministic splittable RNG stream. Identical seeds reproduce identical
// sequences bit-for-bit; children obtained via split() are independent of
// draws on the parent.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);
  RngStream split(std::uint64_t key) const;
  std::uint64_t next_u64();
  double uniform();                  // [0, 1)
  double gaussian();                 // N(0, 1), Box-Muller
  int uniform_int(int lo, int hi);   // inclusive range
 private:
  std::uint64_t state_;
  std::uint64_t seq_;
  double cached_gauss_ = 0.0;
  bool has_cached_ = false;
};

// Random ensembles.
Matrix random_hermitian(int n, double norm_bound, RngStream& rng);
Matrix random_isometry(int rows, int cols, RngStream& rng);  // Haar columns

struct TvInteriorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rejection sample (X, Y) at the given level with I - X^2 - Y^{2d} > 0.
std::pair<Matrix, Matrix> random_tv_interior(int d, int level, RngStream& rng,
                                             int max_tries = 4000);

}  // namespace gck

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gck/numerics.hpp"

using namespace gck;

namespace {
Matrix mat2(Cx a, Cx b, Cx c, Cx d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}
}  // namespace

TEST_CASE("kron basics") {
  Matrix x = mat2(0, 1, 1, 0);
  Matrix i2 = Matrix::Identity(2, 2);
  CHECK(kron(i2, i2).isApprox(Matrix::Identity(4, 4)));

  // kron(I_2, X) is block-diagonal with X twice
  Matrix bd = kron(i2, x);
  CHECK(bd.block(0, 0, 2, 2).isApprox(x));
  CHECK(bd.block(2, 2, 2, 2).isApprox(x));
  CHECK(bd.block(0, 2, 2, 2).norm() == doctest::Approx(0.0));

  // kron(X, I_2) swaps 2x2 blocks
  Matrix sw = kron(x, i2);
  CHECK(sw.block(0, 2, 2, 2).isApprox(i2));
  CHECK(sw.block(2, 0, 2, 2).isApprox(i2));
  CHECK(sw.block(0, 0, 2, 2).norm() == doctest::Approx(0.0));
}

TEST_CASE("kron norm multiplicativity on random 3x3") {
  RngStream rng(11);
  for (int t = 0; t < 20; ++t) {
    Matrix a = random_hermitian(3, 0.0, rng);
    Matrix b = random_hermitian(3, 0.0, rng);
    CHECK(kron(a, b).norm() == doctest::Approx(a.norm() * b.norm()).epsilon(1e-12));
  }
}

TEST_CASE("herm_eig sorts and reconstructs") {
  Matrix d = Matrix::Zero(3, 3);
  d(0, 0) = 3;
  d(1, 1) = 1;
  d(2, 2) = 2;
  HermEig e = herm_eig(d);
  CHECK(e.values(0) == doctest::Approx(1));
  CHECK(e.values(1) == doctest::Approx(2));
  CHECK(e.values(2) == doctest::Approx(3));

  Matrix x = mat2(0, 1, 1, 0);
  HermEig ex = herm_eig(x);
  CHECK(ex.values(0) == doctest::Approx(-1));
  CHECK(ex.values(1) == doctest::Approx(1));

  RngStream rng(5);
  Matrix h = random_hermitian(8, 0.0, rng);
  HermEig eh = herm_eig(h);
  Matrix rec = eh.vectors * eh.values.asDiagonal() * eh.vectors.adjoint();
  CHECK((rec - h).norm() <= 1e-10 * std::max(1.0, h.norm()));
  CHECK((eh.vectors.adjoint() * eh.vectors - Matrix::Identity(8, 8)).norm() <= 1e-10);
}

TEST_CASE("herm_eig rejects non-Hermitian input") {
  Matrix bad = mat2(0, 1, 0, 0);
  CHECK_THROWS_AS(herm_eig(bad), std::invalid_argument);
}

TEST_CASE("psd_project clips and is idempotent") {
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 1;
  d(1, 1) = -1;
  Matrix p = psd_project(d);
  CHECK(p(0, 0).real() == doctest::Approx(1));
  CHECK(p(1, 1).real() == doctest::Approx(0));

  RngStream rng(7);
  Matrix h = random_hermitian(5, 0.0, rng);
  Matrix p1 = psd_project(h);
  CHECK((psd_project(p1) - p1).norm() <= 1e-12);
  Matrix already = p1;
  CHECK((psd_project(already) - already).norm() <= 1e-12);
}

TEST_CASE("psd_project optimality against a 2x2 grid oracle") {
  // Brute-force the nearest PSD matrix over a parameterized real family
  // diag(a, b) + offdiag c and compare distances.
  Matrix h = mat2(0.3, 0.8, 0.8, -0.9);
  Matrix p = psd_project(h);
  const double dist = (p - h).norm();
  for (double a = 0.0; a <= 2.0; a += 0.05)
    for (double b = 0.0; b <= 2.0; b += 0.05)
      for (double c = -1.5; c <= 1.5; c += 0.05) {
        Matrix q = mat2(a, c, c, b);
        if (min_eig(q) < -1e-12) continue;
        CHECK((q - h).norm() >= dist - 1e-6);
      }
}

TEST_CASE("psd_project is non-expansive") {
  RngStream rng(13);
  for (int t = 0; t < 200; ++t) {
    Matrix a = random_hermitian(4, 0.0, rng);
    Matrix b = random_hermitian(4, 0.0, rng);
    CHECK((psd_project(a) - psd_project(b)).norm() <= (a - b).norm() + 1e-12);
  }
}

TEST_CASE("schur_complement") {
  // [[I, X], [X, I]] with pivot I gives I - X^2
  Matrix x = mat2(0.4, 0.1, 0.1, -0.2);
  Matrix m(4, 4);
  m.topLeftCorner(2, 2) = Matrix::Identity(2, 2);
  m.topRightCorner(2, 2) = x;
  m.bottomLeftCorner(2, 2) = x;
  m.bottomRightCorner(2, 2) = Matrix::Identity(2, 2);
  Matrix sc = schur_complement(m, 2);
  CHECK((sc - (Matrix::Identity(2, 2) - x * x)).norm() <= 1e-12);

  // PSD equivalence on random PD-pivot blocks
  RngStream rng(3);
  for (int t = 0; t < 50; ++t) {
    Matrix a = random_hermitian(2, 0.0, rng);
    a = a * a.adjoint() + 0.5 * Matrix::Identity(2, 2);
    Matrix b = random_hermitian(2, 0.0, rng);
    Matrix c = random_hermitian(2, 0.0, rng);
    Matrix blk(4, 4);
    blk.topLeftCorner(2, 2) = a;
    blk.topRightCorner(2, 2) = b;
    blk.bottomLeftCorner(2, 2) = b.adjoint();
    blk.bottomRightCorner(2, 2) = c;
    const bool whole = min_eig(blk) >= -1e-10;
    const bool pieces = min_eig(schur_complement(blk, 2)) >= -1e-10;
    CHECK(whole == pieces);
  }

  Matrix sing = Matrix::Zero(4, 4);
  CHECK_THROWS_AS(schur_complement(sing, 2), std::invalid_argument);
}

TEST_CASE("rng determinism and splitting") {
  RngStream a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  RngStream c(42);
  RngStream child1 = c.split(1), child2 = c.split(2);
  CHECK(child1.next_u64() != child2.next_u64());

  // identical seeds reproduce identical gaussians bit-for-bit
  RngStream g1(9), g2(9);
  for (int i = 0; i < 50; ++i) {
    const double x = g1.gaussian(), y = g2.gaussian();
    CHECK(x == y);
  }
}

TEST_CASE("random ensembles") {
  RngStream rng(17);
  Matrix v = random_isometry(5, 3, rng);
  CHECK((v.adjoint() * v - Matrix::Identity(3, 3)).norm() <= 1e-10);

  RngStream r1(23), r2(23);
  Matrix h1 = random_hermitian(4, 1.0, r1);
  Matrix h2 = random_hermitian(4, 1.0, r2);
  CHECK((h1 - h2).norm() == 0.0);
  CHECK(op_norm(h1) <= 1.0 + 1e-12);

  auto [x, y] = random_tv_interior(1, 2, rng);
  Matrix p = Matrix::Identity(2, 2) - x * x - y * y;
  CHECK(min_eig(p) > 0.0);
  auto [x3, y3] = random_tv_interior(3, 2, rng);
  Matrix y6 = y3 * y3 * y3 * y3 * y3 * y3;
  CHECK(min_eig(Matrix::Identity(2, 2) - x3 * x3 - y6) > 0.0);
}

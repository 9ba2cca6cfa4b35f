#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gck/semialg.hpp"
#include "gck/separation.hpp"

using namespace gck;

namespace {

HermitianTuple scalar_tuple(std::initializer_list<double> vals) {
  std::vector<Matrix> entries;
  for (double v : vals) {
    Matrix m(1, 1);
    m(0, 0) = v;
    entries.push_back(m);
  }
  return HermitianTuple(std::move(entries));
}

HermitianTuple tv_point(int d, int level, RngStream& rng) {
  auto [x, y] = random_tv_interior(d, level, rng);
  return HermitianTuple({x, y});
}

Eigen::VectorXd gamma_image_vec(const GammaMap& g, const HermitianTuple& x) {
  Eigen::VectorXd out(g.r());
  const auto img = g.eval(x);
  for (int j = 0; j < g.r(); ++j) out(j) = img[j](0, 0).real();
  return out;
}

}  // namespace

TEST_CASE("psd_feasibility: planted solutions are recovered") {
  // {C = I, C >= 0}
  BlockSystem sys;
  const int b = sys.add_block(2, true);
  for (int a = 0; a < 2; ++a)
    for (int c = a; c < 2; ++c) {
      Matrix h = Matrix::Zero(2, 2);
      h(a, c) = h(c, a) = (a == c) ? 1.0 : 0.5;
      sys.add_equation({{b, h}}, a == c ? 1.0 : 0.0);
      if (a != c) {
        Matrix hi = Matrix::Zero(2, 2);
        hi(a, c) = Cx(0, -0.5);
        hi(c, a) = Cx(0, 0.5);
        sys.add_equation({{b, hi}}, 0.0);
      }
    }
  const PsdFeasibilityResult r = psd_feasibility(sys, 500);
  CHECK(r.found);
  CHECK((r.blocks[0] - Matrix::Identity(2, 2)).norm() <= 1e-6);

  // {trace(C) = -1, C >= 0, size 1}: infeasible
  BlockSystem bad;
  const int b2 = bad.add_block(1, true);
  Matrix one = Matrix::Identity(1, 1);
  bad.add_equation({{b2, one}}, -1.0);
  const PsdFeasibilityResult r2 = psd_feasibility(bad, 3000);
  CHECK_FALSE(r2.found);
}

TEST_CASE("psd_feasibility: random 3-block plant-and-recover") {
  RngStream rng(71);
  for (int trial = 0; trial < 5; ++trial) {
    BlockSystem sys;
    std::vector<Matrix> planted;
    std::vector<int> ids;
    for (int k = 0; k < 3; ++k) {
      const int n = 2 + (k % 2);
      ids.push_back(sys.add_block(n, true));
      Matrix g = random_hermitian(n, 0.0, rng);
      planted.push_back(g * g.adjoint());  // PSD plant
    }
    // random linear probes of the planted solution
    for (int e = 0; e < 6; ++e) {
      std::vector<std::pair<int, Matrix>> terms;
      double rhs = 0.0;
      for (int k = 0; k < 3; ++k) {
        const Matrix h = random_hermitian(static_cast<int>(planted[k].rows()), 0.0, rng);
        rhs += (h * planted[k]).trace().real();
        terms.emplace_back(ids[k], h);
      }
      sys.add_equation(std::move(terms), rhs);
    }
    const PsdFeasibilityResult r = psd_feasibility(sys, 20000, 1e-8);
    CHECK(r.found);
    CHECK(r.eq_residual <= 1e-8);
    CHECK(r.min_block_eig >= -1e-10);
  }
}

TEST_CASE("apply_choi matches the Kraus picture") {
  RngStream rng(72);
  const int n = 3, l = 2;
  // Kraus map Phi(Z) = V* Z V with V: C^l -> C^n; its Choi block satisfies
  // C[(m,a),(k,b)] = conj(V(m,a)) V(k,b)
  Matrix v = Matrix::Zero(n, l);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < l; ++j) v(i, j) = Cx(rng.gaussian(), rng.gaussian());
  Matrix c = Matrix::Zero(n * l, n * l);
  for (int m = 0; m < n; ++m)
    for (int a = 0; a < l; ++a)
      for (int k2 = 0; k2 < n; ++k2)
        for (int b = 0; b < l; ++b)
          c(m * l + a, k2 * l + b) = std::conj(v(m, a)) * v(k2, b);
  CHECK(is_hermitian(c, 1e-10));
  CHECK(min_eig(c) >= -1e-10);
  for (int t = 0; t < 10; ++t) {
    const Matrix z = random_hermitian(n, 0.0, rng);
    const Matrix via_choi = apply_choi(c, z, l);
    const Matrix via_kraus = v.adjoint() * z * v;
    CHECK((via_choi - via_kraus).norm() <= 1e-10 * std::max(1.0, z.norm()));
  }
}

TEST_CASE("augment_pairwise_direct_sums") {
  RngStream rng(73);
  std::vector<HermitianTuple> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(tv_point(1, 1 + (i % 2), rng));
  const auto aug = augment_pairwise_direct_sums(gens, 8);
  CHECK(aug.size() == 3 + 6);  // all pairs i <= j
  const auto capped = augment_pairwise_direct_sums(gens, 2);
  CHECK(capped.size() < aug.size());
}

TEST_CASE("hull_membership at level 1 matches the LP oracle") {
  RngStream rng(74);
  const GammaMap y2 = GammaMap::y2();
  int agreements = 0, total = 0;
  for (int inst = 0; inst < 6; ++inst) {
    RngStream irng = rng.split(inst);
    std::vector<HermitianTuple> gens;
    std::vector<Eigen::VectorXd> pts;
    for (int i = 0; i < 25; ++i) {
      const HermitianTuple p = tv_point(1, 1, irng);
      gens.push_back(HermitianTuple::symmetrized(y2.eval(p)));
      pts.push_back(gamma_image_vec(y2, p));
    }
    gens.push_back(HermitianTuple::zero(3, 1));
    pts.push_back(Eigen::VectorXd::Zero(3));

    // inside probe: the generator centroid
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(3);
    for (const auto& z : pts) centroid += z / static_cast<double>(pts.size());
    // outside probe: a scaled boundary point
    const HermitianTuple bpt = tv_point(1, 1, irng);
    const double x0 = bpt.entry(0)(0, 0).real(), y0 = bpt.entry(1)(0, 0).real();
    const double s = 1.3 / std::sqrt(x0 * x0 + y0 * y0);
    const Eigen::VectorXd wout = gamma_image_vec(
        y2, scalar_tuple({s * x0, s * y0}));

    for (const Eigen::VectorXd& w : {centroid, wout}) {
      std::vector<Matrix> entries;
      for (int j = 0; j < 3; ++j) {
        Matrix m(1, 1);
        m(0, 0) = w(j);
        entries.push_back(m);
      }
      const HermitianTuple wt(std::move(entries));
      const Level1Oracle oracle = level1_hull_oracle(pts, w);
      const double dist = hull_distance(pts, w);
      if (!oracle.inside && dist < 1e-3) continue;  // boundary-close, skip
      const HullMembershipResult hm = hull_membership(gens, wt, 1e-7, 30000);
      ++total;
      if (hm.inside == oracle.inside) ++agreements;
    }
  }
  CHECK(total >= 10);
  CHECK(agreements == total);
}

TEST_CASE("hull_membership witness invariants") {
  RngStream rng(75);
  const GammaMap y2 = GammaMap::y2();
  std::vector<HermitianTuple> gens;
  for (int i = 0; i < 10; ++i)
    gens.push_back(HermitianTuple::symmetrized(y2.eval(tv_point(1, 1, rng))));
  gens.push_back(HermitianTuple::zero(3, 1));

  // W = a generator: trivially inside, witness residuals tiny and blocks PSD
  const HullMembershipResult hm = hull_membership(gens, gens[0], 1e-7, 20000);
  CHECK(hm.inside);
  for (double r : hm.witness.residuals) CHECK(r <= 1e-6);
  for (const Matrix& c : hm.witness.choi) CHECK(min_eig(c) >= -1e-8);

  // W = unitary conjugate of a generator at level 2
  std::vector<HermitianTuple> gens2;
  for (int i = 0; i < 8; ++i)
    gens2.push_back(HermitianTuple::symmetrized(y2.eval(tv_point(1, 2, rng))));
  gens2.push_back(HermitianTuple::zero(3, 2));
  const Matrix u = random_isometry(2, 2, rng);
  const HullMembershipResult hm2 =
      hull_membership(gens2, gens2[1].compressed(u), 1e-7, 40000);
  CHECK(hm2.inside);
}

TEST_CASE("level1_hull_oracle basics") {
  std::vector<Eigen::VectorXd> pts;
  for (double sx : {-1.0, 1.0})
    for (double sy : {-1.0, 1.0}) {
      Eigen::VectorXd v(2);
      v << sx, sy;
      pts.push_back(v);
    }
  Eigen::VectorXd origin = Eigen::VectorXd::Zero(2);
  CHECK(level1_hull_oracle(pts, origin).inside);
  Eigen::VectorXd far(2);
  far << 1.5, 0.0;
  CHECK_FALSE(level1_hull_oracle(pts, far).inside);
}

TEST_CASE("find_separating_pencil in one variable") {
  // generators {0, 1, -1} on the line, outlier at 2
  std::vector<HermitianTuple> gens{scalar_tuple({0.0}), scalar_tuple({1.0}),
                                   scalar_tuple({-1.0})};
  const SeparationOutcome so = find_separating_pencil(gens, scalar_tuple({2.0}), 0.1, 20000);
  CHECK(so.found);
  CHECK(so.certificate.hull_margin >= -1e-8);
  CHECK(so.certificate.outlier_eig <= -0.1);
  CHECK(verify_certificate(so.certificate, gens, scalar_tuple({2.0})));
  // monic exactly
  CHECK((so.certificate.pencil.coeffs[0] - Matrix::Identity(1, 1)).norm() == 0.0);

  // a point inside the hull is not separated
  const SeparationOutcome in = find_separating_pencil(gens, scalar_tuple({0.5}), 0.1, 4000);
  CHECK_FALSE(in.found);

  // the zero tuple requirement is enforced
  std::vector<HermitianTuple> nz{scalar_tuple({1.0}), scalar_tuple({-1.0})};
  CHECK_THROWS_AS(find_separating_pencil(nz, scalar_tuple({2.0}), 0.1, 100),
                  std::invalid_argument);
}

TEST_CASE("weak duality: membership and certificates never co-occur") {
  RngStream rng(76);
  const GammaMap y2 = GammaMap::y2();
  int cert_count = 0, inside_count = 0;
  for (int inst = 0; inst < 12; ++inst) {
    RngStream irng = rng.split(inst);
    std::vector<HermitianTuple> gens;
    std::vector<Eigen::VectorXd> pts;
    for (int i = 0; i < 20; ++i) {
      const HermitianTuple p = tv_point(1, 1, irng);
      gens.push_back(HermitianTuple::symmetrized(y2.eval(p)));
      pts.push_back(gamma_image_vec(y2, p));
    }
    gens.push_back(HermitianTuple::zero(3, 1));
    pts.push_back(Eigen::VectorXd::Zero(3));
    // probes sweep from the generator centroid (strictly inside) out through
    // a scaled boundary image (strictly outside)
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(3);
    for (const auto& z : pts) centroid += z / static_cast<double>(pts.size());
    const HermitianTuple far_pt = scalar_tuple({1.4, 0.0});
    const Eigen::VectorXd far = gamma_image_vec(y2, far_pt);
    const double t = inst / 11.0;
    const Eigen::VectorXd probe = (1.0 - t) * centroid + t * far;
    const HermitianTuple w = scalar_tuple({probe(0), probe(1), probe(2)});
    const HullMembershipResult hm = hull_membership(gens, w, 1e-7, 25000);
    const SeparationOutcome so = find_separating_pencil(gens, w, 1e-4, 25000);
    const bool coexist = hm.inside && so.found;
    CHECK_FALSE(coexist);
    if (hm.inside) ++inside_count;
    if (so.found) ++cert_count;
  }
  CHECK(inside_count > 0);
  CHECK(cert_count > 0);
}

TEST_CASE("separate_gamma end to end on the TV screen") {
  RngStream rng(77);
  const GammaMap y2 = GammaMap::y2();
  std::vector<HermitianTuple> pts{HermitianTuple::zero(2, 1)};
  for (int i = 0; i < 40; ++i) pts.push_back(tv_point(2, 1, rng));
  const FreeSetSample k(pts);

  // Gamma(1.3 * boundary point) is separable by a y2-pencil of size 1
  const HermitianTuple outlier = scalar_tuple({1.3, 0.0});
  const GammaSeparation gs = separate_gamma(y2, k, outlier, 1e-4, 40000);
  CHECK(gs.found);
  CHECK(gs.pencil.monic());
  CHECK(gs.pencil.size() == 1);
  CHECK(gs.outlier_eig <= -1e-4);
  // strictified pencil is strictly positive on the samples
  CHECK(gs.hull_margin >= gs.strictify_t - 1e-9);

  // preconditions
  const FreeSetSample no_zero(std::vector<HermitianTuple>{tv_point(2, 1, rng)});
  CHECK_THROWS_AS(separate_gamma(y2, no_zero, outlier, 1e-4, 100), std::invalid_argument);
  FreePoly x = FreePoly::variable(2, 0), y = FreePoly::variable(2, 1);
  const GammaMap offset(2, {x, y, y * y + FreePoly::constant(2, 1.0)});
  CHECK_THROWS_AS(separate_gamma(offset, k, outlier, 1e-4, 100), std::invalid_argument);
}

TEST_CASE("separate_gamma with the trivial map reduces to plain separation") {
  RngStream rng(78);
  const GammaMap triv = GammaMap::trivial(1);
  std::vector<HermitianTuple> pts{HermitianTuple::zero(1, 1)};
  for (int i = 0; i < 10; ++i) {
    const double v = 2.0 * rng.uniform() - 1.0;
    pts.push_back(scalar_tuple({v}));
  }
  const GammaSeparation gs =
      separate_gamma(triv, FreeSetSample(pts), scalar_tuple({1.7}), 1e-3, 20000);
  CHECK(gs.found);
  CHECK(gs.outlier_eig <= -1e-3);
  CHECK(gs.hull_margin >= 0.0);
}

TEST_CASE("find_positive_polynomial on TV compression points") {
  RngStream rng(79);
  const GammaMap y2 = GammaMap::y2();
  std::vector<Eigen::VectorXd> pts;
  for (int t = 0; t < 200; ++t) {
    RngStream trial = rng.split(t);
    const HermitianTuple p = tv_point(1, trial.uniform_int(1, 3), trial);
    const Matrix h = random_isometry(p.level(), 1, trial);
    const auto img = y2.eval(p);
    Eigen::VectorXd z(3);
    for (int j = 0; j < 3; ++j) z(j) = (h.adjoint() * img[j] * h)(0, 0).real();
    pts.push_back(z);
  }
  const PositiveCombination pc = find_positive_polynomial(y2, pts);
  CHECK(pc.status == PositiveCombinationStatus::Found);
  CHECK(pc.min_inner >= -1e-10);
  for (const auto& z : pts) CHECK(pc.lambda.dot(z) >= -1e-10);
  // for the y2 map the certificate is the square coordinate itself
  CHECK(pc.lambda(2) > 0.0);
  CHECK(std::abs(pc.lambda(0)) <= 1e-12);
  CHECK(std::abs(pc.lambda(1)) <= 1e-12);

  // q = y^2: evaluation chain 0 <= lambda(y) = h* q(Y) h on fresh samples
  for (int t = 0; t < 200; ++t) {
    RngStream trial = rng.split(100000 + t);
    const int n = trial.uniform_int(1, 3);
    const HermitianTuple yy({random_hermitian(n, 0.0, trial), random_hermitian(n, 0.0, trial)});
    const Matrix h = random_isometry(n, 1, trial);
    const auto img = y2.eval(yy);
    Eigen::VectorXd z(3);
    for (int j = 0; j < 3; ++j) z(j) = (h.adjoint() * img[j] * h)(0, 0).real();
    const double lam_y = pc.lambda.dot(z);
    const double h_q_h = (h.adjoint() * pc.q.eval(yy) * h)(0, 0).real();
    CHECK(lam_y == doctest::Approx(h_q_h).epsilon(1e-10));
    CHECK(lam_y >= -1e-10);
  }
}

TEST_CASE("find_positive_polynomial: interior and degenerate cases") {
  const GammaMap triv = GammaMap::trivial(2);
  // simplex strictly containing 0
  std::vector<Eigen::VectorXd> simplex;
  for (auto [a, b] : {std::pair{1.0, 0.0}, {-1.0, 1.0}, {-1.0, -1.0}}) {
    Eigen::VectorXd v(2);
    v << a, b;
    simplex.push_back(v);
  }
  CHECK(find_positive_polynomial(triv, simplex).status ==
        PositiveCombinationStatus::ZeroInInterior);

  // half-space case: points with z1 >= 0
  std::vector<Eigen::VectorXd> half;
  for (auto [a, b] : {std::pair{0.0, 1.0}, {0.5, -1.0}, {1.0, 0.3}}) {
    Eigen::VectorXd v(2);
    v << a, b;
    half.push_back(v);
  }
  const PositiveCombination pc = find_positive_polynomial(triv, half);
  CHECK(pc.status == PositiveCombinationStatus::Found);
  CHECK(pc.min_inner >= -1e-10);

  // all points at the origin: degenerate hull
  std::vector<Eigen::VectorXd> zeros(4, Eigen::VectorXd::Zero(2));
  CHECK(find_positive_polynomial(triv, zeros).status ==
        PositiveCombinationStatus::DegenerateHull);
}

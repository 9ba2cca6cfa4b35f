#include "gck/gamma.hpp"

#include <algorithm>

namespace gck {

Isometry::Isometry(Matrix m, double tol) : v(std::move(m)) {
  const Matrix gram = v.adjoint() * v;
  const Matrix eye = Matrix::Identity(v.cols(), v.cols());
  if ((gram - eye).norm() > tol)
    throw std::invalid_argument("Isometry: V*V deviates from the identity");
}

GammaMap::GammaMap(int g, std::vector<FreePoly> coords) : g_(g), coords_(std::move(coords)) {
  if (g < 1 || static_cast<int>(coords_.size()) < g)
    throw std::invalid_argument("GammaMap: need r >= g >= 1");
  for (int j = 0; j < static_cast<int>(coords_.size()); ++j) {
    const FreePoly& c = coords_[j];
    if (c.nvars() != g) throw std::invalid_argument("GammaMap: coordinate nvars mismatch");
    if (!c.is_symmetric()) throw std::invalid_argument("GammaMap: coordinates must be symmetric");
    if (j < g && !(c == FreePoly::variable(g, j)))
      throw std::invalid_argument("GammaMap: coordinate j <= g must equal x_j");
  }
  vanishes_at_zero_ = true;
  for (const FreePoly& c : coords_)
    if (c.coeff(Word::unit()) != Cx(0.0)) vanishes_at_zero_ = false;
}

GammaMap GammaMap::trivial(int g) {
  std::vector<FreePoly> coords;
  for (int j = 0; j < g; ++j) coords.push_back(FreePoly::variable(g, j));
  GammaMap out(g, std::move(coords));
  out.name_ = "x";
  return out;
}

GammaMap GammaMap::y2() {
  const FreePoly x = FreePoly::variable(2, 0);
  const FreePoly y = FreePoly::variable(2, 1);
  GammaMap out(2, {x, y, y * y});
  out.name_ = "y2";
  return out;
}

GammaMap GammaMap::xy() {
  const FreePoly x = FreePoly::variable(2, 0);
  const FreePoly y = FreePoly::variable(2, 1);
  const FreePoly sym = x * y + y * x;
  const FreePoly antisym = (x * y - y * x).scaled(Cx(0.0, 1.0));
  GammaMap out(2, {x, y, sym, antisym});
  out.name_ = "xy";
  return out;
}

GammaMap GammaMap::named(const std::string& name, int g) {
  if (name == "x") return trivial(g);
  if (name == "y2") return y2();
  if (name == "xy") return xy();
  throw std::invalid_argument("GammaMap::named: unknown map '" + name + "'");
}

std::vector<Matrix> GammaMap::eval(const HermitianTuple& x) const {
  if (x.width() != g_) throw std::invalid_argument("GammaMap::eval: width mismatch");
  std::vector<Matrix> out;
  out.reserve(coords_.size());
  for (int j = 0; j < static_cast<int>(coords_.size()); ++j) {
    if (j < g_)
      out.push_back(x.entry(j));  // exact: gamma_j = x_j
    else
      out.push_back(coords_[j].eval(x));
  }
  return out;
}

PairCheck is_gamma_pair(const GammaMap& g, const HermitianTuple& x, const Isometry& v,
                        double tol) {
  if (v.codomain() != x.level()) throw std::invalid_argument("is_gamma_pair: level mismatch");
  const std::vector<Matrix> gx = g.eval(x);
  const HermitianTuple xc = x.compressed(v.v);
  const std::vector<Matrix> gxc = g.eval(xc);
  double res = 0.0;
  for (int j = 0; j < g.r(); ++j)
    res = std::max(res, (v.v.adjoint() * gx[j] * v.v - gxc[j]).norm());
  return PairCheck{res <= tol, res};
}

Y2PairCheck is_y2_pair(const Matrix& x, const Matrix& y, const Isometry& v, double tol) {
  const HermitianTuple t({x, y});
  const PairCheck pc = is_gamma_pair(GammaMap::y2(), t, v, tol);
  const Matrix proj = Matrix::Identity(y.rows(), y.rows()) - v.v * v.v.adjoint();
  const double red = (proj * y * v.v).norm();
  return Y2PairCheck{pc.ok, pc.residual, red};
}

PairCheck is_xy_pair(const Matrix& x, const Matrix& y, const Isometry& v, double tol) {
  const Matrix lhs = v.v.adjoint() * x * y * v.v;
  const Matrix rhs = (v.v.adjoint() * x * v.v) * (v.v.adjoint() * y * v.v);
  const double res = (lhs - rhs).norm();
  return PairCheck{res <= tol, res};
}

namespace {

// Inclusions of spans of eigenvector subsets of the nonlinear coordinates;
// for {x,y,y^2} these are exactly the reducing subspaces of Y.
std::vector<Matrix> eigenspace_inclusions(const GammaMap& g, const HermitianTuple& x,
                                          RngStream& rng, int count) {
  std::vector<Matrix> out;
  const int n = x.level();
  if (n < 2) return out;
  std::vector<Matrix> sources;
  for (int j = g.g(); j < g.r(); ++j) sources.push_back(g.coord(j).eval(x));
  for (int j = 0; j < g.g(); ++j) sources.push_back(x.entry(j));
  for (int t = 0; t < count && !sources.empty(); ++t) {
    const Matrix& src = sources[t % sources.size()];
    HermEig e = herm_eig(hermitize(src), 1e-6);
    const int m = rng.uniform_int(1, n - 1);
    // random subset of m eigenvectors
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(idx[i], idx[rng.uniform_int(0, i)]);
    Matrix v(n, m);
    for (int c = 0; c < m; ++c) v.col(c) = e.vectors.col(idx[c]);
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<Isometry> sample_gamma_pairs(const GammaMap& g, const HermitianTuple& x,
                                         int budget, std::uint64_t seed) {
  if (budget < 1) throw std::invalid_argument("sample_gamma_pairs: budget must be >= 1");
  RngStream rng(seed);
  const int n = x.level();

  // Candidate families, interleaved round-robin so no family is starved when
  // the budget is small.
  std::vector<std::vector<Matrix>> families(4);

  if (n % 2 == 0) {  // averaging isometry on visibly block-diagonal inputs
    const int h = n / 2;
    for (double t : {0.5, 0.25, 0.75}) {
      Matrix v(n, h);
      v.topRows(h) = std::sqrt(t) * Matrix::Identity(h, h);
      v.bottomRows(h) = std::sqrt(1.0 - t) * Matrix::Identity(h, h);
      families[0].push_back(std::move(v));
    }
  }
  families[1] = eigenspace_inclusions(g, x, rng, std::max(3, budget / 2));
  for (int t = 0; t < std::max(2, budget / 3); ++t)
    families[2].push_back(random_isometry(n, n, rng));  // unitaries: always pairs
  for (int t = 0; t < 3 * budget; ++t) {  // rejection-filtered random isometries
    const int m = n == 1 ? 1 : rng.uniform_int(1, n);
    families[3].push_back(random_isometry(n, m, rng));
  }

  std::vector<Isometry> accepted;
  std::vector<std::size_t> cursor(families.size(), 0);
  bool progress = true;
  while (static_cast<int>(accepted.size()) < budget && progress) {
    progress = false;
    for (std::size_t f = 0; f < families.size(); ++f) {
      if (static_cast<int>(accepted.size()) >= budget) break;
      if (cursor[f] >= families[f].size()) continue;
      progress = true;
      Isometry v(std::move(families[f][cursor[f]++]));
      if (is_gamma_pair(g, x, v, tols().gamma_pair).ok) accepted.push_back(std::move(v));
    }
  }
  return accepted;
}

FreeSetSample::FreeSetSample(std::vector<HermitianTuple> pts,
                             std::function<bool(const HermitianTuple&)> orc)
    : points(std::move(pts)), oracle(std::move(orc)) {
  if (!points.empty()) {
    const int w = points.front().width();
    for (const HermitianTuple& p : points)
      if (p.width() != w) throw std::invalid_argument("FreeSetSample: width mismatch");
  }
  if (oracle)
    for (const HermitianTuple& p : points)
      if (!oracle(p)) throw std::invalid_argument("FreeSetSample: stored point fails the oracle");
}

int FreeSetSample::width() const {
  return points.empty() ? 0 : points.front().width();
}

FreeSetSample gamma_hull_sample(const GammaMap& g, const FreeSetSample& k, int budget,
                                std::uint64_t seed) {
  if (k.points.empty()) throw std::invalid_argument("gamma_hull_sample: empty sample");
  RngStream rng(seed);
  std::vector<HermitianTuple> out;
  std::uint64_t pair_key = 1;
  auto emit_compressions = [&](const HermitianTuple& x) {
    const auto pairs = sample_gamma_pairs(g, x, 4, rng.split(pair_key++).next_u64());
    for (const Isometry& v : pairs) {
      if (static_cast<int>(out.size()) >= budget) break;
      out.push_back(x.compressed(v.v));
    }
  };
  // Systematic pass over pairwise direct sums (free-set closure), then random
  // deeper sums until the budget is met.
  const int npts = static_cast<int>(k.points.size());
  for (int i = 0; i < npts && static_cast<int>(out.size()) < budget; ++i)
    for (int j = 0; j < npts && static_cast<int>(out.size()) < budget; ++j)
      emit_compressions(i == j ? k.points[i] : k.points[i].direct_sum(k.points[j]));
  while (static_cast<int>(out.size()) < budget) {
    const int parts = rng.uniform_int(1, 3);
    HermitianTuple x = k.points[rng.uniform_int(0, npts - 1)];
    for (int p = 1; p < parts; ++p)
      x = x.direct_sum(k.points[rng.uniform_int(0, npts - 1)]);
    emit_compressions(x);
    if (pair_key > static_cast<std::uint64_t>(16 * budget + 16)) break;  // stay bounded
  }
  return FreeSetSample(std::move(out));
}

namespace {

ConvexityReport falsify(const MatrixPoly& p, const GammaMap& g, int trials, std::uint64_t seed,
                        bool concomitant) {
  if (p.nvars() != g.g()) throw std::invalid_argument("check: polynomial width mismatch");
  RngStream rng(seed);
  for (int t = 0; t < trials; ++t) {
    RngStream trial = rng.split(t);
    const int n = trial.uniform_int(1, 4);
    std::vector<Matrix> entries;
    for (int j = 0; j < g.g(); ++j) entries.push_back(random_hermitian(n, 1.5, trial));
    HermitianTuple x(std::move(entries));
    const auto pairs = sample_gamma_pairs(g, x, 3, trial.next_u64());
    const Matrix px = p.eval(x);
    const Matrix eye_mu = Matrix::Identity(p.size(), p.size());
    for (const Isometry& v : pairs) {
      const Matrix big_v = kron(eye_mu, v.v);
      const Matrix compressed = big_v.adjoint() * px * big_v;
      const Matrix at_compressed = p.eval(x.compressed(v.v));
      if (concomitant) {
        const double res = (compressed - at_compressed).norm();
        if (res > tols().concomitant_resid)
          return ConvexityReport{true, ConvexityWitness{x, v.v, res}, t + 1};
      } else {
        const double gap = min_eig(hermitize(compressed - at_compressed));
        if (gap < -tols().convexity_gap)
          return ConvexityReport{true, ConvexityWitness{x, v.v, gap}, t + 1};
      }
    }
  }
  return ConvexityReport{false, std::nullopt, trials};
}

}  // namespace

ConvexityReport check_gamma_convex(const MatrixPoly& p, const GammaMap& g, int trials,
                                   std::uint64_t seed) {
  if (!p.is_symmetric()) throw std::invalid_argument("check_gamma_convex: p must be symmetric");
  return falsify(p, g, trials, seed, /*concomitant=*/false);
}

ConvexityReport check_concomitant(const MatrixPoly& f, const GammaMap& g, int trials,
                                  std::uint64_t seed) {
  return falsify(f, g, trials, seed, /*concomitant=*/true);
}

}  // namespace gck

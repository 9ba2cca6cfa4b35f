#include "gck/separation.hpp"

#include <cmath>

namespace gck {

// -- BlockSystem -----------------------------------------------------------

int BlockSystem::add_block(int dim, bool psd) {
  dims_.push_back(dim);
  psd_.push_back(psd);
  offsets_.push_back(total_dim_);
  total_dim_ += dim * dim;
  return static_cast<int>(dims_.size()) - 1;
}

void BlockSystem::add_equation(std::vector<std::pair<int, Matrix>> terms, double rhs) {
  for (auto& [k, h] : terms) {
    if (k < 0 || k >= block_count()) throw std::invalid_argument("BlockSystem: bad block index");
    if (h.rows() != dims_[k] || h.cols() != dims_[k])
      throw std::invalid_argument("BlockSystem: test matrix size mismatch");
    h = hermitize(h);  // only the Hermitian part matters for Re tr(H X)
  }
  rows_.push_back(Row{std::move(terms), rhs});
}

void BlockSystem::add_matrix_equation(const std::vector<int>& blocks,
                                      const std::function<Matrix(int, int, int)>& entry_coef,
                                      const Matrix& rhs) {
  const int l = static_cast<int>(rhs.rows());
  for (int a = 0; a < l; ++a) {
    for (int b = a; b < l; ++b) {
      std::vector<std::pair<int, Matrix>> re_terms, im_terms;
      for (int k : blocks) {
        const Matrix h = entry_coef(k, a, b);
        re_terms.emplace_back(k, h);
        if (a != b) im_terms.emplace_back(k, Cx(0.0, -1.0) * h);
      }
      add_equation(std::move(re_terms), rhs(a, b).real());
      if (a != b) add_equation(std::move(im_terms), rhs(a, b).imag());
    }
  }
}

// Off-diagonal coordinates carry a sqrt(2) weight so the packed Euclidean
// norm equals the Frobenius norm; both projections then act in one metric.
namespace {
constexpr double kOffDiag = 1.4142135623730950488;
}

Eigen::VectorXd BlockSystem::pack(const std::vector<Matrix>& blocks) const {
  Eigen::VectorXd x(total_dim_);
  for (int k = 0; k < block_count(); ++k) {
    const Matrix& m = blocks[k];
    int p = offsets_[k];
    const int n = dims_[k];
    for (int i = 0; i < n; ++i) x(p++) = m(i, i).real();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        x(p++) = kOffDiag * m(i, j).real();
        x(p++) = kOffDiag * m(i, j).imag();
      }
  }
  return x;
}

std::vector<Matrix> BlockSystem::unpack(const Eigen::VectorXd& x) const {
  std::vector<Matrix> out;
  for (int k = 0; k < block_count(); ++k) {
    const int n = dims_[k];
    Matrix m(n, n);
    int p = offsets_[k];
    for (int i = 0; i < n; ++i) m(i, i) = x(p++);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        m(i, j) = Cx(x(p) / kOffDiag, x(p + 1) / kOffDiag);
        m(j, i) = std::conj(m(i, j));
        p += 2;
      }
    out.push_back(std::move(m));
  }
  return out;
}

Eigen::MatrixXd BlockSystem::constraint_matrix() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(equation_count(), total_dim_);
  for (int e = 0; e < equation_count(); ++e) {
    for (const auto& [k, h] : rows_[e].terms) {
      const int n = dims_[k];
      int p = offsets_[k];
      // Re tr(H X) = sum_i H_ii X_ii + sum_{i<j} 2 Re(H_ij) u_ij + 2 Im(H_ij) v_ij,
      // expressed against the sqrt(2)-weighted off-diagonal coordinates.
      for (int i = 0; i < n; ++i) a(e, p++) += h(i, i).real();
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          a(e, p++) += kOffDiag * h(i, j).real();
          a(e, p++) += kOffDiag * h(i, j).imag();
        }
    }
  }
  return a;
}

Eigen::VectorXd BlockSystem::rhs() const {
  Eigen::VectorXd b(equation_count());
  for (int e = 0; e < equation_count(); ++e) b(e) = rows_[e].rhs;
  return b;
}

// -- psd_feasibility ---------------------------------------------------------

PsdFeasibilityResult psd_feasibility(const BlockSystem& sys, int max_iter, double tol) {
  const Eigen::MatrixXd a = sys.constraint_matrix();
  const Eigen::VectorXd b = sys.rhs();
  const Eigen::MatrixXd gram = a * a.transpose();
  // Pseudo-inverse via eigendecomposition: constraint sets may be redundant.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  const double cutoff = 1e-12 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  Eigen::VectorXd inv = es.eigenvalues();
  for (int i = 0; i < inv.size(); ++i) inv(i) = inv(i) > cutoff ? 1.0 / inv(i) : 0.0;
  const Eigen::MatrixXd gram_pinv =
      es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();

  auto affine_project = [&](const Eigen::VectorXd& v) {
    return (v - a.transpose() * (gram_pinv * (a * v - b))).eval();
  };
  auto cone_project = [&](const Eigen::VectorXd& v) {
    std::vector<Matrix> blocks = sys.unpack(v);
    for (int k = 0; k < sys.block_count(); ++k)
      if (sys.block_psd(k)) blocks[k] = psd_project(blocks[k]);
    return sys.pack(blocks);
  };

  // Douglas-Rachford splitting between the cone product and the affine
  // subspace; the cone shadow converges to an intersection point when one
  // exists and the step q - p stabilizes at the positive gap otherwise.
  Eigen::VectorXd u = affine_project(Eigen::VectorXd::Zero(a.cols()));
  double best = 1e300;
  int stall = 0;
  int it = 0;
  double residual = 1e300;
  Eigen::VectorXd shadow = u;
  for (it = 1; it <= max_iter; ++it) {
    const Eigen::VectorXd p = cone_project(u);
    const Eigen::VectorXd q = affine_project(2.0 * p - u);
    u += q - p;
    residual = (a * p - b).norm();
    if (residual <= tol) {
      std::vector<Matrix> blocks = sys.unpack(p);
      double mn = 0.0;
      for (int k = 0; k < sys.block_count(); ++k)
        if (sys.block_psd(k)) mn = std::min(mn, min_eig(blocks[k]));
      return {true, std::move(blocks), residual, mn, it};
    }
    shadow = p;
    if (residual < best * (1.0 - 1e-6)) {
      best = residual;
      stall = 0;
    } else if (++stall > 800) {
      break;  // no progress: report failure within budget
    }
  }
  std::vector<Matrix> blocks = sys.unpack(shadow);
  double mn = 0.0;
  for (int k = 0; k < sys.block_count(); ++k)
    if (sys.block_psd(k)) mn = std::min(mn, min_eig(blocks[k]));
  return {false, std::move(blocks), residual, mn, it};
}

// -- hull membership ----------------------------------------------------------

std::vector<HermitianTuple> augment_pairwise_direct_sums(std::vector<HermitianTuple> gens,
                                                         int max_level) {
  const std::size_t base = gens.size();
  for (std::size_t i = 0; i < base; ++i)
    for (std::size_t j = i; j < base; ++j)
      if (gens[i].level() + gens[j].level() <= max_level)
        gens.push_back(gens[i].direct_sum(gens[j]));
  return gens;
}

Matrix apply_choi(const Matrix& c, const Matrix& z, int l) {
  const int n = static_cast<int>(z.rows());
  if (c.rows() != n * l) throw std::invalid_argument("apply_choi: size mismatch");
  Matrix out = Matrix::Zero(l, l);
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b) {
      Cx s = 0.0;
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) s += z(m, k) * c(m * l + a, k * l + b);
      out(a, b) = s;
    }
  return out;
}

namespace {

// tr(H C) = entry (a, b) of the Choi-applied image of z: H = z^T (x) E_ba.
Matrix choi_entry_test(const Matrix& z, int l, int a, int b) {
  const int n = static_cast<int>(z.rows());
  Matrix h = Matrix::Zero(n * l, n * l);
  for (int k = 0; k < n; ++k)
    for (int m = 0; m < n; ++m) h(k * l + b, m * l + a) = z(m, k);
  return h;
}

}  // namespace

HullMembershipResult hull_membership(const std::vector<HermitianTuple>& generators,
                                     const HermitianTuple& w, double tol, int max_iter,
                                     bool augment) {
  if (generators.empty()) throw std::invalid_argument("hull_membership: no generators");
  const int r = w.width();
  const int l = w.level();
  for (const HermitianTuple& z : generators)
    if (z.width() != r) throw std::invalid_argument("hull_membership: width mismatch");

  std::vector<HermitianTuple> gens =
      augment ? augment_pairwise_direct_sums(generators) : generators;

  BlockSystem sys;
  std::vector<int> block_ids;
  for (const HermitianTuple& z : gens) block_ids.push_back(sys.add_block(z.level() * l, true));

  for (int j = 0; j < r; ++j)
    sys.add_matrix_equation(
        block_ids,
        [&](int k, int a, int b) { return choi_entry_test(gens[k].entry(j), l, a, b); },
        w.entry(j));
  sys.add_matrix_equation(
      block_ids,
      [&](int k, int a, int b) {
        return choi_entry_test(Matrix::Identity(gens[k].level(), gens[k].level()), l, a, b);
      },
      Matrix::Identity(l, l));

  PsdFeasibilityResult fr = psd_feasibility(sys, max_iter, tol);
  MembershipWitness witness;
  if (fr.found) {
    witness.choi = fr.blocks;
    for (int j = 0; j < r; ++j) {
      Matrix acc = Matrix::Zero(l, l);
      for (std::size_t i = 0; i < gens.size(); ++i)
        acc += apply_choi(fr.blocks[i], gens[i].entry(j), l);
      witness.residuals.push_back((acc - w.entry(j)).norm());
    }
    Matrix unital = Matrix::Zero(l, l);
    for (std::size_t i = 0; i < gens.size(); ++i)
      unital += apply_choi(fr.blocks[i], Matrix::Identity(gens[i].level(), gens[i].level()), l);
    witness.residuals.push_back((unital - Matrix::Identity(l, l)).norm());
    const bool sound = fr.min_block_eig >= -tols().psd_witness &&
                       *std::max_element(witness.residuals.begin(), witness.residuals.end()) <=
                           tols().eq_residual;
    return {sound, std::move(witness), fr.iterations};
  }
  return {false, std::move(witness), fr.iterations};
}

Level1Oracle level1_hull_oracle(const std::vector<Eigen::VectorXd>& points,
                                const Eigen::VectorXd& w) {
  HullLpResult r = convex_combination(points, w);
  return Level1Oracle{r.inside, r.degenerate};
}

// -- separation ---------------------------------------------------------------

namespace {

struct PencilVars {
  Matrix y0;
  std::vector<Matrix> ys;
};

Matrix pencil_eval_vars(const PencilVars& p, const HermitianTuple& z) {
  const int n = z.level();
  Matrix m = kron(p.y0, Matrix::Identity(n, n));
  for (std::size_t j = 0; j < p.ys.size(); ++j) m += kron(p.ys[j], z.entry(j));
  return m;
}

// Trace-pairing gradient of u* (Y (x) Z) u with respect to Hermitian Y:
// d(u* M u) = sum_ab G'(a,b) dY(a,b) with G' = conj(U) Z U^T, so the matrix
// paired through Re tr(G dY) is the transpose U Z^T U*; U is u reshaped to
// (l, n) row blocks. The transpose matters for complex data.
Matrix eig_gradient(const Eigen::VectorXcd& u, int l, int n, const Matrix& z) {
  Matrix umat(l, n);
  for (int a = 0; a < l; ++a)
    for (int k = 0; k < n; ++k) umat(a, k) = u(a * n + k);
  return umat * z.transpose() * umat.adjoint();
}

struct Candidate {
  LinearPencil pencil;
  double hull_margin;
  double outlier_eig;
};

// Deterministic refinement: re-solve for a monic pencil with the outlier
// functional pinned at -c via Douglas-Rachford feasibility. The output
// depends only on (generators, W, c, R), which keeps certificate sequences
// stable across nearby instances; the subgradient phase only establishes
// feasibility and the scale of c.
std::optional<Candidate> stabilized_candidate(const std::vector<HermitianTuple>& gens,
                                              const HermitianTuple& w, double c, double cap,
                                              int max_iter) {
  const int r = w.width();
  const int l = w.level();
  BlockSystem sys;
  std::vector<int> coef_ids, slack_ids, cap_ids;
  for (int j = 0; j < r; ++j) coef_ids.push_back(sys.add_block(l, false));
  for (const HermitianTuple& z : gens) slack_ids.push_back(sys.add_block(z.level() * l, true));
  for (int j = 0; j < r; ++j) cap_ids.push_back(sys.add_block(2 * l, true));

  // S_i = I + sum_j A_j (x) Z^i_j entrywise.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int n = gens[i].level();
    const int dim = l * n;
    std::vector<int> blocks{slack_ids[i]};
    for (int j = 0; j < r; ++j) blocks.push_back(coef_ids[j]);
    const HermitianTuple& z = gens[i];
    sys.add_matrix_equation(
        blocks,
        [&, n, dim](int blk, int u, int v) -> Matrix {
          if (blk == slack_ids[i]) {
            Matrix h = Matrix::Zero(dim, dim);
            h(v, u) = 1.0;
            return h;
          }
          const int j = blk - coef_ids[0];
          const int au = u / n, ku = u % n, av = v / n, kv = v % n;
          Matrix h = Matrix::Zero(l, l);
          h(av, au) = -z.entry(j)(ku, kv);
          return h;
        },
        Matrix::Identity(dim, dim));
  }

  // T_j = [[cap I, A_j], [A_j, cap I]] entrywise.
  for (int j = 0; j < r; ++j) {
    std::vector<int> blocks{cap_ids[j], coef_ids[j]};
    Matrix rhs = cap * Matrix::Identity(2 * l, 2 * l);
    sys.add_matrix_equation(
        blocks,
        [&](int blk, int u, int v) -> Matrix {
          if (blk == cap_ids[j]) {
            Matrix h = Matrix::Zero(2 * l, 2 * l);
            h(v, u) = 1.0;
            return h;
          }
          Matrix h = Matrix::Zero(l, l);
          if (u < l && v >= l) h(v - l, u) = -1.0;
          if (u >= l && v < l) h(v, u - l) = -1.0;
          return h;
        },
        rhs);
  }

  // Outlier functional pinned: sum_j tr(A_j W_j) = -c - l.
  std::vector<std::pair<int, Matrix>> fun;
  for (int j = 0; j < r; ++j) fun.emplace_back(coef_ids[j], w.entry(j));
  sys.add_equation(std::move(fun), -c - static_cast<double>(l));

  const PsdFeasibilityResult fr = psd_feasibility(sys, max_iter, 1e-9);
  if (!fr.found) return std::nullopt;
  std::vector<Matrix> coeffs;
  coeffs.push_back(Matrix::Identity(l, l));
  for (int j = 0; j < r; ++j) coeffs.push_back(hermitize(fr.blocks[coef_ids[j]]));
  LinearPencil m(r, std::move(coeffs));
  double hull = 1e300;
  for (const HermitianTuple& z : gens) hull = std::min(hull, min_eig(m.eval(z)));
  const double out = min_eig(m.eval(w));
  return Candidate{std::move(m), hull, out};
}

Candidate monic_candidate(const PencilVars& p, const std::vector<HermitianTuple>& gens,
                          const HermitianTuple& w) {
  const int l = static_cast<int>(p.y0.rows());
  double viol = 0.0;
  for (const HermitianTuple& z : gens)
    viol = std::max(viol, -min_eig(pencil_eval_vars(p, z)));
  const Matrix y0h = p.y0 + (viol + 1e-8) * Matrix::Identity(l, l);
  const Matrix s = inv_sqrt(y0h, 0.0);
  std::vector<Matrix> coeffs;
  coeffs.push_back(Matrix::Identity(l, l));
  for (const Matrix& yj : p.ys) coeffs.push_back(hermitize(s * yj * s));
  LinearPencil m(static_cast<int>(p.ys.size()), std::move(coeffs));
  double hull = 1e300;
  for (const HermitianTuple& z : gens) hull = std::min(hull, min_eig(m.eval(z)));
  const double out = min_eig(m.eval(w));
  return Candidate{std::move(m), hull, out};
}

}  // namespace

SeparationOutcome find_separating_pencil(const std::vector<HermitianTuple>& generators,
                                         const HermitianTuple& w, double delta, int budget,
                                         bool extremal) {
  if (generators.empty()) throw std::invalid_argument("find_separating_pencil: no generators");
  if (delta <= 0.0) throw std::invalid_argument("find_separating_pencil: delta must be positive");
  const int r = w.width();
  const int l = w.level();
  bool has_zero = false;
  for (const HermitianTuple& z : generators) {
    if (z.width() != r) throw std::invalid_argument("find_separating_pencil: width mismatch");
    if (z.norm() <= 1e-14) has_zero = true;
  }
  if (!has_zero)
    throw std::invalid_argument("find_separating_pencil: generators must contain the zero tuple");

  PencilVars p{Matrix::Zero(l, l), std::vector<Matrix>(r, Matrix::Zero(l, l))};
  const double rho = 10.0;

  SeparationOutcome best{false,
                         SeparationCertificate{LinearPencil::monic(r, l), 0.0, 0.0, delta, 0},
                         0};
  double best_out = 1e300;

  const int check_every = 200;
  int it = 0;
  for (it = 1; it <= budget; ++it) {
    Matrix g0 = -Matrix::Identity(l, l);
    std::vector<Matrix> gs;
    gs.reserve(r);
    for (int j = 0; j < r; ++j) gs.push_back(-w.entry(j));
    for (const HermitianTuple& z : generators) {
      const Matrix m = pencil_eval_vars(p, z);
      HermEig e = herm_eig(m, 1e-8);
      if (e.values(0) < 0.0) {
        const Eigen::VectorXcd u = e.vectors.col(0);
        const int n = z.level();
        g0 += rho * eig_gradient(u, l, n, Matrix::Identity(n, n));
        for (int j = 0; j < r; ++j) gs[j] += rho * eig_gradient(u, l, n, z.entry(j));
      }
    }
    // Normalized subgradient step: scale-free against the penalty weight and
    // the number of violated generators.
    double gnorm2 = g0.squaredNorm();
    for (const Matrix& gj : gs) gnorm2 += gj.squaredNorm();
    const double step =
        0.5 / (std::sqrt(static_cast<double>(it)) * std::max(1e-12, std::sqrt(gnorm2)));
    p.y0 = hermitize(p.y0 + step * g0);
    for (int j = 0; j < r; ++j) p.ys[j] = hermitize(p.ys[j] + step * gs[j]);
    double nrm2 = p.y0.squaredNorm();
    for (const Matrix& yj : p.ys) nrm2 += yj.squaredNorm();
    if (nrm2 > 1.0) {
      const double inv = 1.0 / std::sqrt(nrm2);
      p.y0 *= inv;
      for (Matrix& yj : p.ys) yj *= inv;
    }
    if (it % check_every == 0 || it == budget) {
      Candidate c = monic_candidate(p, generators, w);
      if (c.hull_margin >= -tols().hull_margin && c.outlier_eig < best_out) {
        best_out = c.outlier_eig;
        best.certificate =
            SeparationCertificate{std::move(c.pencil), c.hull_margin, c.outlier_eig, delta, it};
      }
      if (best_out <= -3.0 * delta) break;
    }
  }
  best.iterations = it > budget ? budget : it;
  if (best_out <= -delta && best.certificate.hull_margin >= -tols().hull_margin) {
    double max_w = 1.0;
    for (int j = 0; j < r; ++j) max_w = std::max(max_w, op_norm(w.entry(j)));
    const double cap = 16.0 * max_w;
    std::optional<Candidate> refined;
    if (extremal) {
      // Drive the pinned functional to its feasibility limit; the solution
      // then hugs the extremal supporting pencil, which is what makes
      // certificate sequences along converging outliers settle down.
      double lo = l * delta, hi = 1.5 * l * (-best_out);
      if (stabilized_candidate(generators, w, lo, cap, 6000)) {
        for (int grow = 0; grow < 40; ++grow) {
          if (!stabilized_candidate(generators, w, hi, cap, 6000)) break;
          lo = hi;
          hi *= 1.6;
        }
        for (int round = 0; round < 30; ++round) {
          const double mid = 0.5 * (lo + hi);
          (stabilized_candidate(generators, w, mid, cap, 6000) ? lo : hi) = mid;
        }
        refined = stabilized_candidate(generators, w, lo * (1.0 - 1e-9), cap,
                                       std::min(40000, budget));
      }
    } else {
      // One deterministic refinement at a fixed pinned margin.
      const double c = std::min(2.0 * l * delta, 0.25 * l * (-best_out));
      refined = stabilized_candidate(generators, w, c, cap, std::min(30000, budget));
    }
    if (refined && refined->hull_margin >= -tols().hull_margin &&
        refined->outlier_eig <= -delta) {
      best.certificate = SeparationCertificate{std::move(refined->pencil), refined->hull_margin,
                                               refined->outlier_eig, delta, best.iterations};
      best_out = best.certificate.outlier_eig;
    }
  }
  best.certificate.iterations = best.iterations;
  best.found = best_out <= -delta &&
               best.certificate.hull_margin >= -tols().hull_margin &&
               verify_certificate(best.certificate, generators, w);
  return best;
}

bool verify_certificate(const SeparationCertificate& cert,
                        const std::vector<HermitianTuple>& generators, const HermitianTuple& w) {
  const int l = cert.pencil.size();
  if ((cert.pencil.coeffs[0] - Matrix::Identity(l, l)).norm() != 0.0) return false;
  double hull = 1e300;
  for (const HermitianTuple& z : generators) hull = std::min(hull, min_eig(cert.pencil.eval(z)));
  const double out = min_eig(cert.pencil.eval(w));
  return hull >= -tols().hull_margin && out <= -cert.delta;
}

GammaSeparation separate_gamma(const GammaMap& g, const FreeSetSample& k,
                               const HermitianTuple& y, double delta, int budget,
                               bool extremal) {
  if (k.points.empty()) throw std::invalid_argument("separate_gamma: empty generator sample");
  if (!g.vanishes_at_zero())
    throw std::invalid_argument("separate_gamma: Gamma(0) = 0 is required");
  bool has_zero = false;
  for (const HermitianTuple& p : k.points)
    if (p.norm() <= 1e-14) has_zero = true;
  if (!has_zero) throw std::invalid_argument("separate_gamma: K must contain the zero tuple");

  std::vector<HermitianTuple> gens;
  gens.reserve(k.points.size());
  for (const HermitianTuple& p : k.points)
    gens.push_back(HermitianTuple::symmetrized(g.eval(p)));
  const HermitianTuple w = HermitianTuple::symmetrized(g.eval(y));

  SeparationOutcome so = find_separating_pencil(gens, w, delta, budget, extremal);
  GammaSeparation out{false, degenerate_pencil(), 0.0, 0.0, 0.0, so.iterations};
  if (!so.found) return out;

  GammaPencil composed = compose_with_gamma(so.certificate.pencil, g);
  // Strictification budget: keep the outlier eigenvalue at or below -delta.
  // Extremal runs use a smaller shift so boundary-touching limits stay
  // near-singular at the boundary point.
  const double e = so.certificate.outlier_eig;
  const double t_cap = (-e - delta) / (1.0 - e);
  const double t = std::max(1e-9, std::min(extremal ? 2e-4 : 1e-3, 0.5 * t_cap));
  GammaPencil strict = strictify(composed, t);

  double hull = 1e300;
  for (const HermitianTuple& p : k.points) hull = std::min(hull, min_eig_at(strict, p));
  out.found = true;
  out.pencil = std::move(strict);
  out.hull_margin = hull;
  out.outlier_eig = min_eig_at(out.pencil, y);
  out.strictify_t = t;
  return out;
}

PositiveCombination find_positive_polynomial(const GammaMap& g,
                                             const std::vector<Eigen::VectorXd>& points) {
  if (points.empty())
    throw std::invalid_argument("find_positive_polynomial: empty point list");
  const int r = g.r();
  for (const auto& z : points)
    if (z.size() != r) throw std::invalid_argument("find_positive_polynomial: dimension mismatch");

  double spread = 0.0;
  for (const auto& z : points) spread = std::max(spread, z.norm());
  FreePoly zero_q(g.g());
  if (spread <= 1e-10)
    return {PositiveCombinationStatus::DegenerateHull, Eigen::VectorXd::Zero(r), zero_q, 0.0};

  auto min_inner = [&](const Eigen::VectorXd& lam) {
    double mn = 1e300;
    for (const auto& z : points) mn = std::min(mn, lam.dot(z));
    return mn;
  };
  auto build = [&](const Eigen::VectorXd& lam, double mn) {
    FreePoly q(g.g());
    for (int j = 0; j < r; ++j)
      if (lam(j) != 0.0) q = q + g.coord(j).scaled(lam(j));
    return PositiveCombination{PositiveCombinationStatus::Found, lam, q, mn};
  };

  // Coordinate candidates first: nonlinear coordinates, then the variables.
  for (int pass = 0; pass < 2; ++pass) {
    const int lo = pass == 0 ? g.g() : 0;
    const int hi = pass == 0 ? r : g.g();
    for (int j = lo; j < hi; ++j)
      for (double sigma : {1.0, -1.0}) {
        Eigen::VectorXd lam = Eigen::VectorXd::Zero(r);
        lam(j) = sigma;
        const double mn = min_inner(lam);
        if (mn >= -1e-10) return build(lam, mn);
      }
  }

  SupportResult s = supporting_functional(points);
  if (s.found && s.lambda.norm() > 1e-12) return build(s.lambda, s.min_value);
  return {PositiveCombinationStatus::ZeroInInterior, Eigen::VectorXd::Zero(r), zero_q,
          s.min_value};
}

}  // namespace gck

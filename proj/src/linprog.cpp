#include "gck/linprog.hpp"

#include <cmath>
#include <stdexcept>

namespace gck {

namespace {

// Full-tableau simplex core: min c.x over the columns currently in play.
// basis holds the basic column per row. Returns status.
LpStatus simplex_iterate(Eigen::MatrixXd& t, std::vector<int>& basis, int ncols,
                         const Eigen::VectorXd& cost, double tol, int max_iter) {
  const int rows = static_cast<int>(t.rows());
  for (int it = 0; it < max_iter; ++it) {
    // Reduced costs from the current basis (explicit pricing).
    Eigen::VectorXd y = Eigen::VectorXd::Zero(rows);
    for (int i = 0; i < rows; ++i) y(i) = cost(basis[i]);
    int enter = -1;
    for (int j = 0; j < ncols; ++j) {
      const double red = cost(j) - y.dot(t.col(j));
      if (red < -tol) {
        enter = j;  // Bland: smallest index
        break;
      }
    }
    if (enter < 0) return LpStatus::Optimal;
    // Ratio test, Bland tie-break on basis index.
    int leave = -1;
    double best = 0.0;
    for (int i = 0; i < rows; ++i) {
      if (t(i, enter) > tol) {
        const double ratio = t(i, ncols) / t(i, enter);
        if (leave < 0 || ratio < best - tol ||
            (std::abs(ratio - best) <= tol && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
    }
    if (leave < 0) return LpStatus::Unbounded;
    // Pivot.
    t.row(leave) /= t(leave, enter);
    for (int i = 0; i < rows; ++i)
      if (i != leave && std::abs(t(i, enter)) > 0.0) t.row(i) -= t(i, enter) * t.row(leave);
    basis[leave] = enter;
  }
  return LpStatus::IterationLimit;
}

}  // namespace

LpSolution solve_lp(const LpProblem& p, double tol) {
  const int rows = static_cast<int>(p.a.rows());
  const int nvar = static_cast<int>(p.a.cols());
  if (p.b.size() != rows || p.c.size() != nvar)
    throw std::invalid_argument("solve_lp: inconsistent dimensions");

  // Tableau [A | I_art | b] with b >= 0.
  Eigen::MatrixXd t(rows, nvar + rows + 1);
  t.setZero();
  t.block(0, 0, rows, nvar) = p.a;
  t.col(nvar + rows) = p.b;
  for (int i = 0; i < rows; ++i) {
    if (t(i, nvar + rows) < 0.0) t.row(i) *= -1.0;
    t(i, nvar + i) = 1.0;
  }
  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) basis[i] = nvar + i;

  const int max_iter = 200 * (nvar + rows) + 2000;

  // Phase 1: minimize the artificial sum.
  Eigen::VectorXd cost1 = Eigen::VectorXd::Zero(nvar + rows);
  cost1.tail(rows).setOnes();
  LpStatus s1 = simplex_iterate(t, basis, nvar + rows, cost1, tol, max_iter);
  if (s1 == LpStatus::IterationLimit) return {LpStatus::IterationLimit, {}, 0.0};
  double art = 0.0;
  for (int i = 0; i < rows; ++i)
    if (basis[i] >= nvar) art += t(i, nvar + rows);
  if (art > 1e-7) return {LpStatus::Infeasible, {}, 0.0};

  // Pivot leftover artificials out where possible; redundant rows keep a
  // zero-valued artificial which phase 2 never reintroduces.
  for (int i = 0; i < rows; ++i) {
    if (basis[i] < nvar) continue;
    int col = -1;
    for (int j = 0; j < nvar; ++j)
      if (std::abs(t(i, j)) > 1e-7) {
        col = j;
        break;
      }
    if (col >= 0) {
      t.row(i) /= t(i, col);
      for (int k = 0; k < rows; ++k)
        if (k != i) t.row(k) -= t(k, col) * t.row(i);
      basis[i] = col;
    }
  }

  // Phase 2 over the original columns only (artificials priced out).
  Eigen::VectorXd cost2 = Eigen::VectorXd::Zero(nvar + rows);
  cost2.head(nvar) = p.c;
  cost2.tail(rows).setConstant(1e12);  // leftover zero artificials stay parked
  LpStatus s2 = simplex_iterate(t, basis, nvar, cost2, tol, max_iter);
  if (s2 == LpStatus::Unbounded) return {LpStatus::Unbounded, {}, 0.0};
  if (s2 == LpStatus::IterationLimit) return {LpStatus::IterationLimit, {}, 0.0};

  Eigen::VectorXd x = Eigen::VectorXd::Zero(nvar);
  for (int i = 0; i < rows; ++i)
    if (basis[i] < nvar) x(basis[i]) = t(i, nvar + rows);
  return {LpStatus::Optimal, x, p.c.dot(x)};
}

HullLpResult convex_combination(const std::vector<Eigen::VectorXd>& points,
                                const Eigen::VectorXd& w, double tol) {
  if (points.empty()) throw std::invalid_argument("convex_combination: empty point list");
  const int r = static_cast<int>(w.size());
  const int k = static_cast<int>(points.size());
  LpProblem p;
  p.a.resize(r + 1, k);
  for (int i = 0; i < k; ++i) {
    if (points[i].size() != r)
      throw std::invalid_argument("convex_combination: dimension mismatch");
    p.a.block(0, i, r, 1) = points[i];
    p.a(r, i) = 1.0;
  }
  p.b.resize(r + 1);
  p.b.head(r) = w;
  p.b(r) = 1.0;
  p.c = Eigen::VectorXd::Zero(k);
  LpSolution s = solve_lp(p, tol);
  return HullLpResult{s.status == LpStatus::Optimal, s.status == LpStatus::IterationLimit,
                      s.status == LpStatus::Optimal ? s.x : Eigen::VectorXd()};
}

double hull_distance(const std::vector<Eigen::VectorXd>& points, const Eigen::VectorXd& w,
                     int max_iter) {
  if (points.empty()) throw std::invalid_argument("hull_distance: empty point list");
  const int k = static_cast<int>(points.size());
  Eigen::VectorXd lam = Eigen::VectorXd::Constant(k, 1.0 / k);
  Eigen::VectorXd cur = Eigen::VectorXd::Zero(w.size());
  for (int i = 0; i < k; ++i) cur += lam(i) * points[i];
  for (int it = 0; it < max_iter; ++it) {
    const Eigen::VectorXd g = cur - w;
    int best = 0;
    double bestv = points[0].dot(g);
    for (int i = 1; i < k; ++i) {
      const double v = points[i].dot(g);
      if (v < bestv) {
        bestv = v;
        best = i;
      }
    }
    const Eigen::VectorXd dir = points[best] - cur;
    const double denom = dir.squaredNorm();
    if (denom < 1e-18) break;
    double step = -g.dot(dir) / denom;
    step = std::min(1.0, std::max(0.0, step));
    if (step < 1e-15) break;
    cur += step * dir;
    lam *= (1.0 - step);
    lam(best) += step;
  }
  return (cur - w).norm();
}

SupportResult supporting_functional(const std::vector<Eigen::VectorXd>& points, double tol) {
  if (points.empty()) throw std::invalid_argument("supporting_functional: empty point list");
  const int r = static_cast<int>(points[0].size());
  const int k = static_cast<int>(points.size());

  SupportResult best{false, Eigen::VectorXd::Zero(r), -1e300};
  auto consider = [&](const Eigen::VectorXd& lam) {
    double mn = 1e300;
    for (const auto& z : points) mn = std::min(mn, lam.dot(z));
    if (mn > best.min_value) best = SupportResult{mn >= -tol, lam, mn};
  };

  // Face LPs: fix lambda_f = sigma, free coordinates in [-1, 1], maximize s.
  // Variables: u_j in [0,2] (lambda_j = u_j - 1), s = sp - sm, slack w_k.
  for (int f = 0; f < r; ++f) {
    for (double sigma : {1.0, -1.0}) {
      const int nfree = r - 1;
      const int nvar = nfree * 2 + 2 + k;  // u_j, box slacks t_j, sp, sm, w_k
      const int rows = k + nfree;
      Eigen::MatrixXd a = Eigen::MatrixXd::Zero(rows, nvar);
      Eigen::VectorXd b = Eigen::VectorXd::Zero(rows);
      Eigen::VectorXd c = Eigen::VectorXd::Zero(nvar);
      const int sp = nfree * 2, sm = nfree * 2 + 1, w0 = nfree * 2 + 2;
      c(sp) = -1.0;  // maximize s
      c(sm) = 1.0;
      for (int kk = 0; kk < k; ++kk) {
        int uj = 0;
        double shift = 0.0;
        for (int j = 0; j < r; ++j) {
          if (j == f) {
            shift += sigma * points[kk](j);
            continue;
          }
          a(kk, uj) = points[kk](j);
          shift -= points[kk](j);  // from lambda_j = u_j - 1
          ++uj;
        }
        a(kk, sp) = -1.0;
        a(kk, sm) = 1.0;
        a(kk, w0 + kk) = -1.0;
        b(kk) = -shift;
      }
      for (int j = 0; j < nfree; ++j) {  // u_j + t_j = 2
        a(k + j, j) = 1.0;
        a(k + j, nfree + j) = 1.0;
        b(k + j) = 2.0;
      }
      LpSolution s = solve_lp({a, b, c});
      if (s.status != LpStatus::Optimal) continue;
      Eigen::VectorXd lam(r);
      int uj = 0;
      for (int j = 0; j < r; ++j) {
        if (j == f) {
          lam(j) = sigma;
          continue;
        }
        lam(j) = s.x(uj) - 1.0;
        ++uj;
      }
      consider(lam);
    }
  }
  return best;
}

}  // namespace gck

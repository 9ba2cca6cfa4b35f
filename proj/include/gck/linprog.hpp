#pragma once

#include <vector>

#include <Eigen/Dense>

namespace gck {

// Dense two-phase simplex for min c.x subject to A x = b, x >= 0.
// Bland's rule; built for the small exact cross-check problems in this
// library, not for scale.
struct LpProblem {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpSolution {
  LpStatus status;
  Eigen::VectorXd x;
  double objective;
};

LpSolution solve_lp(const LpProblem& p, double tol = 1e-9);

// Exact convex-combination membership: does w lie in conv(points)?
struct HullLpResult {
  bool inside;
  bool degenerate;  // simplex hit its iteration cap
  Eigen::VectorXd weights;
};

HullLpResult convex_combination(const std::vector<Eigen::VectorXd>& points,
                                const Eigen::VectorXd& w, double tol = 1e-9);

// Euclidean distance from w to conv(points) by Frank-Wolfe; a few digits is
// all the callers need.
double hull_distance(const std::vector<Eigen::VectorXd>& points, const Eigen::VectorXd& w,
                     int max_iter = 20000);

// Best supporting functional at the origin: maximize min_k lambda.z_k over
// the faces |lambda_j| = 1 of the unit box. A nonnegative optimum means 0 is
// not interior to conv(points).
struct SupportResult {
  bool found;  // optimum >= -tol
  Eigen::VectorXd lambda;
  double min_value;
};

SupportResult supporting_functional(const std::vector<Eigen::VectorXd>& points,
                                    double tol = 1e-10);

}  // namespace gck

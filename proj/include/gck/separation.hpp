#pragma once

#include "gck/linprog.hpp"
#include "gck/pencil.hpp"

namespace gck {

// Affine-plus-PSD feasibility over a product of Hermitian blocks; solved by
// alternating projections between the affine subspace (least squares) and
// the cone product (eigenvalue clipping).
class BlockSystem {
 public:
  int add_block(int dim, bool psd);
  int block_count() const { return static_cast<int>(dims_.size()); }
  int block_dim(int k) const { return dims_.at(k); }
  bool block_psd(int k) const { return psd_.at(k); }

  // Scalar equation sum_k Re tr(H_k X_k) = rhs.
  void add_equation(std::vector<std::pair<int, Matrix>> terms, double rhs);
  // Hermitian-valued equation expanded entrywise; entry_coef(k, a, b) is the
  // matrix H with tr(H X_k) = the (a, b) entry contribution of block k.
  void add_matrix_equation(const std::vector<int>& blocks,
                           const std::function<Matrix(int, int, int)>& entry_coef,
                           const Matrix& rhs);

  int equation_count() const { return static_cast<int>(rows_.size()); }
  Eigen::VectorXd pack(const std::vector<Matrix>& blocks) const;
  std::vector<Matrix> unpack(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd constraint_matrix() const;  // rows x real-dim
  Eigen::VectorXd rhs() const;

 private:
  struct Row {
    std::vector<std::pair<int, Matrix>> terms;  // Hermitian test matrices
    double rhs;
  };
  std::vector<int> dims_;
  std::vector<bool> psd_;
  std::vector<int> offsets_;  // real-parameter offsets
  int total_dim_ = 0;
  std::vector<Row> rows_;
};

struct PsdFeasibilityResult {
  bool found;
  std::vector<Matrix> blocks;
  double eq_residual;    // ||A x - b||_2 at the returned iterate
  double min_block_eig;  // over PSD-flagged blocks
  int iterations;
};

// NoSolutionFound (found == false) is a budget statement, never a proof of
// infeasibility.
PsdFeasibilityResult psd_feasibility(const BlockSystem& sys, int max_iter,
                                     double tol = tols().eq_residual);

// -- Matrix convex hulls -----------------------------------------------

// Pairwise direct sums Z^i (+) Z^j with total level <= max_level appended to
// the generator list (free-set closure at desk scale).
std::vector<HermitianTuple> augment_pairwise_direct_sums(std::vector<HermitianTuple> gens,
                                                         int max_level = 8);

struct MembershipWitness {
  std::vector<Matrix> choi;        // one PSD block per generator
  std::vector<double> residuals;   // equality residual per coordinate + unitality
};

struct HullMembershipResult {
  bool inside;
  MembershipWitness witness;  // valid when inside
  int iterations;
};

// Is W a unital-CP-map combination of the generators? Solves the Choi-block
// feasibility system with psd_feasibility.
HullMembershipResult hull_membership(const std::vector<HermitianTuple>& generators,
                                     const HermitianTuple& w, double tol = tols().eq_residual,
                                     int max_iter = 100000, bool augment = true);

// Apply the CP map with Choi block c (of an n -> l map) to z.
Matrix apply_choi(const Matrix& c, const Matrix& z, int l);

// Exact classical-hull oracle at level 1 (LP feasibility).
struct Level1Oracle {
  bool inside;
  bool degenerate;
};
Level1Oracle level1_hull_oracle(const std::vector<Eigen::VectorXd>& points,
                                const Eigen::VectorXd& w);

// -- Effros-Winkler separation ------------------------------------------

struct SeparationCertificate {
  LinearPencil pencil;  // monic, size = level of the outlier
  double hull_margin;   // min over generators of min eig of M(Z^i)
  double outlier_eig;   // min eig of M(W)
  double delta;
  int iterations;
};

struct SeparationOutcome {
  bool found;
  SeparationCertificate certificate;  // valid when found
  int iterations;
};

// Projected-subgradient ascent on the penalized dual of hull membership,
// followed by a deterministic Douglas-Rachford refinement at a pinned
// functional value; requires the zero tuple among the generators (it pins
// A_0 >= 0). With extremal set, the pinned value is pushed to its
// feasibility limit so certificates of nearby instances line up.
SeparationOutcome find_separating_pencil(const std::vector<HermitianTuple>& generators,
                                         const HermitianTuple& w, double delta, int budget,
                                         bool extremal = false);

// Fresh-eigendecomposition soundness check of a certificate.
bool verify_certificate(const SeparationCertificate& cert,
                        const std::vector<HermitianTuple>& generators, const HermitianTuple& w);

struct GammaSeparation {
  bool found;
  GammaPencil pencil;       // monic Gamma-pencil, strictified
  double hull_margin;       // min over K samples of min eig of the pencil
  double outlier_eig;       // min eig at Y
  double strictify_t;
  int iterations;
};

// Thm-2.3-flow: map K through Gamma, separate in pencil space, compose back,
// then strictify so the pencil is strictly positive on the samples.
GammaSeparation separate_gamma(const GammaMap& g, const FreeSetSample& k,
                               const HermitianTuple& y, double delta, int budget = 100000,
                               bool extremal = false);

// -- Positive combinations (level-1 geometry) -----------------------------

enum class PositiveCombinationStatus { Found, ZeroInInterior, DegenerateHull };

struct PositiveCombination {
  PositiveCombinationStatus status;
  Eigen::VectorXd lambda;
  FreePoly q;        // sum_j lambda_j gamma_j
  double min_inner;  // min_k lambda . z_k over the input points
};

// If 0 is not interior to conv(points), produce lambda with lambda.z >= 0 on
// all points and the polynomial q = sum lambda_j gamma_j. Coordinate
// directions are tried first (for y^2-type maps they give globally valid
// certificates); the box-face LPs are the general fallback.
PositiveCombination find_positive_polynomial(const GammaMap& g,
                                             const std::vector<Eigen::VectorXd>& level1_points);

}  // namespace gck

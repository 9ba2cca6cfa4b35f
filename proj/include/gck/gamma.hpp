#pragma once

#include <functional>
#include <optional>
#include <string>

#include "gck/ncpoly.hpp"

namespace gck {

// An isometry V: C^m -> C^n, validated at construction.
struct Isometry {
  Matrix v;
  explicit Isometry(Matrix m, double tol = tols().isometry);
  int domain() const { return static_cast<int>(v.cols()); }
  int codomain() const { return static_cast<int>(v.rows()); }
};

// Gamma = (gamma_1, ..., gamma_r): symmetric free polynomials in g variables
// whose first g coordinates are the variables themselves.
class GammaMap {
 public:
  GammaMap(int g, std::vector<FreePoly> coords);
  static GammaMap trivial(int g);  // Gamma(x) = x
  static GammaMap y2();            // {x, y, y^2}
  static GammaMap xy();            // {x, y, xy+yx, i(xy-yx)}
  static GammaMap named(const std::string& name, int g = 2);

  int g() const { return g_; }
  int r() const { return static_cast<int>(coords_.size()); }
  bool vanishes_at_zero() const { return vanishes_at_zero_; }
  const FreePoly& coord(int j) const { return coords_.at(j); }
  const std::string& name() const { return name_; }

  // Phi_Gamma(X) = (gamma_1(X), ..., gamma_r(X)).
  std::vector<Matrix> eval(const HermitianTuple& x) const;

 private:
  int g_;
  std::vector<FreePoly> coords_;
  bool vanishes_at_zero_;
  std::string name_ = "custom";
};

struct PairCheck {
  bool ok;
  double residual;  // max_j ||V* gamma_j(X) V - gamma_j(V*XV)||_F
};

PairCheck is_gamma_pair(const GammaMap& g, const HermitianTuple& x, const Isometry& v,
                        double tol = tols().gamma_pair);

struct Y2PairCheck {
  bool ok;
  double residual;           // Gamma-pair residual for {x, y, y^2}
  double reducing_residual;  // ||(I - VV*) Y V||_F
};

// For Gamma = {x, y, y^2} the pair condition holds iff range(V) reduces Y.
Y2PairCheck is_y2_pair(const Matrix& x, const Matrix& y, const Isometry& v,
                       double tol = tols().gamma_pair);

// For Gamma = {x, y, xy+yx, i(xy-yx)}: true iff V*XYV = (V*XV)(V*YV).
PairCheck is_xy_pair(const Matrix& x, const Matrix& y, const Isometry& v,
                     double tol = tols().gamma_pair);

// Sound Gamma-pair sampler: every returned isometry passes is_gamma_pair at
// the library tolerance. Draws from unitaries, eigenspace inclusions of the
// nonlinear coordinates, averaging isometries on visibly block-diagonal
// inputs, and rejection-filtered random isometries. May return fewer than
// budget.
std::vector<Isometry> sample_gamma_pairs(const GammaMap& g, const HermitianTuple& x,
                                         int budget, std::uint64_t seed);

// A finite sample of a free set, optionally with a membership oracle; all
// stored points must test inside when an oracle is present.
struct FreeSetSample {
  std::vector<HermitianTuple> points;
  std::function<bool(const HermitianTuple&)> oracle;  // may be empty

  FreeSetSample() = default;
  explicit FreeSetSample(std::vector<HermitianTuple> pts,
                         std::function<bool(const HermitianTuple&)> orc = nullptr);
  int width() const;
};

// Points of the Gamma-convex hull of K: compressions V*XV of direct sums of
// K-points over sampled Gamma-pairs.
FreeSetSample gamma_hull_sample(const GammaMap& g, const FreeSetSample& k, int budget,
                                std::uint64_t seed);

struct ConvexityWitness {
  HermitianTuple x;
  Matrix v;
  double gap;  // most negative eigenvalue observed
};

struct ConvexityReport {
  bool counterexample_found;
  std::optional<ConvexityWitness> witness;
  int trials_run;
};

// Randomized falsification of Gamma-convexity of a symmetric matrix
// polynomial: looks for a Gamma-pair with
// (I (x) V)* p(X) (I (x) V) - p(V*XV) not PSD. "No counterexample" is never
// a proof.
ConvexityReport check_gamma_convex(const MatrixPoly& p, const GammaMap& g, int trials,
                                   std::uint64_t seed);

// Randomized falsification of the concomitant equality
// (I (x) V)* f(X) (I (x) V) = f(V*XV) over sampled Gamma-pairs.
ConvexityReport check_concomitant(const MatrixPoly& f, const GammaMap& g, int trials,
                                  std::uint64_t seed);

}  // namespace gck

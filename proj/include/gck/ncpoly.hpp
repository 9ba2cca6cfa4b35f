#pragma once

#include <map>
#include <string>
#include <vector>

#include "gck/numerics.hpp"

namespace gck {

// A word in noncommuting symmetric variables x_1..x_g, stored as 0-based
// letter indices; the empty word is the unit.
struct Word {
  std::vector<int> letters;

  static Word unit() { return Word{}; }
  static Word var(int j) { return Word{{j}}; }

  bool empty() const { return letters.empty(); }
  std::size_t length() const { return letters.size(); }
  Word reversed() const;
  Word concat(const Word& w) const;
  int max_letter() const;  // -1 for the unit

  // Canonical order: by (length, lexicographic).
  bool operator<(const Word& w) const;
  bool operator==(const Word& w) const { return letters == w.letters; }
};

// (wu)* = u* w* with x_j* = x_j: the involution reverses letters.
Word word_involution(const Word& w);

class HermitianTuple;

// Scalar-coefficient free polynomial p = sum_w p_w w.
class FreePoly {
 public:
  explicit FreePoly(int nvars);
  static FreePoly constant(int nvars, Cx c);
  static FreePoly variable(int nvars, int j);  // x_j, 0-based

  int nvars() const { return nvars_; }
  const std::map<Word, Cx>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  Cx coeff(const Word& w) const;
  void set_coeff(const Word& w, Cx c);  // erases exact zeros

  FreePoly adjoint() const;
  bool is_symmetric() const;  // exact coefficient comparison

  FreePoly operator+(const FreePoly& q) const;
  FreePoly operator-(const FreePoly& q) const;
  FreePoly operator*(const FreePoly& q) const;
  FreePoly scaled(Cx c) const;
  bool operator==(const FreePoly& q) const;

  // p(X) = sum_w p_w w(X), an n x n matrix.
  Matrix eval(const HermitianTuple& x) const;

  std::string to_string() const;  // debug display, x1 x2 ...

 private:
  int nvars_;
  std::map<Word, Cx> terms_;
};

// Matrix-coefficient free polynomial; evaluation uses coefficient (x) word,
// p(X) = sum_w p_w (x) w(X).
class MatrixPoly {
 public:
  MatrixPoly(int nvars, int size);
  static MatrixPoly from_scalar(const FreePoly& p);  // size 1

  int nvars() const { return nvars_; }
  int size() const { return size_; }
  const std::map<Word, Matrix>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  Matrix coeff(const Word& w) const;
  void set_coeff(const Word& w, const Matrix& c);

  MatrixPoly adjoint() const;
  bool is_symmetric() const;

  MatrixPoly operator+(const MatrixPoly& q) const;
  MatrixPoly operator-(const MatrixPoly& q) const;
  MatrixPoly operator*(const MatrixPoly& q) const;  // sizes must be compatible
  MatrixPoly scaled(Cx c) const;
  bool operator==(const MatrixPoly& q) const;

  Matrix eval(const HermitianTuple& x) const;  // (size*n) x (size*n)

 private:
  int nvars_;
  int size_;
  std::map<Word, Matrix> terms_;
};

// A point X in S_n(C)^g. Entries must be Hermitian within the construction
// tolerance; violating inputs are rejected, never symmetrized silently.
class HermitianTuple {
 public:
  explicit HermitianTuple(std::vector<Matrix> entries,
                          double rel_tol = tols().hermitian_input);
  static HermitianTuple zero(int width, int level);
  // Deliberate projection (M + M*)/2 for matrices carrying numerical drift;
  // rejects anything further than drift_tol from Hermitian.
  static HermitianTuple symmetrized(std::vector<Matrix> entries,
                                    double drift_tol = 1e-6);

  int width() const { return static_cast<int>(entries_.size()); }
  int level() const { return level_; }
  const Matrix& entry(int j) const { return entries_.at(j); }
  const std::vector<Matrix>& entries() const { return entries_; }

  HermitianTuple direct_sum(const HermitianTuple& other) const;
  HermitianTuple compressed(const Matrix& v) const;  // V* X_j V entrywise
  HermitianTuple scaled(double t) const;
  double norm() const;  // max over entries of operator norm

 private:
  HermitianTuple() = default;
  int level_ = 0;
  std::vector<Matrix> entries_;
};

// Evaluate a word on a tuple: product of the selected entries.
Matrix eval_word(const Word& w, const HermitianTuple& x);

}  // namespace gck

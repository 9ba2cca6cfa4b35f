#include "gck/ncpoly.hpp"

#include <algorithm>
#include <sstream>

namespace gck {

Word Word::reversed() const {
  Word w = *this;
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

Word Word::concat(const Word& w) const {
  Word out = *this;
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  return out;
}

int Word::max_letter() const {
  int m = -1;
  for (int l : letters) m = std::max(m, l);
  return m;
}

bool Word::operator<(const Word& w) const {
  if (letters.size() != w.letters.size()) return letters.size() < w.letters.size();
  return letters < w.letters;
}

Word word_involution(const Word& w) { return w.reversed(); }

// -- FreePoly ----------------------------------------------------------

FreePoly::FreePoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw std::invalid_argument("FreePoly: nvars must be positive");
}

FreePoly FreePoly::constant(int nvars, Cx c) {
  FreePoly p(nvars);
  p.set_coeff(Word::unit(), c);
  return p;
}

FreePoly FreePoly::variable(int nvars, int j) {
  if (j < 0 || j >= nvars) throw std::invalid_argument("FreePoly::variable: index out of range");
  FreePoly p(nvars);
  p.set_coeff(Word::var(j), Cx(1.0, 0.0));
  return p;
}

int FreePoly::degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.length()));
  return d;
}

Cx FreePoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Cx(0.0) : it->second;
}

void FreePoly::set_coeff(const Word& w, Cx c) {
  if (w.max_letter() >= nvars_) throw std::invalid_argument("FreePoly: word exceeds nvars");
  if (c == Cx(0.0))
    terms_.erase(w);
  else
    terms_[w] = c;
}

FreePoly FreePoly::adjoint() const {
  FreePoly out(nvars_);
  for (const auto& [w, c] : terms_) out.set_coeff(word_involution(w), std::conj(c));
  return out;
}

bool FreePoly::is_symmetric() const { return *this == adjoint(); }

FreePoly FreePoly::operator+(const FreePoly& q) const {
  if (nvars_ != q.nvars_) throw std::invalid_argument("FreePoly: nvars mismatch");
  FreePoly out = *this;
  for (const auto& [w, c] : q.terms_) out.set_coeff(w, out.coeff(w) + c);
  return out;
}

FreePoly FreePoly::operator-(const FreePoly& q) const { return *this + q.scaled(Cx(-1.0)); }

FreePoly FreePoly::operator*(const FreePoly& q) const {
  if (nvars_ != q.nvars_) throw std::invalid_argument("FreePoly: nvars mismatch");
  FreePoly out(nvars_);
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : q.terms_) {
      const Word w = w1.concat(w2);
      out.set_coeff(w, out.coeff(w) + c1 * c2);
    }
  return out;
}

FreePoly FreePoly::scaled(Cx c) const {
  FreePoly out(nvars_);
  for (const auto& [w, v] : terms_) out.set_coeff(w, c * v);
  return out;
}

bool FreePoly::operator==(const FreePoly& q) const {
  return nvars_ == q.nvars_ && terms_ == q.terms_;
}

Matrix FreePoly::eval(const HermitianTuple& x) const {
  if (nvars_ != x.width()) throw std::invalid_argument("FreePoly::eval: width mismatch");
  const int n = x.level();
  Matrix out = Matrix::Zero(n, n);
  for (const auto& [w, c] : terms_) out += c * eval_word(w, x);
  return out;
}

std::string FreePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    for (int l : w.letters) os << " x" << (l + 1);
  }
  return os.str();
}

// -- MatrixPoly ---------------------------------------------------------

MatrixPoly::MatrixPoly(int nvars, int size) : nvars_(nvars), size_(size) {
  if (nvars < 1 || size < 1) throw std::invalid_argument("MatrixPoly: bad dimensions");
}

MatrixPoly MatrixPoly::from_scalar(const FreePoly& p) {
  MatrixPoly out(p.nvars(), 1);
  for (const auto& [w, c] : p.terms()) {
    Matrix m(1, 1);
    m(0, 0) = c;
    out.set_coeff(w, m);
  }
  return out;
}

int MatrixPoly::degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.length()));
  return d;
}

Matrix MatrixPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Matrix::Zero(size_, size_) : it->second;
}

void MatrixPoly::set_coeff(const Word& w, const Matrix& c) {
  if (w.max_letter() >= nvars_) throw std::invalid_argument("MatrixPoly: word exceeds nvars");
  if (c.rows() != size_ || c.cols() != size_)
    throw std::invalid_argument("MatrixPoly: coefficient size mismatch");
  if (c.isZero(0.0))
    terms_.erase(w);
  else
    terms_[w] = c;
}

MatrixPoly MatrixPoly::adjoint() const {
  MatrixPoly out(nvars_, size_);
  for (const auto& [w, c] : terms_) out.set_coeff(word_involution(w), c.adjoint());
  return out;
}

bool MatrixPoly::is_symmetric() const { return *this == adjoint(); }

MatrixPoly MatrixPoly::operator+(const MatrixPoly& q) const {
  if (nvars_ != q.nvars_ || size_ != q.size_)
    throw std::invalid_argument("MatrixPoly: dimension mismatch");
  MatrixPoly out = *this;
  for (const auto& [w, c] : q.terms_) out.set_coeff(w, out.coeff(w) + c);
  return out;
}

MatrixPoly MatrixPoly::operator-(const MatrixPoly& q) const { return *this + q.scaled(Cx(-1.0)); }

MatrixPoly MatrixPoly::operator*(const MatrixPoly& q) const {
  if (nvars_ != q.nvars_) throw std::invalid_argument("MatrixPoly: nvars mismatch");
  if (size_ != q.size_) throw std::invalid_argument("MatrixPoly: coefficient sizes incompatible");
  MatrixPoly out(nvars_, size_);
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : q.terms_) {
      const Word w = w1.concat(w2);
      out.set_coeff(w, out.coeff(w) + c1 * c2);
    }
  return out;
}

MatrixPoly MatrixPoly::scaled(Cx c) const {
  MatrixPoly out(nvars_, size_);
  for (const auto& [w, v] : terms_) out.set_coeff(w, c * v);
  return out;
}

bool MatrixPoly::operator==(const MatrixPoly& q) const {
  if (nvars_ != q.nvars_ || size_ != q.size_ || terms_.size() != q.terms_.size()) return false;
  for (const auto& [w, c] : terms_) {
    auto it = q.terms_.find(w);
    if (it == q.terms_.end() || it->second != c) return false;
  }
  return true;
}

Matrix MatrixPoly::eval(const HermitianTuple& x) const {
  if (nvars_ != x.width()) throw std::invalid_argument("MatrixPoly::eval: width mismatch");
  const int n = x.level();
  Matrix out = Matrix::Zero(size_ * n, size_ * n);
  for (const auto& [w, c] : terms_) out += kron(c, eval_word(w, x));
  return out;
}

// -- HermitianTuple ------------------------------------------------------

HermitianTuple::HermitianTuple(std::vector<Matrix> entries, double rel_tol) {
  if (entries.empty()) throw std::invalid_argument("HermitianTuple: empty tuple");
  level_ = static_cast<int>(entries.front().rows());
  for (const Matrix& m : entries) {
    if (m.rows() != level_ || m.cols() != level_)
      throw std::invalid_argument("HermitianTuple: entries must be square of equal size");
    if (!is_hermitian(m, rel_tol))
      throw std::invalid_argument("HermitianTuple: entry is not Hermitian within tolerance");
  }
  entries_ = std::move(entries);
}

HermitianTuple HermitianTuple::zero(int width, int level) {
  return HermitianTuple(std::vector<Matrix>(width, Matrix::Zero(level, level)));
}

HermitianTuple HermitianTuple::symmetrized(std::vector<Matrix> entries, double drift_tol) {
  for (Matrix& m : entries) {
    if (!is_hermitian(m, drift_tol))
      throw std::invalid_argument("HermitianTuple::symmetrized: drift beyond tolerance");
    m = hermitize(m);
  }
  return HermitianTuple(std::move(entries));
}

HermitianTuple HermitianTuple::direct_sum(const HermitianTuple& other) const {
  if (width() != other.width()) throw std::invalid_argument("direct_sum: width mismatch");
  std::vector<Matrix> out;
  out.reserve(entries_.size());
  for (int j = 0; j < width(); ++j) {
    Matrix m = Matrix::Zero(level_ + other.level_, level_ + other.level_);
    m.topLeftCorner(level_, level_) = entries_[j];
    m.bottomRightCorner(other.level_, other.level_) = other.entries_[j];
    out.push_back(std::move(m));
  }
  return HermitianTuple(std::move(out));
}

HermitianTuple HermitianTuple::compressed(const Matrix& v) const {
  if (v.rows() != level_) throw std::invalid_argument("compressed: isometry row mismatch");
  std::vector<Matrix> out;
  out.reserve(entries_.size());
  for (const Matrix& m : entries_) out.push_back(hermitize(v.adjoint() * m * v));
  return HermitianTuple(std::move(out));
}

HermitianTuple HermitianTuple::scaled(double t) const {
  std::vector<Matrix> out;
  out.reserve(entries_.size());
  for (const Matrix& m : entries_) out.push_back(t * m);
  return HermitianTuple(std::move(out));
}

double HermitianTuple::norm() const {
  double m = 0.0;
  for (const Matrix& e : entries_) m = std::max(m, op_norm(e));
  return m;
}

Matrix eval_word(const Word& w, const HermitianTuple& x) {
  const int n = x.level();
  Matrix out = Matrix::Identity(n, n);
  for (int l : w.letters) out = out * x.entry(l);
  return out;
}

}  // namespace gck

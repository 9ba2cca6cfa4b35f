#include "gck/serialize.hpp"

#include <sstream>

namespace gck {

Json to_json(const Cx& c) { return Json::array({c.real(), c.imag()}); }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const HermitianTuple& t) {
  Json entries = Json::array();
  for (const Matrix& m : t.entries()) entries.push_back(to_json(m));
  return Json{{"level", t.level()}, {"entries", std::move(entries)}};
}

namespace {

Json word_to_json(const Word& w) {
  Json out = Json::array();
  for (int l : w.letters) out.push_back(l + 1);  // 1-based on the wire
  return out;
}

Word word_from_json(const Json& j) {
  Word w;
  for (const auto& v : j) {
    const int idx = v.get<int>();
    if (idx < 1) throw std::invalid_argument("word: indices are 1-based");
    w.letters.push_back(idx - 1);
  }
  return w;
}

}  // namespace

Json to_json(const FreePoly& p) {
  Json terms = Json::array();
  for (const auto& [w, c] : p.terms())
    terms.push_back(Json{{"word", word_to_json(w)}, {"coeff", to_json(c)}});
  return terms;
}

Json to_json(const MatrixPoly& p) {
  Json terms = Json::array();
  for (const auto& [w, c] : p.terms())
    terms.push_back(Json{{"word", word_to_json(w)}, {"coeff", to_json(c)}});
  return terms;
}

Json to_json(const GammaMap& g) {
  if (g.name() != "custom") return Json(g.name());
  Json coords = Json::array();
  for (int j = 0; j < g.r(); ++j) coords.push_back(to_json(g.coord(j)));
  return coords;
}

Json to_json(const GammaPencil& l) {
  Json coeffs = Json::array();
  for (const Matrix& a : l.coeffs()) coeffs.push_back(to_json(a));
  return Json{{"gamma", to_json(l.gmap())}, {"size", l.size()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const LinearPencil& l) {
  Json coeffs = Json::array();
  for (const Matrix& a : l.coeffs) coeffs.push_back(to_json(a));
  return Json{{"nvars", l.nvars}, {"size", l.size()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const FreeSetSample& s) {
  Json pts = Json::array();
  for (const HermitianTuple& p : s.points) pts.push_back(to_json(p));
  return Json{{"points", std::move(pts)}};
}

Json to_json(const XYPencil& l) {
  return Json{{"size", l.size()},
              {"A", to_json(l.a)},
              {"B", to_json(l.b)},
              {"C", to_json(l.c)}};
}

Json to_json(const SeparationCertificate& c) {
  return Json{{"pencil", to_json(c.pencil)},
              {"hull_margin", c.hull_margin},
              {"outlier_eig", c.outlier_eig},
              {"delta", c.delta},
              {"iterations", c.iterations}};
}

Json to_json(const GammaSeparation& s) {
  return Json{{"found", s.found},
              {"pencil", to_json(s.pencil)},
              {"hull_margin", s.hull_margin},
              {"outlier_eig", s.outlier_eig},
              {"strictify_t", s.strictify_t},
              {"iterations", s.iterations}};
}

Cx cx_from_json(const Json& j) {
  if (j.is_number()) return Cx(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("complex: expected [re, im]");
  return Cx(j[0].get<double>(), j[1].get<double>());
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix: expected rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols)
      throw std::invalid_argument("matrix: ragged rows");
    for (int k = 0; k < cols; ++k) m(i, k) = cx_from_json(j[i][k]);
  }
  return m;
}

HermitianTuple tuple_from_json(const Json& j) {
  if (!j.contains("entries")) throw std::invalid_argument("tuple: missing entries");
  std::vector<Matrix> entries;
  for (const auto& e : j["entries"]) entries.push_back(matrix_from_json(e));
  HermitianTuple t(std::move(entries));
  if (j.contains("level") && j["level"].get<int>() != t.level())
    throw std::invalid_argument("tuple: level field disagrees with entries");
  return t;
}

namespace {

int infer_nvars(const Json& terms, int hint) {
  int n = hint;
  for (const auto& t : terms)
    for (const auto& idx : t.at("word")) n = std::max(n, idx.get<int>());
  return std::max(n, 1);
}

}  // namespace

FreePoly freepoly_from_json(const Json& j, int nvars_hint) {
  FreePoly p(infer_nvars(j, nvars_hint));
  for (const auto& t : j)
    p.set_coeff(word_from_json(t.at("word")), p.coeff(word_from_json(t.at("word"))) +
                                                  cx_from_json(t.at("coeff")));
  return p;
}

MatrixPoly matrixpoly_from_json(const Json& j, int nvars_hint) {
  const int nvars = infer_nvars(j, nvars_hint);
  int size = 1;
  for (const auto& t : j) {
    const Json& c = t.at("coeff");
    if (c.is_array() && !c.empty() && c[0].is_array() && !c[0].empty() && c[0][0].is_array())
      size = static_cast<int>(c.size());
  }
  MatrixPoly p(nvars, size);
  for (const auto& t : j) {
    const Json& c = t.at("coeff");
    Matrix m;
    if (c.is_array() && !c.empty() && c[0].is_array() && !c[0].empty() && c[0][0].is_array()) {
      m = matrix_from_json(c);
    } else {
      m = Matrix(1, 1);
      m(0, 0) = cx_from_json(c);
    }
    const Word w = word_from_json(t.at("word"));
    p.set_coeff(w, p.coeff(w) + m);
  }
  return p;
}

GammaMap gammamap_from_json(const Json& j, int g_hint) {
  if (j.is_string()) return GammaMap::named(j.get<std::string>(), g_hint > 0 ? g_hint : 2);
  std::vector<FreePoly> raw;
  int nvars = g_hint;
  for (const auto& c : j) nvars = infer_nvars(c, nvars);
  for (const auto& c : j) raw.push_back(freepoly_from_json(c, nvars));
  int g = 0;
  for (int jj = 0; jj < static_cast<int>(raw.size()) && jj < nvars; ++jj) {
    if (raw[jj] == FreePoly::variable(nvars, jj))
      g = jj + 1;
    else
      break;
  }
  return GammaMap(g, std::move(raw));
}

GammaPencil gammapencil_from_json(const Json& j) {
  std::vector<Matrix> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(matrix_from_json(c));
  const int r = static_cast<int>(coeffs.size()) - 1;
  GammaMap g = j.at("gamma").is_string() && j.at("gamma").get<std::string>() == "x"
                   ? GammaMap::trivial(r)
                   : gammamap_from_json(j.at("gamma"));
  return GammaPencil(std::move(g), std::move(coeffs));
}

LinearPencil linearpencil_from_json(const Json& j) {
  std::vector<Matrix> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(matrix_from_json(c));
  return LinearPencil(j.at("nvars").get<int>(), std::move(coeffs));
}

FreeSetSample freesetsample_from_json(const Json& j) {
  std::vector<HermitianTuple> pts;
  for (const auto& p : j.at("points")) pts.push_back(tuple_from_json(p));
  return FreeSetSample(std::move(pts));
}

XYPencil xypencil_from_json(const Json& j) {
  return XYPencil(matrix_from_json(j.at("A")), matrix_from_json(j.at("B")),
                  matrix_from_json(j.at("C")));
}

// -- LaTeX ----------------------------------------------------------------

namespace {

std::string format_real(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::string format_coeff(const Cx& c) {
  if (c.imag() == 0.0) return format_real(c.real());
  if (c.real() == 0.0) return format_real(c.imag()) + "i";
  return "(" + format_real(c.real()) + (c.imag() > 0 ? "+" : "") + format_real(c.imag()) + "i)";
}

std::vector<std::string> gamma_symbols(const GammaMap& g) {
  if (g.name() == "y2") return {"x", "y", "y^2"};
  if (g.name() == "xy") return {"x", "y", "(xy+yx)", "i(xy-yx)"};
  std::vector<std::string> out;
  for (int j = 0; j < g.r(); ++j) {
    std::ostringstream os;
    if (j < g.g())
      os << "x_{" << (j + 1) << "}";
    else
      os << "\\gamma_{" << (j + 1) << "}";
    out.push_back(os.str());
  }
  return out;
}

std::string entry_string(const GammaPencil& l, int i, int j,
                         const std::vector<std::string>& symbols) {
  std::ostringstream os;
  bool any = false;
  const Cx c0 = l.coeff(0)(i, j);
  if (c0 != Cx(0.0)) {
    os << format_coeff(c0);
    any = true;
  }
  for (int k = 1; k <= l.gmap().r(); ++k) {
    const Cx c = l.coeff(k)(i, j);
    if (c == Cx(0.0)) continue;
    if (any) os << " + ";
    if (c != Cx(1.0)) os << format_coeff(c) << " ";
    os << symbols[k - 1];
    any = true;
  }
  return any ? os.str() : "0";
}

}  // namespace

std::string emit_latex(const GammaPencil& l) {
  const auto symbols = gamma_symbols(l.gmap());
  std::ostringstream os;
  os << "\\begin{pmatrix}\n";
  for (int i = 0; i < l.size(); ++i) {
    for (int j = 0; j < l.size(); ++j) {
      os << entry_string(l, i, j, symbols);
      if (j + 1 < l.size()) os << " & ";
    }
    if (i + 1 < l.size()) os << " \\\\";
    os << "\n";
  }
  os << "\\end{pmatrix}";
  return os.str();
}

std::string emit_latex(const XYPencil& l) { return emit_latex(l.to_gamma_pencil()); }

}  // namespace gck

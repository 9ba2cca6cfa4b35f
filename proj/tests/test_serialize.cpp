#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gck/report.hpp"
#include "gck/serialize.hpp"

using namespace gck;

namespace {

HermitianTuple random_pair(int n, RngStream& rng) {
  return HermitianTuple({random_hermitian(n, 1.0, rng), random_hermitian(n, 1.0, rng)});
}

}  // namespace

TEST_CASE("complex and matrix round trips") {
  const Cx c(1.25, -0.5);
  CHECK(cx_from_json(to_json(c)) == c);

  RngStream rng(91);
  const Matrix m = random_hermitian(3, 0.0, rng);
  const Matrix back = matrix_from_json(to_json(m));
  CHECK((m - back).norm() == 0.0);  // bit-exact: doubles survive json round trip
}

TEST_CASE("tuple round trip and level validation") {
  RngStream rng(92);
  const HermitianTuple t = random_pair(3, rng);
  const HermitianTuple back = tuple_from_json(to_json(t));
  CHECK(back.level() == 3);
  for (int j = 0; j < 2; ++j) CHECK((back.entry(j) - t.entry(j)).norm() == 0.0);

  Json j = to_json(t);
  j["level"] = 5;
  CHECK_THROWS_AS(tuple_from_json(j), std::invalid_argument);
}

TEST_CASE("polynomial round trip uses 1-based word indices") {
  FreePoly p(2);
  p.set_coeff(Word{{0, 1, 1}}, Cx(2, 1));
  p.set_coeff(Word::unit(), Cx(-1, 0));
  const Json j = to_json(p);
  bool found_word = false;
  for (const auto& t : j)
    if (t["word"].size() == 3) {
      CHECK(t["word"][0] == 1);
      CHECK(t["word"][1] == 2);
      CHECK(t["word"][2] == 2);
      found_word = true;
    }
  CHECK(found_word);
  const FreePoly back = freepoly_from_json(j);
  CHECK(back == p);

  // matrix polynomial with 2x2 coefficients; the term list alone cannot name
  // trailing unused variables, so the reader takes an nvars hint
  MatrixPoly mp(2, 2);
  RngStream rng(93);
  mp.set_coeff(Word{{0}}, random_hermitian(2, 0.0, rng));
  mp.set_coeff(Word::unit(), Matrix::Identity(2, 2));
  const MatrixPoly mback = matrixpoly_from_json(to_json(mp), 2);
  CHECK(mback == mp);
}

TEST_CASE("gamma map round trip") {
  for (const GammaMap& g : {GammaMap::y2(), GammaMap::xy()}) {
    const Json j = to_json(g);
    CHECK(j.is_string());
    const GammaMap back = gammamap_from_json(j);
    CHECK(back.r() == g.r());
    for (int k = 0; k < g.r(); ++k) CHECK(back.coord(k) == g.coord(k));
  }

  // custom map serializes inline and survives
  FreePoly x = FreePoly::variable(1, 0);
  const GammaMap custom(1, {x, x * x * x + x});
  const Json j = to_json(custom);
  CHECK(j.is_array());
  const GammaMap back = gammamap_from_json(j);
  CHECK(back.g() == 1);
  CHECK(back.r() == 2);
  CHECK(back.coord(1) == custom.coord(1));
}

TEST_CASE("pencil json round trips bit-exactly") {
  for (int d : {1, 2, 3}) {
    const GammaPencil l = tv_pencil(d);
    const GammaPencil back = gammapencil_from_json(to_json(l));
    CHECK(back.size() == l.size());
    for (int j = 0; j <= l.gmap().r(); ++j)
      CHECK((back.coeff(j) - l.coeff(j)).norm() == 0.0);
  }
  const GammaPencil e3 = tv_pencil_explicit(3);
  const Json j = to_json(e3);
  CHECK(j["gamma"] == "y2");
  CHECK(j["size"] == 4);
  const GammaPencil back = gammapencil_from_json(j);
  RngStream rng(94);
  const HermitianTuple x = random_pair(2, rng);
  CHECK((back.eval(x) - e3.eval(x)).norm() == 0.0);
}

TEST_CASE("xy pencil json round trip") {
  RngStream rng(95);
  const XYPencil l(random_hermitian(2, 0.0, rng), random_hermitian(2, 0.0, rng),
                   Matrix(random_hermitian(2, 0.0, rng) +
                          Cx(0, 1) * random_hermitian(2, 0.0, rng)));
  const XYPencil back = xypencil_from_json(to_json(l));
  CHECK((back.a - l.a).norm() == 0.0);
  CHECK((back.b - l.b).norm() == 0.0);
  CHECK((back.c - l.c).norm() == 0.0);
}

TEST_CASE("free set sample round trip") {
  RngStream rng(96);
  FreeSetSample s({random_pair(1, rng), random_pair(2, rng)});
  const FreeSetSample back = freesetsample_from_json(to_json(s));
  CHECK(back.points.size() == 2);
  CHECK(back.points[1].level() == 2);
}

TEST_CASE("latex emission") {
  const std::string dg = emit_latex(degenerate_pencil());
  CHECK(dg.find("y^2") != std::string::npos);
  CHECK(dg.find("pmatrix") != std::string::npos);

  const std::string l3 = emit_latex(tv_pencil_explicit(3));
  CHECK(l3.find("x") != std::string::npos);
  CHECK(l3.find("0.25") != std::string::npos);
}

TEST_CASE("run report schema") {
  RunReport rep;
  rep.command = "gck verify-identity --d 3";
  rep.seed = 7;
  rep.add("check-a", true, 0.5);
  rep.add("check-b", false, -0.25, "margin below threshold");
  CHECK_FALSE(rep.all_pass());
  const Json j = rep.to_json();
  CHECK(j["command"] == "gck verify-identity --d 3");
  CHECK(j["seed"] == 7);
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][1]["pass"] == false);
  CHECK(j["tolerances"].contains("boundary_band"));
  CHECK(j["tolerances"]["boundary_band"] == 1e-6);
  // schema fields stable across subcommands
  for (const char* key : {"command", "seed", "tolerances", "checks", "wall_ms", "artifacts"})
    CHECK(j.contains(key));
}

TEST_CASE("malformed json is rejected with invalid_argument") {
  CHECK_THROWS_AS(matrix_from_json(Json::array()), std::invalid_argument);
  CHECK_THROWS_AS(cx_from_json(Json::array({1.0})), std::invalid_argument);
  Json ragged = Json::array();
  ragged.push_back(Json::array({Json::array({1.0, 0.0}), Json::array({2.0, 0.0})}));
  ragged.push_back(Json::array({Json::array({1.0, 0.0})}));
  CHECK_THROWS_AS(matrix_from_json(ragged), std::invalid_argument);
}

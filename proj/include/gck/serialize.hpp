#pragma once

#include <string>

#include <json.hpp>

#include "gck/bmi.hpp"

namespace gck {

using Json = nlohmann::json;

// Complex scalars are [re, im]; matrices are row-major lists of such pairs;
// word indices are 1-based on the wire.
Json to_json(const Cx& c);
Json to_json(const Matrix& m);
Json to_json(const HermitianTuple& t);
Json to_json(const FreePoly& p);
Json to_json(const MatrixPoly& p);
Json to_json(const GammaMap& g);
Json to_json(const GammaPencil& l);
Json to_json(const LinearPencil& l);
Json to_json(const FreeSetSample& s);
Json to_json(const XYPencil& l);
Json to_json(const SeparationCertificate& c);
Json to_json(const GammaSeparation& s);

Cx cx_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
HermitianTuple tuple_from_json(const Json& j);
FreePoly freepoly_from_json(const Json& j, int nvars_hint = 0);
MatrixPoly matrixpoly_from_json(const Json& j, int nvars_hint = 0);
GammaMap gammamap_from_json(const Json& j, int g_hint = 0);
GammaPencil gammapencil_from_json(const Json& j);
LinearPencil linearpencil_from_json(const Json& j);
FreeSetSample freesetsample_from_json(const Json& j);
XYPencil xypencil_from_json(const Json& j);

// Display-only LaTeX rendering of a pencil as a matrix of entry polynomials.
std::string emit_latex(const GammaPencil& l);
std::string emit_latex(const XYPencil& l);

}  // namespace gck

// Python bindings for the main operations: polynomial evaluation, Gamma
// machinery, TV pencils, semialgebraic membership, separation and the BMI
// limit flow. Matrices cross the boundary as complex numpy arrays.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gck/report.hpp"
#include "gck/serialize.hpp"

namespace py = pybind11;
using namespace gck;

namespace {

FreePoly poly_from_terms(int nvars, const std::vector<std::pair<std::vector<int>, Cx>>& terms) {
  FreePoly p(nvars);
  for (const auto& [letters, coeff] : terms) {
    Word w;
    for (int idx : letters) {
      if (idx < 1 || idx > nvars) throw std::invalid_argument("word indices are 1-based");
      w.letters.push_back(idx - 1);
    }
    p.set_coeff(w, p.coeff(w) + coeff);
  }
  return p;
}

}  // namespace

PYBIND11_MODULE(_gck, m) {
  m.doc() = "Gamma-convexity toolkit: free polynomials, TV pencils, separation";

  py::class_<Word>(m, "Word")
      .def(py::init<>())
      .def_readwrite("letters", &Word::letters)
      .def("reversed", &Word::reversed);
  m.def("word_involution", &word_involution);

  py::class_<HermitianTuple>(m, "HermitianTuple")
      .def(py::init<std::vector<Matrix>, double>(), py::arg("entries"),
           py::arg("rel_tol") = tols().hermitian_input)
      .def_static("zero", &HermitianTuple::zero)
      .def_static("symmetrized", &HermitianTuple::symmetrized, py::arg("entries"),
                  py::arg("drift_tol") = 1e-6)
      .def_property_readonly("level", &HermitianTuple::level)
      .def_property_readonly("width", &HermitianTuple::width)
      .def("entry", &HermitianTuple::entry)
      .def("entries", &HermitianTuple::entries)
      .def("direct_sum", &HermitianTuple::direct_sum)
      .def("compressed", &HermitianTuple::compressed)
      .def("scaled", &HermitianTuple::scaled)
      .def("norm", &HermitianTuple::norm);

  py::class_<FreePoly>(m, "FreePoly")
      .def(py::init(&poly_from_terms), py::arg("nvars"), py::arg("terms"))
      .def_static("variable", &FreePoly::variable)
      .def_static("constant", &FreePoly::constant)
      .def_property_readonly("nvars", &FreePoly::nvars)
      .def("degree", &FreePoly::degree)
      .def("adjoint", &FreePoly::adjoint)
      .def("is_symmetric", &FreePoly::is_symmetric)
      .def("eval", &FreePoly::eval)
      .def("__add__", &FreePoly::operator+)
      .def("__sub__", &FreePoly::operator-)
      .def("__mul__", &FreePoly::operator*)
      .def("scaled", &FreePoly::scaled)
      .def("__eq__", &FreePoly::operator==)
      .def("__repr__", &FreePoly::to_string);

  py::class_<MatrixPoly>(m, "MatrixPoly")
      .def_static("from_scalar", &MatrixPoly::from_scalar)
      .def_property_readonly("nvars", &MatrixPoly::nvars)
      .def_property_readonly("size", &MatrixPoly::size)
      .def("degree", &MatrixPoly::degree)
      .def("adjoint", &MatrixPoly::adjoint)
      .def("is_symmetric", &MatrixPoly::is_symmetric)
      .def("eval", &MatrixPoly::eval)
      .def("scaled", &MatrixPoly::scaled);

  py::class_<Isometry>(m, "Isometry")
      .def(py::init<Matrix, double>(), py::arg("matrix"), py::arg("tol") = tols().isometry)
      .def_readonly("v", &Isometry::v);

  py::class_<GammaMap>(m, "GammaMap")
      .def_static("trivial", &GammaMap::trivial)
      .def_static("y2", &GammaMap::y2)
      .def_static("xy", &GammaMap::xy)
      .def_static("named", &GammaMap::named, py::arg("name"), py::arg("g") = 2)
      .def_property_readonly("g", &GammaMap::g)
      .def_property_readonly("r", &GammaMap::r)
      .def_property_readonly("vanishes_at_zero", &GammaMap::vanishes_at_zero)
      .def("coord", &GammaMap::coord)
      .def("eval", &GammaMap::eval);

  py::class_<PairCheck>(m, "PairCheck")
      .def_readonly("ok", &PairCheck::ok)
      .def_readonly("residual", &PairCheck::residual);
  py::class_<Y2PairCheck>(m, "Y2PairCheck")
      .def_readonly("ok", &Y2PairCheck::ok)
      .def_readonly("residual", &Y2PairCheck::residual)
      .def_readonly("reducing_residual", &Y2PairCheck::reducing_residual);

  m.def("is_gamma_pair", &is_gamma_pair, py::arg("gamma"), py::arg("x"), py::arg("v"),
        py::arg("tol") = tols().gamma_pair);
  m.def("is_y2_pair", &is_y2_pair, py::arg("x"), py::arg("y"), py::arg("v"),
        py::arg("tol") = tols().gamma_pair);
  m.def("is_xy_pair", &is_xy_pair, py::arg("x"), py::arg("y"), py::arg("v"),
        py::arg("tol") = tols().gamma_pair);
  m.def("sample_gamma_pairs", &sample_gamma_pairs);

  py::class_<FreeSetSample>(m, "FreeSetSample")
      .def(py::init<std::vector<HermitianTuple>, std::function<bool(const HermitianTuple&)>>(),
           py::arg("points"), py::arg("oracle") = nullptr)
      .def_readonly("points", &FreeSetSample::points);
  m.def("gamma_hull_sample", &gamma_hull_sample);

  py::class_<ConvexityWitness>(m, "ConvexityWitness")
      .def_readonly("x", &ConvexityWitness::x)
      .def_readonly("v", &ConvexityWitness::v)
      .def_readonly("gap", &ConvexityWitness::gap);
  py::class_<ConvexityReport>(m, "ConvexityReport")
      .def_readonly("counterexample_found", &ConvexityReport::counterexample_found)
      .def_readonly("witness", &ConvexityReport::witness)
      .def_readonly("trials_run", &ConvexityReport::trials_run);
  m.def("check_gamma_convex", &check_gamma_convex);
  m.def("check_concomitant", &check_concomitant);

  py::class_<LinearPencil>(m, "LinearPencil")
      .def(py::init<int, std::vector<Matrix>>())
      .def_readonly("nvars", &LinearPencil::nvars)
      .def_readonly("coeffs", &LinearPencil::coeffs)
      .def("eval", py::overload_cast<const HermitianTuple&>(&LinearPencil::eval, py::const_));

  py::class_<GammaPencil>(m, "GammaPencil")
      .def(py::init<GammaMap, std::vector<Matrix>>())
      .def_property_readonly("size", &GammaPencil::size)
      .def_property_readonly("gmap", &GammaPencil::gmap)
      .def("coeff", &GammaPencil::coeff)
      .def("monic", &GammaPencil::monic, py::arg("tol") = tols().hermitian_input)
      .def("eval", &GammaPencil::eval)
      .def("to_matrix_poly", &GammaPencil::to_matrix_poly);

  m.def("eval_pencil", &eval_pencil);
  m.def("min_eig_at", &min_eig_at);
  m.def("make_monic", &make_monic);
  m.def("compose_with_gamma", &compose_with_gamma);
  m.def("strictify", &strictify);
  m.def("tv_recipe_telescoping_ok", [](int d) {
    const TVRecipe r = tv_recipe(d);
    for (std::size_t k = 0; k + 2 < r.alpha.size(); ++k)
      if (std::abs(r.alpha[k] * r.alpha[k] - 2 * r.alpha[k + 1] * r.alpha[k + 1] +
                   r.alpha[k + 2] * r.alpha[k + 2]) > 1e-12)
        return false;
    return true;
  });
  m.def("verify_tv_identity", &verify_tv_identity);
  m.def("tv_pencil", &tv_pencil);
  m.def("tv_pencil_raw", &tv_pencil_raw);
  m.def("tv_pencil_explicit", &tv_pencil_explicit);
  m.def("degenerate_pencil", &degenerate_pencil);

  py::enum_<Region>(m, "Region")
      .value("StrictlyInside", Region::StrictlyInside)
      .value("BoundaryBand", Region::BoundaryBand)
      .value("Outside", Region::Outside);
  py::class_<Membership>(m, "Membership")
      .def_readonly("verdict", &Membership::verdict)
      .def_readonly("margin", &Membership::margin)
      .def_readonly("band", &Membership::band);
  m.def("tv_defining_poly", &tv_defining_poly);
  m.def("membership",
        py::overload_cast<const MatrixPoly&, const HermitianTuple&, double>(&membership),
        py::arg("p"), py::arg("x"), py::arg("band") = tols().boundary_band);
  m.def("boundary_crossing", &boundary_crossing, py::arg("p"), py::arg("x"),
        py::arg("t_max") = 8.0);

  py::class_<EqualityReport>(m, "EqualityReport")
      .def_readonly("agreements", &EqualityReport::agreements)
      .def_readonly("disagreements", &EqualityReport::disagreements)
      .def_readonly("band_skipped", &EqualityReport::band_skipped);
  m.def("check_pencil_poly_equality", &check_pencil_poly_equality);

  py::class_<SeparationCertificate>(m, "SeparationCertificate")
      .def_readonly("pencil", &SeparationCertificate::pencil)
      .def_readonly("hull_margin", &SeparationCertificate::hull_margin)
      .def_readonly("outlier_eig", &SeparationCertificate::outlier_eig)
      .def_readonly("delta", &SeparationCertificate::delta)
      .def_readonly("iterations", &SeparationCertificate::iterations);
  py::class_<SeparationOutcome>(m, "SeparationOutcome")
      .def_readonly("found", &SeparationOutcome::found)
      .def_readonly("certificate", &SeparationOutcome::certificate)
      .def_readonly("iterations", &SeparationOutcome::iterations);
  m.def("find_separating_pencil", &find_separating_pencil, py::arg("generators"), py::arg("w"),
        py::arg("delta"), py::arg("budget"), py::arg("extremal") = false);
  m.def("verify_certificate", &verify_certificate);

  py::class_<MembershipWitness>(m, "MembershipWitness")
      .def_readonly("choi", &MembershipWitness::choi)
      .def_readonly("residuals", &MembershipWitness::residuals);
  py::class_<HullMembershipResult>(m, "HullMembershipResult")
      .def_readonly("inside", &HullMembershipResult::inside)
      .def_readonly("witness", &HullMembershipResult::witness)
      .def_readonly("iterations", &HullMembershipResult::iterations);
  m.def("hull_membership", &hull_membership, py::arg("generators"), py::arg("w"),
        py::arg("tol") = tols().eq_residual, py::arg("max_iter") = 100000,
        py::arg("augment") = true);
  m.def("level1_hull_oracle",
        [](const std::vector<Eigen::VectorXd>& pts, const Eigen::VectorXd& w) {
          return level1_hull_oracle(pts, w).inside;
        });
  m.def("hull_distance", &hull_distance, py::arg("points"), py::arg("w"),
        py::arg("max_iter") = 20000);

  py::class_<GammaSeparation>(m, "GammaSeparation")
      .def_readonly("found", &GammaSeparation::found)
      .def_readonly("pencil", &GammaSeparation::pencil)
      .def_readonly("hull_margin", &GammaSeparation::hull_margin)
      .def_readonly("outlier_eig", &GammaSeparation::outlier_eig)
      .def_readonly("strictify_t", &GammaSeparation::strictify_t)
      .def_readonly("iterations", &GammaSeparation::iterations);
  m.def("separate_gamma", &separate_gamma, py::arg("gamma"), py::arg("k"), py::arg("y"),
        py::arg("delta"), py::arg("budget") = 100000, py::arg("extremal") = false);

  py::enum_<PositiveCombinationStatus>(m, "PositiveCombinationStatus")
      .value("Found", PositiveCombinationStatus::Found)
      .value("ZeroInInterior", PositiveCombinationStatus::ZeroInInterior)
      .value("DegenerateHull", PositiveCombinationStatus::DegenerateHull);
  py::class_<PositiveCombination>(m, "PositiveCombination")
      .def_readonly("status", &PositiveCombination::status)
      .def_readonly("lam", &PositiveCombination::lambda)
      .def_readonly("q", &PositiveCombination::q)
      .def_readonly("min_inner", &PositiveCombination::min_inner);
  m.def("find_positive_polynomial", &find_positive_polynomial);

  py::class_<XYPencil>(m, "XYPencil")
      .def(py::init<Matrix, Matrix, Matrix>())
      .def_readonly("a", &XYPencil::a)
      .def_readonly("b", &XYPencil::b)
      .def_readonly("c", &XYPencil::c)
      .def("eval", py::overload_cast<const HermitianTuple&>(&XYPencil::eval, py::const_))
      .def("to_gamma_pencil", &XYPencil::to_gamma_pencil)
      .def_static("from_gamma_pencil", &XYPencil::from_gamma_pencil);
  m.def("bmi_test_points", &bmi_test_points);
  py::class_<CoefficientBoundCheck>(m, "CoefficientBoundCheck")
      .def_readonly("psd_on_points", &CoefficientBoundCheck::psd_on_points)
      .def_readonly("bounds_hold", &CoefficientBoundCheck::bounds_hold)
      .def_readonly("norm_a", &CoefficientBoundCheck::norm_a)
      .def_readonly("norm_b", &CoefficientBoundCheck::norm_b)
      .def_readonly("norm_c_plus", &CoefficientBoundCheck::norm_c_plus)
      .def_readonly("norm_c_minus", &CoefficientBoundCheck::norm_c_minus)
      .def_readonly("failing_point", &CoefficientBoundCheck::failing_point);
  m.def("check_coefficient_bound", &check_coefficient_bound);
  m.def("bmi_epsilon_for", &bmi_epsilon_for, py::arg("p"),
        py::arg("margin") = tols().bmi_point_margin);
  py::enum_<BoundaryLimitStatus>(m, "BoundaryLimitStatus")
      .value("Converged", BoundaryLimitStatus::Converged)
      .value("BoundViolation", BoundaryLimitStatus::BoundViolation)
      .value("NotCauchy", BoundaryLimitStatus::NotCauchy)
      .value("SeparationFailed", BoundaryLimitStatus::SeparationFailed);
  py::class_<BoundaryLimit>(m, "BoundaryLimit")
      .def_readonly("status", &BoundaryLimit::status)
      .def_readonly("pencil", &BoundaryLimit::pencil)
      .def_readonly("coeff_norms", &BoundaryLimit::coeff_norms)
      .def_readonly("cauchy_gap", &BoundaryLimit::cauchy_gap)
      .def_readonly("steps_used", &BoundaryLimit::steps_used)
      .def_readonly("boundary_eig", &BoundaryLimit::boundary_eig);
  m.def("boundary_pencil_limit", &boundary_pencil_limit);

  // numerics helpers
  m.def("kron", &kron);
  m.def("psd_project", &psd_project);
  m.def("schur_complement", &schur_complement);
  m.def("min_eig", &min_eig);

  // JSON bridges (strings on the wire)
  m.def("pencil_to_json", [](const GammaPencil& l) { return to_json(l).dump(); });
  m.def("pencil_from_json",
        [](const std::string& s) { return gammapencil_from_json(Json::parse(s)); });
  m.def("pencil_to_latex", [](const GammaPencil& l) { return emit_latex(l); });
  m.def("tuple_to_json", [](const HermitianTuple& t) { return to_json(t).dump(); });
  m.def("tuple_from_json", [](const std::string& s) { return tuple_from_json(Json::parse(s)); });
}

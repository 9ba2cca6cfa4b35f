#include "gck/report.hpp"

namespace gck {

void RunReport::add(const std::string& name, bool pass, double margin,
                    const std::string& details) {
  checks.push_back(CheckLine{name, pass, margin, details});
}

bool RunReport::all_pass() const {
  for (const CheckLine& c : checks)
    if (!c.pass) return false;
  return true;
}

Json tolerances_to_json(const Tolerances& t) {
  return Json{{"hermitian_input", t.hermitian_input},
              {"isometry", t.isometry},
              {"eig_residual", t.eig_residual},
              {"pd_pivot", t.pd_pivot},
              {"eval_sym", t.eval_sym},
              {"eval_exact", t.eval_exact},
              {"gamma_pair", t.gamma_pair},
              {"convexity_gap", t.convexity_gap},
              {"concomitant_resid", t.concomitant_resid},
              {"boundary_band", t.boundary_band},
              {"strict_pd", t.strict_pd},
              {"psd_witness", t.psd_witness},
              {"eq_residual", t.eq_residual},
              {"hull_margin", t.hull_margin},
              {"cauchy_gap", t.cauchy_gap},
              {"bmi_point_margin", t.bmi_point_margin}};
}

Json RunReport::to_json() const {
  Json cj = Json::array();
  for (const CheckLine& c : checks)
    cj.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"margin", c.margin},
                      {"details", c.details}});
  return Json{{"command", command},
              {"seed", seed},
              {"tolerances", tolerances_to_json(tols())},
              {"checks", std::move(cj)},
              {"wall_ms", wall_ms},
              {"artifacts", artifacts}};
}

}  // namespace gck

#pragma once

#include <string>
#include <vector>

#include "gck/serialize.hpp"

namespace gck {

// Machine-readable record of a CLI run: a run is reproducible from the
// embedded command, seed and tolerances alone.
struct CheckLine {
  std::string name;
  bool pass;
  double margin;
  std::string details;
};

struct RunReport {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<CheckLine> checks;
  double wall_ms = 0.0;
  std::vector<std::string> artifacts;

  void add(const std::string& name, bool pass, double margin, const std::string& details = "");
  bool all_pass() const;
  Json to_json() const;  // embeds the tolerance record
};

Json tolerances_to_json(const Tolerances& t);

}  // namespace gck

#ifndef VGEOM_REPORT_HPP
#define VGEOM_REPORT_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "vgeom/incidence.hpp"

namespace vgeom {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Named list of pass/fail checks produced by a verification routine.
struct Report {
  std::string title;
  std::vector<Check> checks;
  std::optional<GQParameters> gq;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  const Check* first_failure() const {
    auto it = std::find_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; });
    return it == checks.end() ? nullptr : &*it;
  }
};

}  // namespace vgeom

#endif  // VGEOM_REPORT_HPP

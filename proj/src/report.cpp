#include "hofib/report.hpp"

#include <sstream>

namespace hofib {

void ValidationReport::absorb(const ValidationReport& other) {
  for (auto v : other.schema_errors) {
    v.instance = other.subject + ":" + v.instance;
    schema_errors.push_back(std::move(v));
  }
  for (auto v : other.violations) {
    v.instance = other.subject + ":" + v.instance;
    violations.push_back(std::move(v));
  }
}

std::string ValidationReport::summary(std::size_t max_lines) const {
  std::ostringstream os;
  os << subject << ": ";
  if (ok()) {
    os << "valid";
    return os.str();
  }
  os << schema_errors.size() << " schema error(s), " << violations.size()
     << " axiom violation(s)";
  std::size_t shown = 0;
  for (const auto& v : schema_errors) {
    if (shown++ >= max_lines) break;
    os << "\n  [schema] " << v.axiom << " @ " << v.instance;
  }
  for (const auto& v : violations) {
    if (shown++ >= max_lines) break;
    os << "\n  [axiom] " << v.axiom << " @ " << v.instance;
    if (!v.lhs.empty() || !v.rhs.empty()) os << ": " << v.lhs << " != " << v.rhs;
  }
  return os.str();
}

}  // namespace hofib

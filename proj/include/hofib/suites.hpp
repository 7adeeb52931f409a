#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hofib/corpus.hpp"

namespace hofib::wb {

struct SuiteOptions {
  int seed = 0;
  std::size_t max_cells = 200000;
  int jobs = 1;
  std::string inject;  // fault injection hook for tests ("pentagon")
};

struct CheckResult {
  std::string name;
  std::string law;  // the algebraic statement the check verifies
  bool pass = false;
  std::string details;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  int failed() const {
    int n = 0;
    for (const auto& c : checks)
      if (!c.pass) ++n;
    return n;
  }
  bool ok() const { return failed() == 0; }
};

// Suites: axioms, comma, nerve, appendix, xmod, mv, monoidal, all.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

nlohmann::json report_json(const SuiteResult& r, const SuiteOptions& opt);

std::vector<std::string> suite_names();

}  // namespace hofib::wb

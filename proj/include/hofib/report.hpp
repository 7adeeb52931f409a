#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hofib/ids.hpp"

namespace hofib {

// One failed axiom instance. `instance` is the key of the offending tuple
// (e.g. the quadruple of a pentagon failure), `lhs`/`rhs` the two cell ids
// that should have agreed.
struct Violation {
  std::string axiom;
  std::string instance;
  std::string lhs;
  std::string rhs;
};

enum class ValidationStatus { Valid, Invalid, ResourceLimited };

// Schema errors (malformed tables, dangling ids) are kept apart from axiom
// failures: a structure has to be well-formed before its axioms mean
// anything.
struct ValidationReport {
  Id subject;
  std::vector<Violation> schema_errors;
  std::vector<Violation> violations;

  bool ok() const { return schema_errors.empty() && violations.empty(); }
  ValidationStatus status() const {
    return ok() ? ValidationStatus::Valid : ValidationStatus::Invalid;
  }

  void schema(std::string axiom, std::string instance, std::string lhs = "",
              std::string rhs = "") {
    schema_errors.push_back(
        {std::move(axiom), std::move(instance), std::move(lhs), std::move(rhs)});
  }
  void fail(std::string axiom, std::string instance, std::string lhs = "",
            std::string rhs = "") {
    violations.push_back(
        {std::move(axiom), std::move(instance), std::move(lhs), std::move(rhs)});
  }
  // Merges `other` into this report, prefixing instances with its subject.
  void absorb(const ValidationReport& other);

  std::string summary(std::size_t max_lines = 8) const;
};

// Enumeration guard: raised when a construction would exceed the configured
// candidate ceiling. Callers turn this into an explicit resource error,
// never into silence.
struct ResourceLimitError : std::runtime_error {
  std::size_t limit;
  explicit ResourceLimitError(const std::string& what, std::size_t lim)
      : std::runtime_error(what), limit(lim) {}
};

// Schema violation found while reading an interchange file; `pointer` is a
// JSON pointer to the offending field.
struct SchemaError : std::runtime_error {
  std::string pointer;
  SchemaError(const std::string& what, std::string ptr)
      : std::runtime_error(what + " (at " + ptr + ")"), pointer(std::move(ptr)) {}
};

}  // namespace hofib

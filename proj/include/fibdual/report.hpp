#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fibdual {

// One rule violation found by a validator. `ids` lists the offending
// object/arrow ids in the order the rule names them.
struct ValidationIssue {
  std::string rule;
  std::vector<std::int32_t> ids;
  std::string message;
};

// Violations are report entries, not failures: validators never throw on
// bad tables, they enumerate everything that is wrong.
struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  void add(std::string rule, std::vector<std::int32_t> ids, std::string message);
  bool has_rule(const std::string& rule) const;
  const ValidationIssue* find(const std::string& rule,
                              const std::vector<std::int32_t>& ids) const;
  std::string to_string() const;
};

}  // namespace fibdual

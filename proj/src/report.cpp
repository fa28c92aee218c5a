#include "fibdual/report.hpp"

#include <sstream>

namespace fibdual {

void ValidationReport::add(std::string rule, std::vector<std::int32_t> ids,
                           std::string message) {
  issues.push_back({std::move(rule), std::move(ids), std::move(message)});
}

bool ValidationReport::has_rule(const std::string& rule) const {
  for (const auto& issue : issues) {
    if (issue.rule == rule) return true;
  }
  return false;
}

const ValidationIssue* ValidationReport::find(
    const std::string& rule, const std::vector<std::int32_t>& ids) const {
  for (const auto& issue : issues) {
    if (issue.rule == rule && issue.ids == ids) return &issue;
  }
  return nullptr;
}

std::string ValidationReport::to_string() const {
  if (issues.empty()) return "ok\n";
  std::ostringstream out;
  for (const auto& issue : issues) {
    out << issue.rule << " [";
    for (std::size_t i = 0; i < issue.ids.size(); ++i) {
      if (i > 0) out << ", ";
      out << issue.ids[i];
    }
    out << "]: " << issue.message << '\n';
  }
  return out.str();
}

}  // namespace fibdual

#ifndef FRAMEDIL_REPORT_HPP
#define FRAMEDIL_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace framedil {

/// One named residual check inside a verification report.
struct Check {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string detail;
};

/// Result of re-checking a certificate (or a multiplier, a representation...).
/// Verifiers add one Check per invariant so a failure always has a name.
struct Report {
  std::vector<Check> checks;

  void add(std::string name, double residual, double threshold,
           std::string detail = {}) {
    checks.push_back(Check{std::move(name), residual, threshold,
                           residual <= threshold, std::move(detail)});
  }

  void add_flag(std::string name, bool ok, std::string detail = {}) {
    checks.push_back(
        Check{std::move(name), ok ? 0.0 : 1.0, 0.5, ok, std::move(detail)});
  }

  void merge(const Report &other, const std::string &prefix = {}) {
    for (const auto &c : other.checks) {
      checks.push_back(c);
      if (!prefix.empty()) checks.back().name = prefix + c.name;
    }
  }

  bool pass() const {
    for (const auto &c : checks)
      if (!c.pass) return false;
    return true;
  }

  double max_residual() const {
    double m = 0.0;
    for (const auto &c : checks) m = std::max(m, c.residual);
    return m;
  }

  const Check *find(std::string_view name) const {
    for (const auto &c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  std::vector<std::string> failing_names() const {
    std::vector<std::string> out;
    for (const auto &c : checks)
      if (!c.pass) out.push_back(c.name);
    return out;
  }
};

} // namespace framedil

#endif

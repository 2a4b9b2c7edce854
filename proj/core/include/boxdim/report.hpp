#pragma once

#include <string>
#include <vector>

namespace boxdim {

struct Violation {
  std::string code;    // short machine-checkable tag, e.g. "c1", "edge-uncovered"
  std::string detail;  // human-readable witness
};

// Verification outcome. Violations are data, not exceptions: verifiers
// always run to completion and report every witness they find.
struct Report {
  std::vector<Violation> violations;
  std::vector<std::string> notes;  // non-fatal remarks ("declared, unverified")

  bool ok() const { return violations.empty(); }

  void fail(std::string code, std::string detail) {
    violations.push_back({std::move(code), std::move(detail)});
  }
  void note(std::string text) { notes.push_back(std::move(text)); }

  bool has(const std::string& code) const {
    for (const auto& v : violations)
      if (v.code == code) return true;
    return false;
  }

  std::string summary() const {
    if (ok()) return "ok";
    std::string s;
    for (const auto& v : violations) {
      s += v.code;
      s += ": ";
      s += v.detail;
      s += '\n';
    }
    return s;
  }
};

}  // namespace boxdim

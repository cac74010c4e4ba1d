#pragma once

#include <string>
#include <vector>

namespace permfact {

/// Outcome of an exhaustive verification: ok plus the offending cases.
struct CheckReport {
  bool ok = true;
  std::vector<std::string> issues;

  void fail(std::string issue) {
    ok = false;
    if (issues.size() < kMaxIssues) issues.push_back(std::move(issue));
  }
  explicit operator bool() const { return ok; }

  static constexpr std::size_t kMaxIssues = 50;
};

}  // namespace permfact

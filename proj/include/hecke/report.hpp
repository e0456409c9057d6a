#pragma once

// Named pass/fail check records collected by the verification routines.

#include <string>
#include <utility>
#include <vector>

namespace hecke {

enum class CheckStatus { pass, fail, expected_fail };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string witness;

  bool ok() const { return status != CheckStatus::fail; }
  std::string status_name() const {
    switch (status) {
      case CheckStatus::pass: return "PASS";
      case CheckStatus::fail: return "FAIL";
      case CheckStatus::expected_fail: return "XFAIL";
    }
    return "FAIL";
  }
};

class Report {
 public:
  void add(std::string name, bool passed, std::string witness = {}) {
    checks_.push_back({std::move(name), passed ? CheckStatus::pass : CheckStatus::fail, std::move(witness)});
  }
  /// A check whose expected outcome is negative; it fails only if the negative is not observed.
  void add_expected_negative(std::string name, bool negative_observed, std::string witness = {}) {
    checks_.push_back(
        {std::move(name), negative_observed ? CheckStatus::expected_fail : CheckStatus::fail, std::move(witness)});
  }
  void append(const Report& other) { checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end()); }

  const std::vector<CheckResult>& checks() const { return checks_; }
  bool all_ok() const {
    for (const auto& c : checks_)
      if (!c.ok()) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks_) n += c.ok() ? 0 : 1;
    return n;
  }

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace hecke

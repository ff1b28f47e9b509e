#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace uvr {

enum class Suite { identities, oracle, containment, powerdef };

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 10000;          // starlike/convex sample count per radius
  std::optional<double> tol_override;  // replaces each check's default tolerance
};

/// One verification check: worst observed residual against its tolerance,
/// with the first failing input echoed for reproduction.
struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;
  double tol = 0.0;
  std::string detail;  // first failing case, empty when passed
};

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& opt);
std::vector<CheckResult> run_all_suites(const VerifyOptions& opt);

}  // namespace uvr

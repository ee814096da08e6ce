#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ordlim/config.hpp"

namespace ordlim {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Cross-validates the fast algorithms against brute-force enumeration,
/// the finite MSO checker and membership filtering. Deterministic.
std::vector<CheckResult> run_checks(const Config& config = {});

void write_checks(std::ostream& out, const std::vector<CheckResult>& results, OutputFormat format);

}  // namespace ordlim

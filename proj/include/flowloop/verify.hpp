#pragma once

#include <string>
#include <vector>

namespace flowloop {

struct CheckResult {
  std::string suite;
  std::string property;
  bool passed = false;
  std::string detail;  // first mismatch, empty on success
};

/// ring, lawrence, verma, zhat, template.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all".  Exceptions raised inside a
/// property count as failures.  Throws InputError for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& name);

}  // namespace flowloop

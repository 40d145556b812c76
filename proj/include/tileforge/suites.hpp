#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tileforge/io.hpp"

namespace tileforge {

struct SuiteParams {
  int m_max = 12;       // partition suite, d = 3
  int m_max_high = 4;   // partition suite, d = 4 and 5
  std::vector<int> tower_n{5, 7};
  std::uint64_t seed = 1;
  int oracle_cases = 200;
  bool scaled = false;  // gadgets suite also realizes the 3x gadgets
};

struct SuiteFailure {
  std::string case_name;
  std::string detail;
  std::string repro;  // CLI command that reruns the suite
};

struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::vector<SuiteFailure> failures;
  double seconds = 0;

  bool ok() const { return failures.empty(); }
  Json to_json() const;
};

const std::vector<std::string>& suite_names();

// Throws Error for an unknown name or out-of-range parameters.
SuiteReport run_suite(const std::string& name, const SuiteParams& params = {});

}  // namespace tileforge

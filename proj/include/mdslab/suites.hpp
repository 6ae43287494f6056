#pragma once

#include <string>
#include <vector>

#include "mdslab/report.hpp"

namespace mdslab {

struct SuiteConfig {
  int n = 2;
  int q0 = 5;
  int bound = 4;  // entry-sum bound for coefficient tuples
  int trunc = 8;  // total-degree truncation for residue series
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs one suite ("axioms", "fe", "residue", "partitions" or "all"); the report
/// order is fixed by the suite definition. Throws std::invalid_argument on an unknown name.
std::vector<CheckReport> run_suite(const std::string& suite, const SuiteConfig& cfg);

}  // namespace mdslab

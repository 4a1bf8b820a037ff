#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace itree::cli {

// One checked quantity. `sense` says how bound_achieved must compare to
// bound_required: ">=", "<=", "<" or "==".
struct BenchRow {
  std::string instance;
  std::string algorithm;
  int n = 0;
  int r = 0;
  double bound_required = 0.0;
  double bound_achieved = 0.0;
  std::string sense = ">=";
  bool verified = false;
  long long time_ms = 0;
};

// Signed margin of a row in the direction of its check; negative means the
// check failed.
double slack(const BenchRow& row);

const std::vector<std::string>& suite_names();

// Rows come back in a fixed instance order for a given seed.
std::vector<BenchRow> run_suite(const std::string& suite, std::uint64_t seed);

}  // namespace itree::cli

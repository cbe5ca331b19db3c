#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qac/io.hpp"

namespace qac {

// How a check's residual is compared with its tolerance.
enum class Bound {
  AtMost,   // pass iff max residual <= tolerance
  AtLeast,  // pass iff max residual >= tolerance (witness checks)
};

struct CheckRecord {
  std::string name;
  std::uint64_t trials = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  Bound bound = Bound::AtMost;
  bool pass = false;
};

struct VerifyOptions {
  std::string suite;
  std::vector<int> dims;
  std::uint64_t trials = 50;
  std::uint64_t seed = 0;
  std::uint64_t samples = 10000;  // Monte-Carlo draws per estimate
  std::uint64_t mc_states = 5;    // trials that also run a Monte-Carlo estimate
  int workers = 1;
};

struct VerifyReport {
  std::string suite;
  std::vector<int> dims;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::vector<CheckRecord> checks;
  bool pass = false;
};

const std::vector<std::string>& suite_names();

// Throws qac::Error(InvalidArgument) for unknown suites or dims outside the caps.
VerifyReport run_suite(const VerifyOptions& options);

// Stable, versioned schema; contains nothing that varies between runs.
io::json report_to_json(const VerifyReport& report);

}  // namespace qac

#pragma once

// The verification harness: each suite checks one family of identities by
// comparing two independent computations, and records every mismatch.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "twc/json_io.hpp"

namespace twc {

struct Failure {
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

struct VerifyReport {
  std::string suite;
  long cases = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;
  double seconds = 0;

  bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
  /// Bound on Sergeev levels; the combinatorial suites never go below their
  /// own defaults (10 for path counts, 8 for coherence and Petrov).
  int n_max = 5;
  /// Degree cutoff for Γ-side checks.
  int cutoff = 8;
  std::uint64_t seed = 1;
};

/// In acceptance order.
const std::vector<std::string> &suite_names();

/// Throws std::invalid_argument for an unknown suite.
VerifyReport run_suite(const std::string &name, const VerifyOptions &options);
/// "all" expands to every suite.
std::vector<VerifyReport> run_verify(const std::set<std::string> &suites, const VerifyOptions &options);

Json to_json(const VerifyReport &report);

}  // namespace twc

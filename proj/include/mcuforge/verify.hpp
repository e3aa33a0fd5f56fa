#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mcuforge/su2.hpp"

namespace mcuforge {

struct VerifyOptions {
  int n_max = 12;            // statevector checks cover n in [10, n_max]
  int trials = 50;           // random targets per n, in addition to X
  std::uint64_t seed = 11;
  bool check_lowered = false;  // also compare lowered circuits for n <= 9
  int lowered_trials = 5;
  int states_per_n = 20;     // random statevectors per n above the dense range
  double unitary_tol = 1e-9;
  double state_tol = 1e-8;
  RootBranch branch = RootBranch::kPrincipal;
};

struct VerifyFailure {
  int n = 0;
  std::uint64_t u_seed = 0;
  double error = 0.0;
  std::string stage;
};

struct VerifyReport {
  bool passed = true;
  std::map<int, double> worst_error_by_n;
  std::vector<VerifyFailure> failures;
};

/// Runs the oracle suite: full-unitary comparison of the decomposition against
/// the brute-force C^nU for n <= 9, statevector comparison above that, and
/// optionally the same for lowered circuits. No global-phase allowance
/// anywhere.
VerifyReport verify_decomposition(const VerifyOptions& options);

}  // namespace mcuforge

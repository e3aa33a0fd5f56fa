#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcuforge/circuit.hpp"
#include "mcuforge/sim.hpp"
#include "mcuforge/su2.hpp"

namespace mcuforge {

/// One proof-of-principle run: the probability of reading all ones, alongside
/// the depth/count profile of the executed circuit.
struct ExperimentResult {
  int n = 0;
  double p_ones = 0.0;
  std::uint64_t shots = 0;
  int depth_controlled = 0;
  int depth_lowered = 0;
  std::int64_t cx_count = 0;
  double noise_p = 0.0;
};

inline constexpr std::uint64_t kDefaultShotsA = 50000;
inline constexpr std::uint64_t kDefaultShotsB = 32000;

/// |⟨1...1| C^nX |1...10⟩|²: X on wires 0..n-1, then the C^nX decomposition,
/// lowered to {CX, 1q}.
Circuit build_experiment_a(int n);

/// |⟨1...1| C^nU (I ⊗ U†) |1...1⟩|²: X on every wire, U† on the target, then
/// the C^nU decomposition, lowered.
Circuit build_experiment_b(int n, const Unitary2& u);

ExperimentResult run_experiment_a(int n, const NoiseSpec& noise, std::uint64_t shots = kDefaultShotsA);
ExperimentResult run_experiment_b(int n, const Unitary2& u, const NoiseSpec& noise,
                                  std::uint64_t shots = kDefaultShotsB);

/// "n,p_ones,shots,depth_controlled,depth_lowered,cx_count,noise_p"
std::string experiments_csv(const std::vector<ExperimentResult>& rows);

/// One depth-scaling row: measured depths/counts plus the closed-form
/// reference columns.
struct BenchRow {
  int n = 0;
  int depth_controlled = 0;
  int depth_lowered = 0;
  std::int64_t cx_count = 0;
  std::int64_t count_formula = 0;
  int depth_formula = 0;
};

/// Per n in [n_min, n_max], schedules the decomposition for `trials` random
/// SU(2) targets and reports the (target-independent) depths. Requires
/// 3 <= n_min <= n_max.
std::vector<BenchRow> depth_scaling_table(int n_min, int n_max, int trials,
                                          std::uint64_t seed = 7);

/// "n,depth_controlled,depth_lowered,cx_count,count_formula,depth_formula"
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace mcuforge

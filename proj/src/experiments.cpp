#include "mcuforge/experiments.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "mcuforge/ldd.hpp"
#include "mcuforge/rng.hpp"

namespace mcuforge {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Unlowered experiment (a): |1...10⟩ preparation followed by C^nX.
Circuit experiment_a_raw(int n) {
  if (n < 1) throw std::invalid_argument("experiment a: n must be >= 1");
  Circuit c(n + 1, "experiment-a n=" + std::to_string(n));
  for (int w = 0; w < n; ++w) c.add(Gate::one_qubit(Unitary2::pauli_x(), w));
  c.append(build_cnu({n, Unitary2::pauli_x()}));
  return c;
}

// Unlowered experiment (b): |1...1⟩ preparation, U† on the target, then C^nU.
Circuit experiment_b_raw(int n, const Unitary2& u) {
  if (n < 1) throw std::invalid_argument("experiment b: n must be >= 1");
  Circuit c(n + 1, "experiment-b n=" + std::to_string(n));
  for (int w = 0; w <= n; ++w) c.add(Gate::one_qubit(Unitary2::pauli_x(), w));
  c.add(Gate::one_qubit(adjoint(u), n));
  c.append(build_cnu({n, u}));
  return c;
}

ExperimentResult run_raw(const Circuit& raw, int n, const NoiseSpec& noise, std::uint64_t shots) {
  DepthReport report = schedule_asap(raw);
  Circuit lowered = lower_controlled(raw);
  Histogram h = run_noisy(lowered, Statevector(raw.width()), noise, shots);
  ExperimentResult r;
  r.n = n;
  r.p_ones = h.probability_all_ones();
  r.shots = shots;
  r.depth_controlled = report.depth_controlled;
  r.depth_lowered = report.depth_lowered;
  r.cx_count = report.count_cx;
  r.noise_p = noise.p;
  return r;
}

}  // namespace

Circuit build_experiment_a(int n) { return lower_controlled(experiment_a_raw(n)); }

Circuit build_experiment_b(int n, const Unitary2& u) {
  return lower_controlled(experiment_b_raw(n, u));
}

ExperimentResult run_experiment_a(int n, const NoiseSpec& noise, std::uint64_t shots) {
  return run_raw(experiment_a_raw(n), n, noise, shots);
}

ExperimentResult run_experiment_b(int n, const Unitary2& u, const NoiseSpec& noise,
                                  std::uint64_t shots) {
  return run_raw(experiment_b_raw(n, u), n, noise, shots);
}

std::string experiments_csv(const std::vector<ExperimentResult>& rows) {
  std::ostringstream out;
  out << "n,p_ones,shots,depth_controlled,depth_lowered,cx_count,noise_p\n";
  for (const ExperimentResult& r : rows)
    out << r.n << "," << fmt_double(r.p_ones) << "," << r.shots << "," << r.depth_controlled
        << "," << r.depth_lowered << "," << r.cx_count << "," << fmt_double(r.noise_p) << "\n";
  return out.str();
}

std::vector<BenchRow> depth_scaling_table(int n_min, int n_max, int trials, std::uint64_t seed) {
  if (n_min < 3 || n_min > n_max)
    throw std::invalid_argument("depth_scaling_table: requires 3 <= n_min <= n_max");
  if (trials < 1) throw std::invalid_argument("depth_scaling_table: trials must be >= 1");
  std::vector<BenchRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (int n = n_min; n <= n_max; ++n) {
    BenchRow row;
    row.n = n;
    for (int t = 0; t < trials; ++t) {
      Unitary2 u = random_su2(mix_seed(seed, static_cast<std::uint64_t>(n),
                                       static_cast<std::uint64_t>(t)));
      DepthReport report = schedule_asap(build_cnu({n, u}));
      if (t == 0) {
        row.depth_controlled = report.depth_controlled;
        row.depth_lowered = report.depth_lowered;
        row.cx_count = report.count_cx;
      } else if (row.depth_controlled != report.depth_controlled ||
                 row.depth_lowered != report.depth_lowered || row.cx_count != report.count_cx) {
        // The structure is target-independent; a mismatch means a logic error.
        throw std::logic_error("depth_scaling_table: depth varied across trials");
      }
    }
    row.count_formula = cnu_controlled_count(n);
    row.depth_formula = depth_formula(n);
    rows.push_back(row);
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "n,depth_controlled,depth_lowered,cx_count,count_formula,depth_formula\n";
  for (const BenchRow& r : rows)
    out << r.n << "," << r.depth_controlled << "," << r.depth_lowered << "," << r.cx_count << ","
        << r.count_formula << "," << r.depth_formula << "\n";
  return out.str();
}

}  // namespace mcuforge

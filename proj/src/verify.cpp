#include "mcuforge/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mcuforge/ldd.hpp"
#include "mcuforge/rng.hpp"
#include "mcuforge/sim.hpp"

namespace mcuforge {

namespace {

constexpr int kDenseVerifyMax = 9;
constexpr std::uint64_t kUnitaryStream = 0x756e6974617279ull;
constexpr std::uint64_t kStateStream = 0x7374617465ull;

double max_error_vs_oracle_matrix(const Circuit& c, const MCGateSpec& spec) {
  DenseMatrix actual = circuit_unitary(c);
  double worst = 0.0;
  for (std::uint64_t col = 0; col < actual.dim; ++col) {
    Statevector expected = oracle_cnu(spec, Statevector::basis(c.width(), col));
    for (std::uint64_t row = 0; row < actual.dim; ++row)
      worst = std::max(worst, std::abs(actual.at(row, col) - expected.amplitudes()[row]));
  }
  return worst;
}

Statevector random_state(int width, std::uint64_t seed) {
  SplitMix64 g(seed);
  std::vector<cplx> amps(std::uint64_t{1} << width);
  double n2 = 0.0;
  for (cplx& z : amps) {
    // Box-Muller; complex Gaussian entries give a Haar-random direction.
    double u1 = g.next_double(), u2 = g.next_double();
    while (u1 == 0.0) u1 = g.next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    z = {r * std::cos(2.0 * std::numbers::pi * u2), r * std::sin(2.0 * std::numbers::pi * u2)};
    n2 += std::norm(z);
  }
  double inv = 1.0 / std::sqrt(n2);
  for (cplx& z : amps) z *= inv;
  return Statevector::from_amplitudes(width, std::move(amps));
}

double state_error_2norm(const Statevector& a, const Statevector& b) {
  double e2 = 0.0;
  for (std::uint64_t i = 0; i < a.amplitudes().size(); ++i)
    e2 += std::norm(a.amplitudes()[i] - b.amplitudes()[i]);
  return std::sqrt(e2);
}

}  // namespace

VerifyReport verify_decomposition(const VerifyOptions& options) {
  VerifyReport report;
  auto note = [&](int n, double err, std::uint64_t u_seed, double tol, const char* stage) {
    auto [it, inserted] = report.worst_error_by_n.try_emplace(n, err);
    if (!inserted) it->second = std::max(it->second, err);
    if (!(err <= tol)) {
      report.passed = false;
      report.failures.push_back({n, u_seed, err, stage});
    }
  };

  const int dense_max = std::min(kDenseVerifyMax, options.n_max);
  for (int n = 1; n <= dense_max; ++n) {
    for (int t = 0; t <= options.trials; ++t) {
      // Trial 0 is the fixed U = X target; the rest are Haar-random SU(2).
      std::uint64_t u_seed =
          t == 0 ? 0 : mix_seed(options.seed, kUnitaryStream + static_cast<std::uint64_t>(n),
                                static_cast<std::uint64_t>(t));
      Unitary2 u = t == 0 ? Unitary2::pauli_x() : random_su2(u_seed);
      MCGateSpec spec{n, u};
      Circuit c = build_cnu(spec, options.branch);
      note(n, max_error_vs_oracle_matrix(c, spec), u_seed, options.unitary_tol, "unitary");
      if (options.check_lowered && t <= options.lowered_trials)
        note(n, max_error_vs_oracle_matrix(lower_controlled(c), spec), u_seed,
             options.unitary_tol, "lowered");
    }
  }

  for (int n = kDenseVerifyMax + 1; n <= options.n_max; ++n) {
    std::uint64_t u_seed = mix_seed(options.seed, kUnitaryStream, static_cast<std::uint64_t>(n));
    Unitary2 u = random_su2(u_seed);
    MCGateSpec spec{n, u};
    Circuit c = build_cnu(spec, options.branch);
    for (int t = 0; t < options.states_per_n; ++t) {
      Statevector in = random_state(n + 1, mix_seed(options.seed, kStateStream + static_cast<std::uint64_t>(n),
                                                    static_cast<std::uint64_t>(t)));
      double err = state_error_2norm(run_statevector(c, in), oracle_cnu(spec, in));
      note(n, err, u_seed, options.state_tol, "statevector");
    }
  }

  return report;
}

}  // namespace mcuforge

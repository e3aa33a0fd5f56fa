#include "mcuforge/ldd.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mcuforge {

namespace {

constexpr double kPi = std::numbers::pi;

// Same gate set as build_p but with controls emitted high-to-low. Within a
// ladder every factor commutes (shared target, distinct controls, roots of a
// common base), so this only changes the schedule: descending ladder cascades
// then pack under ASAP exactly as in the hand-interleaved layout, and the
// invert() of such a ladder is ascending, which is what the mirrored cascades
// need. Keeps the emitted unitary identical to the increasing-k order.
Circuit ladder_desc(int j, const Unitary2& base, RootBranch branch) {
  Circuit c(j + 1, "P_" + std::to_string(j));
  for (int k = j; k >= 2; --k)
    c.add(Gate::controlled(principal_root_pow2(base, j - k + 1, branch), k - 1, j));
  return c;
}

}  // namespace

Circuit build_p(int j, const Unitary2& base, RootBranch branch) {
  if (j < 2) throw std::invalid_argument("build_p: j must be >= 2");
  Circuit c(j + 1, "P_" + std::to_string(j));
  for (int k = 2; k <= j; ++k)
    c.add(Gate::controlled(principal_root_pow2(base, j - k + 1, branch), k - 1, j));
  return c;
}

Circuit build_q(int n, RootBranch branch) {
  if (n < 2) throw std::invalid_argument("build_q: n must be >= 2");
  Circuit c(n, "Q_" + std::to_string(n));
  for (int j = n - 1; j >= 2; --j) {
    c.append(ladder_desc(j, make_rx(kPi), branch));
    c.add(Gate::controlled(make_rx(std::ldexp(kPi, -(j - 1))), 0, j));
  }
  c.add(Gate::controlled(make_rx(kPi), 0, 1));  // Q_2
  for (int j = 2; j <= n - 1; ++j) c.append(invert(ladder_desc(j, make_rx(kPi), branch)));
  return c;
}

Circuit build_cnu(const MCGateSpec& spec, RootBranch branch) {
  const int n = spec.controls;
  if (n < 0) throw std::invalid_argument("build_cnu: control count must be >= 0");
  std::string label = "C^" + std::to_string(n) + "U";
  if (n == 0) {
    Circuit c(1, label);
    c.add(Gate::one_qubit(spec.unitary, 0));
    return c;
  }
  if (n == 1) {
    Circuit c(2, label);
    c.add(Gate::controlled(spec.unitary, 0, 1));
    return c;
  }
  Circuit c(n + 1, label);
  c.append(ladder_desc(n, spec.unitary, branch));
  c.add(Gate::controlled(principal_root_pow2(spec.unitary, n - 1, branch), 0, n));
  c.append(build_q(n, branch));
  c.append(invert(ladder_desc(n, spec.unitary, branch)));
  c.append(invert(build_q(n, branch)));
  return c;
}

Circuit build_p_product(int n, const Unitary2& base, RootBranch branch) {
  if (n < 3) throw std::invalid_argument("build_p_product: n must be >= 3");
  Circuit c(n + 1, "P_2..P_" + std::to_string(n));
  for (int j = 2; j <= n; ++j) c.append(build_p(j, base, branch));
  return c;
}

int depth_formula(int n) {
  if (n < 3) throw std::invalid_argument("depth_formula: defined for n >= 3");
  return 8 * n - 12;
}

std::int64_t cnu_controlled_count(int n) {
  if (n < 1) throw std::invalid_argument("cnu_controlled_count: defined for n >= 1");
  std::int64_t m = n - 1;
  return 2 * m * m + 2 * m + 1;
}

}  // namespace mcuforge

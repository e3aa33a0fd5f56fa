#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "mcuforge/circuit.hpp"
#include "mcuforge/rng.hpp"
#include "mcuforge/sim.hpp"
#include "mcuforge/su2.hpp"

namespace mcuforge::test {

// Independent power route (binary exponentiation) for root checks. Works on
// raw entries so intermediate rounding is not constrained by the validating
// constructor.
using Mat2 = std::array<cplx, 4>;

inline Mat2 raw_mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

inline Mat2 raw_pow(const Unitary2& u, std::int64_t k) {
  Mat2 acc{1.0, 0.0, 0.0, 1.0};
  Mat2 base = u.entries();
  while (k > 0) {
    if (k & 1) acc = raw_mul(acc, base);
    base = raw_mul(base, base);
    k >>= 1;
  }
  return acc;
}

inline double raw_distance(const Mat2& a, const Unitary2& b) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    worst = std::max(worst,
                     std::abs(a[static_cast<std::size_t>(i)] -
                              b.entries()[static_cast<std::size_t>(i)]));
  return worst;
}

// Expected 4x4 of a controlled gate on a 2-wire register (wire 0 = MSB),
// assembled directly from the definition rather than via the simulator.
inline DenseMatrix controlled_4x4(const Unitary2& u, int control, int target) {
  DenseMatrix m;
  m.dim = 4;
  m.data.assign(16, cplx(0.0));
  const std::uint64_t cmask = control == 0 ? 2 : 1;
  const std::uint64_t tmask = target == 0 ? 2 : 1;
  for (std::uint64_t col = 0; col < 4; ++col) {
    if (!(col & cmask)) {
      m.at(col, col) = 1.0;
      continue;
    }
    const std::uint64_t base = col & ~tmask;
    const int in_bit = (col & tmask) ? 1 : 0;
    m.at(base, col) = u.at(0, in_bit);
    m.at(base | tmask, col) = u.at(1, in_bit);
  }
  return m;
}

inline DenseMatrix identity_matrix(std::uint64_t dim) {
  DenseMatrix m;
  m.dim = dim;
  m.data.assign(dim * dim, cplx(0.0));
  for (std::uint64_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

inline Circuit random_circuit(int width, int gate_count, std::uint64_t seed) {
  SplitMix64 g(seed);
  Circuit c(width, "random");
  for (int i = 0; i < gate_count; ++i) {
    Unitary2 u = random_su2(g.next());
    int target = static_cast<int>(g.next() % static_cast<std::uint64_t>(width));
    if (width >= 2 && g.next_double() < 0.5) {
      int control = static_cast<int>(g.next() % static_cast<std::uint64_t>(width));
      while (control == target)
        control = static_cast<int>(g.next() % static_cast<std::uint64_t>(width));
      c.add(Gate::controlled(u, control, target));
    } else {
      c.add(Gate::one_qubit(u, target));
    }
  }
  return c;
}

}  // namespace mcuforge::test

#pragma once

#include <cstdint>

#include "mcuforge/circuit.hpp"
#include "mcuforge/su2.hpp"

namespace mcuforge {

/// An n-controlled single-qubit gate: controls a_1..a_n on wires 0..n-1,
/// target a_{n+1} on wire n.
struct MCGateSpec {
  int controls;  // n >= 0
  Unitary2 unitary;
};

/// P_j ladder: for k = 2..j, the 2^{j-k+1}-th root of `base` on wire j
/// controlled by wire k-1, emitted in increasing k. Width j+1. j < 2 rejected.
Circuit build_p(int j, const Unitary2& base, RootBranch branch = RootBranch::kPrincipal);

/// The expanded linear-depth form of Q_n on n wires: the descending cascade of
/// P_j ladders with their a_1-controlled R_x(π/2^{j-1}) companions, the
/// central controlled R_x(π), then the inverted P ladders ascending.
/// Gate count is exactly (n-1)^2. n < 2 rejected.
Circuit build_q(int n, RootBranch branch = RootBranch::kPrincipal);

/// Full decomposition of C^nU on n+1 wires:
///   P_n(U); controlled 2^{n-1}-th root of U (a_1 -> a_{n+1}); Q_n;
///   P_n(U)†; Q_n†.
/// n = 0 emits a single one-qubit gate, n = 1 a single controlled gate.
/// Controlled-gate count for n >= 2 is 2(n-1)^2 + 2(n-1) + 1.
Circuit build_cnu(const MCGateSpec& spec, RootBranch branch = RootBranch::kPrincipal);

/// The product P_2 P_3 ... P_n with the earliest-applied block first, the
/// layout whose ASAP depth is exactly 2n-3. All blocks share no unitary
/// ordering constraint (gates within a ladder commute), so this is the
/// canonical scheduling witness for the depth law. n < 3 rejected.
Circuit build_p_product(int n, const Unitary2& base, RootBranch branch = RootBranch::kPrincipal);

/// Reference depth value 8n-12 for n >= 3 (not a measurement).
int depth_formula(int n);

/// Controlled-gate count of build_cnu for n >= 1.
std::int64_t cnu_controlled_count(int n);

}  // namespace mcuforge

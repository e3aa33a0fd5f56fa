#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "mcuforge/ldd.hpp"
#include "mcuforge/sim.hpp"
#include "test_util.hpp"

using namespace mcuforge;

namespace {

constexpr double kPi = std::numbers::pi;

double oracle_error(const Circuit& c, const MCGateSpec& spec) {
  DenseMatrix actual = circuit_unitary(c);
  double worst = 0.0;
  for (std::uint64_t col = 0; col < actual.dim; ++col) {
    Statevector expected = oracle_cnu(spec, Statevector::basis(c.width(), col));
    for (std::uint64_t row = 0; row < actual.dim; ++row)
      worst = std::max(worst, std::abs(actual.at(row, col) - expected.amplitudes()[row]));
  }
  return worst;
}

}  // namespace

TEST_CASE("build_p emits the root ladder in increasing k") {
  CHECK_THROWS_AS(build_p(1, Unitary2::pauli_x()), std::invalid_argument);

  Circuit p2 = build_p(2, make_rx(kPi));
  REQUIRE(p2.size() == 1);
  CHECK(p2.width() == 3);
  CHECK(p2.gates()[0].control == 1);
  CHECK(p2.gates()[0].target == 2);
  CHECK(distance(p2.gates()[0].matrix, make_rx(kPi / 2)) < 1e-12);

  Unitary2 u = random_su2(12);
  Circuit p3 = build_p(3, u);
  REQUIRE(p3.size() == 2);
  CHECK(p3.gates()[0].control == 1);
  CHECK(p3.gates()[0].target == 3);
  CHECK(distance(p3.gates()[0].matrix, principal_root(u, 4)) == 0.0);
  CHECK(p3.gates()[1].control == 2);
  CHECK(p3.gates()[1].target == 3);
  CHECK(distance(p3.gates()[1].matrix, principal_root(u, 2)) == 0.0);
}

TEST_CASE("build_p of the identity is the identity") {
  for (int j : {2, 3, 5}) {
    Circuit p = build_p(j, Unitary2::identity());
    CHECK(p.size() == static_cast<std::size_t>(j - 1));
    CHECK(max_entry_diff(circuit_unitary(p), test::identity_matrix(std::uint64_t{1} << (j + 1))) <
          1e-12);
  }
}

TEST_CASE("build_q structure and count") {
  CHECK_THROWS_AS(build_q(1), std::invalid_argument);

  Circuit q2 = build_q(2);
  REQUIRE(q2.size() == 1);
  CHECK(q2.gates()[0].control == 0);
  CHECK(q2.gates()[0].target == 1);
  CHECK(distance(q2.gates()[0].matrix, make_rx(kPi)) < 1e-15);

  CHECK(build_q(3).size() == 4);
  for (int n = 2; n <= 12; ++n)
    CHECK(build_q(n).size() == static_cast<std::size_t>((n - 1) * (n - 1)));
}

TEST_CASE("build_q flips the tail controls to -i|0>") {
  for (int n = 2; n <= 6; ++n) {
    // |1...1>⊗|ψ⟩ with a random target qubit state.
    SplitMix64 g(600 + static_cast<std::uint64_t>(n));
    double t = g.next_double() * kPi;
    cplx psi0 = std::cos(t);
    cplx psi1 = std::polar(std::sin(t), 2.0 * kPi * g.next_double());

    const int width = n + 1;
    std::vector<cplx> amps(std::uint64_t{1} << width, cplx(0.0));
    const std::uint64_t ones = (std::uint64_t{1} << width) - 1;
    amps[ones - 1] = psi0;
    amps[ones] = psi1;

    Circuit host(width);
    host.append(build_q(n));
    Statevector out =
        run_statevector(host, Statevector::from_amplitudes(width, std::move(amps)));

    // Expected: (-i)^{n-1} |1 0...0⟩ ⊗ |ψ⟩.
    cplx factor = std::pow(cplx(0, -1), n - 1);
    std::vector<cplx> expected(std::uint64_t{1} << width, cplx(0.0));
    expected[std::uint64_t{1} << n] = factor * psi0;
    expected[(std::uint64_t{1} << n) | 1] = factor * psi1;
    double worst = 0.0;
    for (std::uint64_t i = 0; i < expected.size(); ++i)
      worst = std::max(worst, std::abs(out.amplitudes()[i] - expected[i]));
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("build_cnu edge cases") {
  Unitary2 u = random_su2(9);
  Circuit c0 = build_cnu({0, u});
  REQUIRE(c0.size() == 1);
  CHECK(c0.width() == 1);
  CHECK(!c0.gates()[0].is_controlled());

  Circuit c1 = build_cnu({1, u});
  REQUIRE(c1.size() == 1);
  CHECK(c1.width() == 2);
  CHECK(c1.gates()[0].is_controlled());
  CHECK(distance(c1.gates()[0].matrix, u) == 0.0);

  CHECK_THROWS_AS(build_cnu({-1, u}), std::invalid_argument);
}

TEST_CASE("build_cnu at n=2 expands to the five expected gates") {
  Unitary2 u = random_su2(2024);
  Unitary2 su = principal_root(u, 2);
  Circuit c = build_cnu({2, u});
  REQUIRE(c.size() == 5);

  auto expect = [&](std::size_t i, const Unitary2& m, int control, int target) {
    CHECK(c.gates()[i].control == control);
    CHECK(c.gates()[i].target == target);
    CHECK(distance(c.gates()[i].matrix, m) < 1e-12);
  };
  expect(0, su, 1, 2);
  expect(1, su, 0, 2);
  expect(2, make_rx(kPi), 0, 1);
  expect(3, adjoint(su), 1, 2);
  expect(4, make_rx(-kPi), 0, 1);

  CHECK(oracle_error(c, {2, u}) < 1e-9);
}

TEST_CASE("controlled-gate count law") {
  CHECK(build_cnu({3, random_su2(1)}).size() == 13);
  for (int n = 2; n <= 40; ++n) {
    std::int64_t expected = 2 * static_cast<std::int64_t>(n - 1) * (n - 1) + 2 * (n - 1) + 1;
    CHECK(cnu_controlled_count(n) == expected);
    if (n <= 14) CHECK(build_cnu({n, random_su2(static_cast<std::uint64_t>(n))}).size() ==
                       static_cast<std::size_t>(expected));
  }
}

TEST_CASE("oracle equivalence for small n, including U = X") {
  for (int n = 1; n <= 5; ++n) {
    MCGateSpec spec{n, Unitary2::pauli_x()};
    CHECK(oracle_error(build_cnu(spec), spec) < 1e-9);
    for (std::uint64_t s = 0; s < 8; ++s) {
      MCGateSpec rnd{n, random_su2(mix_seed(404, static_cast<std::uint64_t>(n), s))};
      CHECK(oracle_error(build_cnu(rnd), rnd) < 1e-9);
    }
  }
}

TEST_CASE("n=5 with U=X is a 6-qubit Toffoli") {
  MCGateSpec spec{5, Unitary2::pauli_x()};
  CHECK(oracle_error(build_cnu(spec), spec) < 1e-9);
}

TEST_CASE("deactivated controls leave basis states untouched") {
  for (int n = 2; n <= 6; ++n) {
    Unitary2 u = random_su2(static_cast<std::uint64_t>(n) * 31);
    Circuit c = build_cnu({n, u});
    const std::uint64_t dim = std::uint64_t{1} << (n + 1);
    const std::uint64_t ctrl_mask = dim - 2;  // all wires except the target LSB
    for (std::uint64_t idx = 0; idx < dim; ++idx) {
      if ((idx & ctrl_mask) == ctrl_mask) continue;  // all controls active
      Statevector out = run_statevector(c, Statevector::basis(n + 1, idx));
      double worst = 0.0;
      for (std::uint64_t i = 0; i < dim; ++i)
        worst = std::max(worst,
                         std::abs(out.amplitudes()[i] - (i == idx ? cplx(1.0) : cplx(0.0))));
      CHECK(worst < 1e-9);
    }
  }
}

TEST_CASE("wrapped root branch breaks the decomposition for n >= 3") {
  MCGateSpec spec{3, random_su2(5150)};
  CHECK(oracle_error(build_cnu(spec, RootBranch::kWrapped), spec) > 1e-3);
}

TEST_CASE("depth formula values and domain") {
  CHECK(depth_formula(3) == 12);
  CHECK(depth_formula(5) == 28);
  CHECK(depth_formula(10) == 68);
  CHECK_THROWS_AS(depth_formula(2), std::invalid_argument);
}

TEST_CASE("P-product depth law and C^nU depth bound") {
  for (int n = 3; n <= 12; ++n) {
    CHECK(schedule_asap(build_p_product(n, make_rx(kPi))).depth_controlled == 2 * n - 3);
    DepthReport r = schedule_asap(build_cnu({n, random_su2(static_cast<std::uint64_t>(n))}));
    CHECK(r.depth_controlled <= depth_formula(n));
  }
  CHECK_THROWS_AS(build_p_product(2, make_rx(kPi)), std::invalid_argument);
}

TEST_CASE("lowered decomposition stays oracle-equivalent") {
  for (int n = 2; n <= 4; ++n) {
    MCGateSpec spec{n, random_su2(static_cast<std::uint64_t>(n) + 77)};
    CHECK(oracle_error(lower_controlled(build_cnu(spec)), spec) < 1e-9);
  }
}

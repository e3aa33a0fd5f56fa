#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "mcuforge/ldd.hpp"
#include "mcuforge/serialize.hpp"
#include "test_util.hpp"

using namespace mcuforge;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("unitary json uses the matrix key and round-trips bit-exactly") {
  Unitary2 u = random_su2(17);
  nlohmann::json j = unitary_to_json(u);
  REQUIRE(j.contains("matrix"));
  REQUIRE(j["matrix"].size() == 4);
  Unitary2 back = unitary_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back == u);
  CHECK_THROWS_AS(unitary_from_json(nlohmann::json{{"m", 1}}), std::invalid_argument);
}

TEST_CASE("circuit json round-trip is lossless") {
  Circuit c = test::random_circuit(4, 25, 4242);
  c.set_label("round-trip");
  std::string text = circuit_to_json_string(c);
  Circuit back = circuit_from_json_string(text);
  CHECK(back.width() == c.width());
  CHECK(back.label() == c.label());
  CHECK(gates_equal(back, c, 0.0));
  CHECK(circuit_to_json_string(back) == text);
}

TEST_CASE("qasm header for an empty circuit") {
  CHECK(to_qasm(Circuit(2)) == "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\n");
}

TEST_CASE("qasm for a single CX") {
  Circuit c(2);
  c.add(Gate::controlled(Unitary2::pauli_x(), 0, 1));
  CHECK(to_qasm(c) == "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncx q[0],q[1];\n");
}

TEST_CASE("qasm rejects unlowered circuits") {
  Circuit c(2);
  c.add(Gate::controlled(make_rx(kPi / 2), 0, 1));
  CHECK_THROWS_WITH_AS(to_qasm(c), doctest::Contains("lowering required"), std::runtime_error);
}

TEST_CASE("qasm records a nonzero global phase") {
  Circuit c(1);
  c.add(Gate::one_qubit(Unitary2::pauli_x(), 0));
  std::string q = to_qasm(c);
  CHECK(q.find("// global_phase: ") != std::string::npos);
  CHECK(q.find("u3(") != std::string::npos);
}

TEST_CASE("qasm of a lowered decomposition is reproducible through json") {
  Circuit low = lower_controlled(build_cnu({3, random_su2(321)}));
  std::string direct = to_qasm(low);
  Circuit back = circuit_from_json_string(circuit_to_json_string(low));
  CHECK(to_qasm(back) == direct);
}

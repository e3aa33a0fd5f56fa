#include "mcuforge/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace mcuforge {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json complex_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("matrix entry must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

json unitary_to_json(const Unitary2& u) {
  json m = json::array();
  for (const cplx& z : u.entries()) m.push_back(complex_to_json(z));
  return json{{"matrix", m}};
}

Unitary2 unitary_from_json(const json& j) {
  if (!j.contains("matrix")) throw std::invalid_argument("unitary JSON requires a \"matrix\" key");
  const json& m = j.at("matrix");
  if (!m.is_array() || m.size() != 4)
    throw std::invalid_argument("\"matrix\" must hold four [re, im] pairs, row-major");
  return {complex_from_json(m[0]), complex_from_json(m[1]), complex_from_json(m[2]),
          complex_from_json(m[3])};
}

json circuit_to_json(const Circuit& c) {
  json gates = json::array();
  for (const Gate& g : c.gates()) {
    json jg;
    jg["kind"] = g.is_controlled() ? "controlled" : "one-qubit";
    if (g.is_controlled()) jg["control"] = g.control;
    jg["target"] = g.target;
    jg["matrix"] = unitary_to_json(g.matrix).at("matrix");
    gates.push_back(std::move(jg));
  }
  return json{{"width", c.width()}, {"label", c.label()}, {"gates", gates}};
}

Circuit circuit_from_json(const json& j) {
  Circuit c(j.at("width").get<int>(), j.value("label", std::string{}));
  for (const json& jg : j.at("gates")) {
    std::string kind = jg.at("kind").get<std::string>();
    Unitary2 m = unitary_from_json(json{{"matrix", jg.at("matrix")}});
    int target = jg.at("target").get<int>();
    if (kind == "one-qubit") {
      c.add(Gate::one_qubit(m, target));
    } else if (kind == "controlled") {
      c.add(Gate::controlled(m, jg.at("control").get<int>(), target));
    } else {
      throw std::invalid_argument("unknown gate kind: " + kind);
    }
  }
  return c;
}

std::string circuit_to_json_string(const Circuit& c) { return circuit_to_json(c).dump(2); }

Circuit circuit_from_json_string(const std::string& text) {
  return circuit_from_json(json::parse(text));
}

std::string to_qasm(const Circuit& c) {
  if (!is_lowered(c))
    throw std::runtime_error(
        "to_qasm: lowering required (only one-qubit gates and CX can be emitted)");

  std::ostringstream body;
  double global_phase = 0.0;
  for (const Gate& g : c.gates()) {
    if (g.is_controlled()) {
      body << "cx q[" << g.control << "],q[" << g.target << "];\n";
      continue;
    }
    // u3(θ,φ,λ) = e^{i(φ+λ)/2} Rz(φ) Ry(θ) Rz(λ); the remainder of the gate's
    // phase is a true global phase once the circuit is control-free.
    ZyzAngles z = zyz_decompose(g.matrix);
    global_phase += z.global_phase - 0.5 * (z.phi + z.lambda);
    body << "u3(" << fmt_double(z.theta) << "," << fmt_double(z.phi) << ","
         << fmt_double(z.lambda) << ") q[" << g.target << "];\n";
  }

  global_phase = std::remainder(global_phase, 2.0 * std::numbers::pi);
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  if (std::abs(global_phase) > 1e-12)
    out << "// global_phase: " << fmt_double(global_phase) << "\n";
  out << "qreg q[" << c.width() << "];\n";
  out << body.str();
  return out.str();
}

}  // namespace mcuforge

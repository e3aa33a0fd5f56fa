#include "mcuforge/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace mcuforge {

namespace {

constexpr double kCxMatchTol = 1e-12;
constexpr double kExactIdentityTol = 1e-15;

bool is_cx(const Gate& g) {
  return g.is_controlled() && distance(g.matrix, Unitary2::pauli_x()) <= kCxMatchTol;
}

}  // namespace

Circuit::Circuit(int width, std::string label) : width_(width), label_(std::move(label)) {
  if (width < 0) throw std::invalid_argument("Circuit: width must be >= 0");
}

void Circuit::add(Gate g) {
  if (g.target < 0 || g.target >= width_)
    throw std::invalid_argument("Circuit: target wire out of range");
  if (g.is_controlled()) {
    if (g.control < 0 || g.control >= width_)
      throw std::invalid_argument("Circuit: control wire out of range");
    if (g.control == g.target)
      throw std::invalid_argument("Circuit: control and target wires must differ");
  }
  gates_.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
  if (other.width_ > width_)
    throw std::invalid_argument("Circuit::append: appended circuit is wider than the host");
  for (const Gate& g : other.gates_) gates_.push_back(g);
}

namespace {

// Core ASAP pass: per-gate 1-based layers plus the resulting depth.
std::pair<std::vector<int>, int> asap_layers(const Circuit& c) {
  std::vector<int> wire_layer(static_cast<std::size_t>(c.width()), 0);
  std::vector<int> layers;
  layers.reserve(c.size());
  int depth = 0;
  for (const Gate& g : c.gates()) {
    int prev = wire_layer[static_cast<std::size_t>(g.target)];
    if (g.is_controlled()) prev = std::max(prev, wire_layer[static_cast<std::size_t>(g.control)]);
    int layer = prev + 1;
    wire_layer[static_cast<std::size_t>(g.target)] = layer;
    if (g.is_controlled()) wire_layer[static_cast<std::size_t>(g.control)] = layer;
    layers.push_back(layer);
    depth = std::max(depth, layer);
  }
  return {std::move(layers), depth};
}

}  // namespace

DepthReport schedule_asap(const Circuit& c) {
  DepthReport report;
  auto [layers, depth] = asap_layers(c);
  report.layers = std::move(layers);
  report.depth_controlled = depth;
  for (const Gate& g : c.gates())
    if (g.is_controlled()) ++report.count_controlled;

  Circuit low = lower_controlled(c);
  report.depth_lowered = asap_layers(low).second;
  for (const Gate& g : low.gates()) {
    if (g.is_controlled())
      ++report.count_cx;
    else
      ++report.count_1q;
  }
  return report;
}

Circuit invert(const Circuit& c) {
  Circuit out(c.width(), c.label());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    Gate g = *it;
    g.matrix = adjoint(g.matrix);
    out.add(std::move(g));
  }
  return out;
}

Circuit lower_controlled(const Circuit& c) {
  Circuit out(c.width(), c.label());
  for (const Gate& g : c.gates()) {
    if (!g.is_controlled()) {
      out.add(g);
      continue;
    }
    if (is_cx(g)) {
      out.add(Gate::controlled(Unitary2::pauli_x(), g.control, g.target));
      continue;
    }
    if (distance(g.matrix, Unitary2::identity()) <= kExactIdentityTol) continue;

    // ABC split: with u = e^{iα} Rz(φ) Ry(θ) Rz(λ),
    //   A·B·C = I  and  A·X·B·X·C = e^{-iα} u,
    // so C, CX, B, CX, A on the target plus diag(1, e^{iα}) on the control
    // reproduce the controlled block exactly.
    ZyzAngles z = zyz_decompose(g.matrix);
    Unitary2 a_part = compose(make_rz(z.phi), make_ry(z.theta / 2.0));
    Unitary2 b_part = compose(make_ry(-z.theta / 2.0), make_rz(-(z.phi + z.lambda) / 2.0));
    Unitary2 c_part = make_rz((z.lambda - z.phi) / 2.0);

    auto add_1q = [&](const Unitary2& m, int wire) {
      if (distance(m, Unitary2::identity()) <= kExactIdentityTol) return;
      out.add(Gate::one_qubit(m, wire));
    };
    add_1q(c_part, g.target);
    out.add(Gate::controlled(Unitary2::pauli_x(), g.control, g.target));
    add_1q(b_part, g.target);
    out.add(Gate::controlled(Unitary2::pauli_x(), g.control, g.target));
    add_1q(a_part, g.target);
    if (std::abs(std::polar(1.0, z.global_phase) - cplx(1.0, 0.0)) > kExactIdentityTol)
      add_1q(make_phase(z.global_phase), g.control);
  }
  return out;
}

bool is_lowered(const Circuit& c) {
  return std::all_of(c.gates().begin(), c.gates().end(),
                     [](const Gate& g) { return !g.is_controlled() || is_cx(g); });
}

bool gates_equal(const Circuit& a, const Circuit& b, double tol) {
  if (a.width() != b.width() || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Gate& ga = a.gates()[i];
    const Gate& gb = b.gates()[i];
    if (ga.kind != gb.kind || ga.target != gb.target || ga.control != gb.control) return false;
    if (distance(ga.matrix, gb.matrix) > tol) return false;
  }
  return true;
}

}  // namespace mcuforge

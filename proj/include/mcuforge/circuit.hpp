#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcuforge/su2.hpp"

namespace mcuforge {

enum class GateKind { kOneQubit, kControlled };

/// One circuit element: a one-qubit unitary on `target`, or the same
/// conditioned on `control` being |1⟩.
struct Gate {
  GateKind kind;
  Unitary2 matrix;
  int target;
  int control;  // -1 for one-qubit gates

  static Gate one_qubit(Unitary2 m, int target) {
    return {GateKind::kOneQubit, std::move(m), target, -1};
  }
  static Gate controlled(Unitary2 m, int control, int target) {
    return {GateKind::kControlled, std::move(m), target, control};
  }
  bool is_controlled() const { return kind == GateKind::kControlled; }
};

/// Ordered gate sequence over a fixed wire count. Earlier gates act first.
class Circuit {
 public:
  explicit Circuit(int width, std::string label = "");

  /// Validates wire indices (and control != target) before accepting.
  void add(Gate g);
  /// Appends every gate of `other`; requires other.width() <= width().
  void append(const Circuit& other);

  int width() const { return width_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

 private:
  int width_;
  std::string label_;
  std::vector<Gate> gates_;
};

/// Layer assignment and depth/count totals at two gate-set granularities:
/// the circuit as given ({1q, controlled-1q}) and after lowering to {CX, 1q}.
struct DepthReport {
  std::vector<int> layers;       // 1-based ASAP layer per input gate
  int depth_controlled = 0;      // layer count of the input circuit
  int depth_lowered = 0;         // layer count after lower_controlled
  std::int64_t count_controlled = 0;  // controlled gates in the input
  std::int64_t count_cx = 0;          // CX gates after lowering
  std::int64_t count_1q = 0;          // one-qubit gates after lowering
};

/// Greedy list scheduling in program order: layer(g) = 1 + max layer of any
/// earlier gate sharing a wire (0 if none). Deterministic for a given order.
DepthReport schedule_asap(const Circuit& c);

/// Reversed gate order with each matrix replaced by its adjoint.
Circuit invert(const Circuit& c);

/// Rewrites every controlled gate whose matrix is not X into
/// {1q C, CX, 1q B, CX, 1q A, phase-on-control}, exactly reproducing the 4x4
/// controlled block (no global-phase slack). Controlled-X passes through as
/// CX; one-qubit gates pass through unchanged.
Circuit lower_controlled(const Circuit& c);

/// True when every gate is one-qubit or an exact CX.
bool is_lowered(const Circuit& c);

bool gates_equal(const Circuit& a, const Circuit& b, double tol);

}  // namespace mcuforge

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcuforge/circuit.hpp"
#include "mcuforge/ldd.hpp"
#include "mcuforge/su2.hpp"

namespace mcuforge {

/// 2^width complex amplitudes. Wire 0 is the most significant bit of the basis
/// index, so |a_1 a_2 ... a_{n+1}⟩ reads left to right.
class Statevector {
 public:
  /// |0...0⟩
  explicit Statevector(int width);
  static Statevector basis(int width, std::uint64_t index);
  /// Validates the squared-amplitude sum against 1 within 1e-10.
  static Statevector from_amplitudes(int width, std::vector<cplx> amplitudes);

  int width() const { return width_; }
  std::uint64_t dim() const { return std::uint64_t{1} << width_; }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  std::vector<cplx>& amplitudes() { return amps_; }
  double norm() const;

 private:
  Statevector(int width, std::vector<cplx> amps) : width_(width), amps_(std::move(amps)) {}
  int width_;
  std::vector<cplx> amps_;
};

void apply_gate_inplace(std::vector<cplx>& amps, int width, const Gate& g);
Statevector apply_gate(const Statevector& state, const Gate& g);
Statevector run_statevector(const Circuit& c, const Statevector& input);

/// Dense 2^m x 2^m matrix, column-major.
struct DenseMatrix {
  std::uint64_t dim = 0;
  std::vector<cplx> data;

  cplx& at(std::uint64_t row, std::uint64_t col) { return data[col * dim + row]; }
  const cplx& at(std::uint64_t row, std::uint64_t col) const { return data[col * dim + row]; }
};

double max_entry_diff(const DenseMatrix& a, const DenseMatrix& b);

/// Columns obtained by applying the circuit to each basis state. Widths above
/// 12 are rejected (dense storage at 12 wires already costs 256 MB).
DenseMatrix circuit_unitary(const Circuit& c);

/// Brute-force C^nU semantics, no decomposition: where every control bit is 1,
/// the target amplitude pair is mixed by u; everything else is untouched.
/// Requires state width = n+1.
Statevector oracle_cnu(const MCGateSpec& spec, const Statevector& state);

/// Depolarizing probability per gate-wire touch, plus the RNG seed.
struct NoiseSpec {
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// Measurement outcome histogram over computational-basis bitstrings.
struct Histogram {
  int width = 0;
  std::uint64_t shots = 0;
  double noise_p = 0.0;
  std::uint64_t seed = 0;
  std::map<std::uint64_t, std::uint64_t> counts;

  std::string bitstring(std::uint64_t index) const;
  double probability(std::uint64_t index) const;
  double probability_all_ones() const;
  /// "bitstring,count" rows, ascending.
  std::string to_csv() const;
  /// {shots, seed, p, width, counts}
  nlohmann::json to_json() const;
};

/// Monte Carlo Pauli trajectories: after every gate each touched wire suffers,
/// with probability p, a Pauli drawn uniformly from {I, X, Y, Z}; the shot
/// ends with one computational-basis sample. Per-shot RNG streams are derived
/// from (seed, shot index), so histograms are identical for a fixed seed
/// regardless of worker count. Requires a lowered circuit.
Histogram run_noisy(const Circuit& c, const Statevector& input, const NoiseSpec& noise,
                    std::uint64_t shots);

}  // namespace mcuforge

#include "mcuforge/sim.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "mcuforge/parallel.hpp"
#include "mcuforge/rng.hpp"

namespace mcuforge {

namespace {

constexpr double kNormTol = 1e-10;
constexpr int kDenseWidthCap = 12;

// Index with a zero inserted at bit position `pos`.
inline std::uint64_t insert_zero_bit(std::uint64_t i, int pos) {
  const std::uint64_t low = i & ((std::uint64_t{1} << pos) - 1);
  return ((i >> pos) << (pos + 1)) | low;
}

}  // namespace

Statevector::Statevector(int width) : width_(width) {
  if (width < 0 || width > 30) throw std::invalid_argument("Statevector: width out of range");
  amps_.assign(dim(), cplx(0.0));
  amps_[0] = 1.0;
}

Statevector Statevector::basis(int width, std::uint64_t index) {
  Statevector s(width);
  if (index >= s.dim()) throw std::invalid_argument("Statevector::basis: index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

Statevector Statevector::from_amplitudes(int width, std::vector<cplx> amplitudes) {
  if (width < 0 || width > 30) throw std::invalid_argument("Statevector: width out of range");
  if (amplitudes.size() != (std::uint64_t{1} << width))
    throw std::invalid_argument("Statevector: amplitude count must be 2^width");
  double n2 = 0.0;
  for (const cplx& z : amplitudes) n2 += std::norm(z);
  if (std::abs(n2 - 1.0) > kNormTol)
    throw std::invalid_argument("Statevector: squared amplitudes must sum to 1 within 1e-10");
  return {width, std::move(amplitudes)};
}

double Statevector::norm() const {
  double n2 = 0.0;
  for (const cplx& z : amps_) n2 += std::norm(z);
  return std::sqrt(n2);
}

void apply_gate_inplace(std::vector<cplx>& amps, int width, const Gate& g) {
  if (g.target < 0 || g.target >= width)
    throw std::invalid_argument("apply_gate: target wire outside register");
  const int tbit = width - 1 - g.target;
  const std::uint64_t tmask = std::uint64_t{1} << tbit;
  const cplx m00 = g.matrix.at(0, 0), m01 = g.matrix.at(0, 1);
  const cplx m10 = g.matrix.at(1, 0), m11 = g.matrix.at(1, 1);

  if (!g.is_controlled()) {
    const std::uint64_t pairs = amps.size() >> 1;
    for (std::uint64_t i = 0; i < pairs; ++i) {
      const std::uint64_t i0 = insert_zero_bit(i, tbit);
      const std::uint64_t i1 = i0 | tmask;
      const cplx x0 = amps[i0], x1 = amps[i1];
      amps[i0] = m00 * x0 + m01 * x1;
      amps[i1] = m10 * x0 + m11 * x1;
    }
    return;
  }

  if (g.control < 0 || g.control >= width)
    throw std::invalid_argument("apply_gate: control wire outside register");
  if (g.control == g.target)
    throw std::invalid_argument("apply_gate: control and target wires must differ");
  const int cbit = width - 1 - g.control;
  const std::uint64_t cmask = std::uint64_t{1} << cbit;
  const int b1 = std::min(tbit, cbit), b2 = std::max(tbit, cbit);
  const std::uint64_t quads = amps.size() >> 2;
  for (std::uint64_t i = 0; i < quads; ++i) {
    const std::uint64_t i0 = insert_zero_bit(insert_zero_bit(i, b1), b2) | cmask;
    const std::uint64_t i1 = i0 | tmask;
    const cplx x0 = amps[i0], x1 = amps[i1];
    amps[i0] = m00 * x0 + m01 * x1;
    amps[i1] = m10 * x0 + m11 * x1;
  }
}

Statevector apply_gate(const Statevector& state, const Gate& g) {
  std::vector<cplx> amps = state.amplitudes();
  apply_gate_inplace(amps, state.width(), g);
  Statevector out = state;
  out.amplitudes() = std::move(amps);
  return out;
}

Statevector run_statevector(const Circuit& c, const Statevector& input) {
  if (c.width() != input.width())
    throw std::invalid_argument("run_statevector: circuit and state widths differ");
  Statevector out = input;
  for (const Gate& g : c.gates()) apply_gate_inplace(out.amplitudes(), out.width(), g);
  return out;
}

double max_entry_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim != b.dim) throw std::invalid_argument("max_entry_diff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i)
    worst = std::max(worst, std::abs(a.data[i] - b.data[i]));
  return worst;
}

DenseMatrix circuit_unitary(const Circuit& c) {
  if (c.width() > kDenseWidthCap)
    throw std::invalid_argument(
        "circuit_unitary: width exceeds the dense limit of 12 wires; use statevector checks");
  const std::uint64_t dim = std::uint64_t{1} << c.width();
  DenseMatrix m;
  m.dim = dim;
  m.data.assign(dim * dim, cplx(0.0));
  parallel_chunks(dim, [&](std::size_t begin, std::size_t end) {
    std::vector<cplx> col(dim);
    for (std::uint64_t j = begin; j < end; ++j) {
      std::fill(col.begin(), col.end(), cplx(0.0));
      col[j] = 1.0;
      for (const Gate& g : c.gates()) apply_gate_inplace(col, c.width(), g);
      std::copy(col.begin(), col.end(), m.data.begin() + static_cast<std::ptrdiff_t>(j * dim));
    }
  });
  return m;
}

Statevector oracle_cnu(const MCGateSpec& spec, const Statevector& state) {
  if (spec.controls < 0) throw std::invalid_argument("oracle_cnu: control count must be >= 0");
  if (state.width() != spec.controls + 1)
    throw std::invalid_argument("oracle_cnu: register width must equal n+1");
  Statevector out = state;
  auto& amps = out.amplitudes();
  // Every non-target wire is a control, so exactly one amplitude pair mixes:
  // the top two indices (all controls 1, target LSB).
  const std::uint64_t i1 = out.dim() - 1;
  const std::uint64_t i0 = i1 - 1;
  const cplx x0 = amps[i0], x1 = amps[i1];
  amps[i0] = spec.unitary.at(0, 0) * x0 + spec.unitary.at(0, 1) * x1;
  amps[i1] = spec.unitary.at(1, 0) * x0 + spec.unitary.at(1, 1) * x1;
  return out;
}

namespace {

void apply_pauli_inplace(std::vector<cplx>& amps, int width, int wire, std::uint32_t pauli) {
  if (pauli == 0) return;
  const int bit = width - 1 - wire;
  const std::uint64_t mask = std::uint64_t{1} << bit;
  const std::uint64_t pairs = amps.size() >> 1;
  for (std::uint64_t i = 0; i < pairs; ++i) {
    const std::uint64_t i0 = insert_zero_bit(i, bit);
    const std::uint64_t i1 = i0 | mask;
    const cplx x0 = amps[i0], x1 = amps[i1];
    switch (pauli) {
      case 1:  // X
        amps[i0] = x1;
        amps[i1] = x0;
        break;
      case 2:  // Y
        amps[i0] = cplx(0, -1) * x1;
        amps[i1] = cplx(0, 1) * x0;
        break;
      default:  // Z
        amps[i1] = -x1;
        break;
    }
  }
}

std::uint64_t sample_index(const std::vector<cplx>& amps, double r) {
  double acc = 0.0;
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    acc += std::norm(amps[i]);
    if (r < acc) return i;
  }
  return amps.size() - 1;
}

constexpr std::uint64_t kNoiseStreamTag = 0x74726a6563746f72ull;

}  // namespace

std::string Histogram::bitstring(std::uint64_t index) const {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int w = 0; w < width; ++w)
    if (index & (std::uint64_t{1} << (width - 1 - w))) s[static_cast<std::size_t>(w)] = '1';
  return s;
}

double Histogram::probability(std::uint64_t index) const {
  auto it = counts.find(index);
  if (it == counts.end() || shots == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(shots);
}

double Histogram::probability_all_ones() const {
  return probability((std::uint64_t{1} << width) - 1);
}

std::string Histogram::to_csv() const {
  std::ostringstream out;
  out << "bitstring,count\n";
  for (const auto& [index, count] : counts) out << bitstring(index) << "," << count << "\n";
  return out.str();
}

nlohmann::json Histogram::to_json() const {
  nlohmann::json jcounts = nlohmann::json::object();
  for (const auto& [index, count] : counts) jcounts[bitstring(index)] = count;
  return nlohmann::json{
      {"shots", shots}, {"seed", seed}, {"p", noise_p}, {"width", width}, {"counts", jcounts}};
}

Histogram run_noisy(const Circuit& c, const Statevector& input, const NoiseSpec& noise,
                    std::uint64_t shots) {
  if (!(noise.p >= 0.0 && noise.p <= 1.0))
    throw std::invalid_argument("run_noisy: depolarizing probability must lie in [0, 1]");
  if (!is_lowered(c))
    throw std::invalid_argument("run_noisy: circuit must be lowered to {CX, one-qubit} first");
  if (c.width() != input.width())
    throw std::invalid_argument("run_noisy: circuit and state widths differ");

  Histogram h;
  h.width = c.width();
  h.shots = shots;
  h.noise_p = noise.p;
  h.seed = noise.seed;

  if (noise.p == 0.0) {
    // Noiseless trajectories are identical; evolve once and sample per shot.
    Statevector fin = run_statevector(c, input);
    for (std::uint64_t s = 0; s < shots; ++s) {
      SplitMix64 rng(mix_seed(noise.seed, kNoiseStreamTag, s));
      ++h.counts[sample_index(fin.amplitudes(), rng.next_double())];
    }
    return h;
  }

  std::mutex merge_mutex;
  parallel_chunks(shots, [&](std::size_t begin, std::size_t end) {
    std::map<std::uint64_t, std::uint64_t> local;
    std::vector<cplx> amps;
    for (std::uint64_t s = begin; s < end; ++s) {
      SplitMix64 rng(mix_seed(noise.seed, kNoiseStreamTag, s));
      amps = input.amplitudes();
      for (const Gate& g : c.gates()) {
        apply_gate_inplace(amps, c.width(), g);
        if (g.is_controlled() && rng.next_double() < noise.p)
          apply_pauli_inplace(amps, c.width(), g.control, rng.next_two_bits());
        if (rng.next_double() < noise.p)
          apply_pauli_inplace(amps, c.width(), g.target, rng.next_two_bits());
      }
      ++local[sample_index(amps, rng.next_double())];
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    for (const auto& [index, count] : local) h.counts[index] += count;
  });
  return h;
}

}  // namespace mcuforge

#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace mcuforge {

using cplx = std::complex<double>;

/// Tolerance for construction-time invariants (unitarity, |det| = 1).
inline constexpr double kConstructionTol = 1e-12;
/// Tolerance for reconstruction-style checks (eigen, ZYZ).
inline constexpr double kReconstructionTol = 1e-10;

/// A 2x2 complex unitary, row-major entries (a, b, c, d). Construction
/// verifies U†U = I and |det U| = 1 within kConstructionTol and throws
/// std::invalid_argument otherwise. Values are immutable once built.
class Unitary2 {
 public:
  Unitary2(cplx a, cplx b, cplx c, cplx d);

  static Unitary2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Unitary2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
  static Unitary2 pauli_y() { return {0.0, cplx(0, -1), cplx(0, 1), 0.0}; }
  static Unitary2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }
  static Unitary2 hadamard();

  cplx at(int row, int col) const { return e_[static_cast<std::size_t>(row * 2 + col)]; }
  const std::array<cplx, 4>& entries() const { return e_; }

  bool operator==(const Unitary2& other) const { return e_ == other.e_; }

 private:
  std::array<cplx, 4> e_;
};

/// Eigendecomposition of a Unitary2: eigenphases (radians) and an orthonormal
/// eigenbasis stored as two column vectors. Reconstruction is
/// basis · diag(e^{iφ1}, e^{iφ2}) · basis†. Degenerate (scalar) inputs yield
/// the standard basis.
struct EigenForm2 {
  std::array<double, 2> phases;
  std::array<std::array<cplx, 2>, 2> basis;  // basis[k] is the k-th column
};

/// ZYZ factorization u = e^{iα} · Rz(φ) · Ry(θ) · Rz(λ), θ in [0, π].
struct ZyzAngles {
  double global_phase;
  double theta;
  double phi;
  double lambda;
};

/// Which k-th root of a unitary to take. Principal keeps each eigenphase in
/// (-π, π] and divides by k; Wrapped shifts negative eigenphases by 2π first.
/// Wrapped still satisfies V^k = u but is deliberately inconsistent with the
/// explicit rotation angles used elsewhere; it exists as a mutation hook for
/// the verification suite.
enum class RootBranch { kPrincipal, kWrapped };

/// R_x(θ) = [[cos(θ/2), -i sin(θ/2)], [-i sin(θ/2), cos(θ/2)]].
/// Rejects non-finite angles.
Unitary2 make_rx(double theta);
Unitary2 make_ry(double theta);
Unitary2 make_rz(double theta);
/// diag(1, e^{iφ})
Unitary2 make_phase(double phi);

/// Matrix product a·b.
Unitary2 compose(const Unitary2& a, const Unitary2& b);
/// Conjugate transpose.
Unitary2 adjoint(const Unitary2& a);

/// Closed-form eigendecomposition via the Hermitian part of the
/// determinant-normalized factor, stable down to tiny eigenvalue gaps.
/// Eigenphases lie in (-π, π]; an eigenvalue of exactly -1 maps to +π.
EigenForm2 eigendecompose(const Unitary2& u);
/// basis · diag(e^{iφ1}, e^{iφ2}) · basis†
Unitary2 reconstruct(const EigenForm2& form);

/// The k-th root sharing u's eigenbasis with eigenphases φ/k (principal
/// branch). Satisfies root^k = u, commutes with u, and principal_root(u, 1)
/// returns u unchanged. k = 0 is rejected.
Unitary2 principal_root(const Unitary2& u, std::int64_t k, RootBranch branch = RootBranch::kPrincipal);
/// Same root for k = 2^log2_k; supports exponents far beyond integer range
/// (the eigenphase is scaled by ldexp).
Unitary2 principal_root_pow2(const Unitary2& u, int log2_k, RootBranch branch = RootBranch::kPrincipal);

/// Gimbal-locked inputs (θ = 0 or π) resolve with λ = 0.
ZyzAngles zyz_decompose(const Unitary2& u);
Unitary2 zyz_reconstruct(const ZyzAngles& z);

/// Max-absolute-entry difference. With up_to_global_phase, one factor is first
/// rotated by the unit phase aligning the largest-magnitude entry.
double distance(const Unitary2& a, const Unitary2& b, bool up_to_global_phase = false);

/// Haar-random SU(2) element: uniform φ, λ and cos θ drawn through the ZYZ
/// parametrization. Deterministic per seed.
Unitary2 random_su2(std::uint64_t seed);

}  // namespace mcuforge

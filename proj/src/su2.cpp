#include "mcuforge/su2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mcuforge/rng.hpp"

namespace mcuforge {

namespace {

constexpr double kPi = std::numbers::pi;

cplx det2(const Unitary2& u) { return u.at(0, 0) * u.at(1, 1) - u.at(0, 1) * u.at(1, 0); }

}  // namespace

Unitary2::Unitary2(cplx a, cplx b, cplx c, cplx d) : e_{a, b, c, d} {
  // Gram matrix of the columns; g10 is the conjugate of g01.
  cplx g00 = std::conj(a) * a + std::conj(c) * c;
  cplx g01 = std::conj(a) * b + std::conj(c) * d;
  cplx g11 = std::conj(b) * b + std::conj(d) * d;
  double err = std::max({std::abs(g00 - 1.0), std::abs(g01), std::abs(g11 - 1.0)});
  if (!(err <= kConstructionTol))
    throw std::invalid_argument("Unitary2: matrix is not unitary within 1e-12");
  double dm = std::abs(a * d - b * c);
  if (!(std::abs(dm - 1.0) <= kConstructionTol))
    throw std::invalid_argument("Unitary2: determinant modulus differs from 1 beyond 1e-12");
}

Unitary2 Unitary2::hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return {s, s, s, -s};
}

Unitary2 make_rx(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("make_rx: angle must be finite");
  double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return {c, cplx(0, -s), cplx(0, -s), c};
}

Unitary2 make_ry(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("make_ry: angle must be finite");
  double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return {c, -s, s, c};
}

Unitary2 make_rz(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("make_rz: angle must be finite");
  return {std::polar(1.0, -theta / 2.0), 0.0, 0.0, std::polar(1.0, theta / 2.0)};
}

Unitary2 make_phase(double phi) {
  if (!std::isfinite(phi)) throw std::invalid_argument("make_phase: angle must be finite");
  return {1.0, 0.0, 0.0, std::polar(1.0, phi)};
}

Unitary2 compose(const Unitary2& a, const Unitary2& b) {
  return {a.at(0, 0) * b.at(0, 0) + a.at(0, 1) * b.at(1, 0),
          a.at(0, 0) * b.at(0, 1) + a.at(0, 1) * b.at(1, 1),
          a.at(1, 0) * b.at(0, 0) + a.at(1, 1) * b.at(1, 0),
          a.at(1, 0) * b.at(0, 1) + a.at(1, 1) * b.at(1, 1)};
}

Unitary2 adjoint(const Unitary2& a) {
  return {std::conj(a.at(0, 0)), std::conj(a.at(1, 0)), std::conj(a.at(0, 1)),
          std::conj(a.at(1, 1))};
}

namespace {

double wrap_phase(double phi) {
  if (phi > kPi) return phi - 2.0 * kPi;
  if (phi <= -kPi) return phi + 2.0 * kPi;
  return phi;
}

}  // namespace

EigenForm2 eigendecompose(const Unitary2& u) {
  const cplx a = u.at(0, 0), b = u.at(0, 1), c = u.at(1, 0), d = u.at(1, 1);
  EigenForm2 out;
  // A unitary with negligible off-diagonals is diagonal (this also covers the
  // degenerate scalar case, which gets the standard basis).
  if (std::abs(b) < 1e-13 && std::abs(c) < 1e-13) {
    out.phases = {std::arg(a), std::arg(d)};
    out.basis = {{{cplx(1), cplx(0)}, {cplx(0), cplx(1)}}};
    return out;
  }
  // Split U = e^{iμ} V with V special unitary. V = cos(δ)I - i sin(δ) n·σ,
  // so the Hermitian matrix K = (i/2)(V - V†) = sin(δ) n·σ carries the
  // eigenbasis. Solving the Hermitian problem keeps the eigenvectors accurate
  // even when the eigenvalue gap 2δ is tiny: the direction error scales with
  // 1/r and cancels against the gap in the reconstruction.
  const double mu = 0.5 * std::arg(det2(u));
  const cplx ph = std::polar(1.0, -mu);
  const cplx va = ph * a, vb = ph * b, vc = ph * c, vd = ph * d;
  const double k = -0.5 * (va.imag() - vd.imag());      // K_00
  const cplx w = cplx(0.0, 0.5) * (vb - std::conj(vc));  // K_01
  const double r = std::sqrt(k * k + std::norm(w));
  // Indistinguishable from a scalar matrix at working precision (possible only
  // for inputs at the edge of the construction tolerance).
  if (r < 1e-14) {
    out.phases = {std::arg(a), std::arg(d)};
    out.basis = {{{cplx(1), cplx(0)}, {cplx(0), cplx(1)}}};
    return out;
  }
  const double cos_delta = 0.5 * (va.real() + vd.real());
  const double delta = std::atan2(r, cos_delta);  // in [0, π]
  // Eigenvector of K for +r, from the better-conditioned column.
  cplx v0, v1;
  if (k <= 0.0) {
    v0 = w;
    v1 = r - k;
  } else {
    v0 = r + k;
    v1 = std::conj(w);
  }
  const double nrm = std::sqrt(std::norm(v0) + std::norm(v1));
  v0 /= nrm;
  v1 /= nrm;
  // n·σ = +1 means the V eigenvalue e^{-iδ}; the orthogonal complement gets
  // e^{+iδ}.
  out.phases = {wrap_phase(mu - delta), wrap_phase(mu + delta)};
  out.basis = {{{v0, v1}, {-std::conj(v1), std::conj(v0)}}};
  return out;
}

Unitary2 reconstruct(const EigenForm2& form) {
  cplx e1 = std::polar(1.0, form.phases[0]);
  cplx e2 = std::polar(1.0, form.phases[1]);
  const auto& v = form.basis[0];
  const auto& w = form.basis[1];
  return {e1 * v[0] * std::conj(v[0]) + e2 * w[0] * std::conj(w[0]),
          e1 * v[0] * std::conj(v[1]) + e2 * w[0] * std::conj(w[1]),
          e1 * v[1] * std::conj(v[0]) + e2 * w[1] * std::conj(w[0]),
          e1 * v[1] * std::conj(v[1]) + e2 * w[1] * std::conj(w[1])};
}

namespace {

double branch_phase(double phi, RootBranch branch) {
  if (branch == RootBranch::kWrapped && phi < 0.0) return phi + 2.0 * kPi;
  return phi;
}

}  // namespace

Unitary2 principal_root(const Unitary2& u, std::int64_t k, RootBranch branch) {
  if (k < 1) throw std::invalid_argument("principal_root: k must be >= 1");
  if (k == 1) return u;
  EigenForm2 form = eigendecompose(u);
  form.phases[0] = branch_phase(form.phases[0], branch) / static_cast<double>(k);
  form.phases[1] = branch_phase(form.phases[1], branch) / static_cast<double>(k);
  return reconstruct(form);
}

Unitary2 principal_root_pow2(const Unitary2& u, int log2_k, RootBranch branch) {
  if (log2_k < 0) throw std::invalid_argument("principal_root_pow2: exponent must be >= 0");
  if (log2_k == 0) return u;
  EigenForm2 form = eigendecompose(u);
  form.phases[0] = std::ldexp(branch_phase(form.phases[0], branch), -log2_k);
  form.phases[1] = std::ldexp(branch_phase(form.phases[1], branch), -log2_k);
  return reconstruct(form);
}

ZyzAngles zyz_decompose(const Unitary2& u) {
  double alpha = 0.5 * std::arg(det2(u));
  cplx ph = std::polar(1.0, -alpha);
  // v = e^{-iα}·u is special unitary up to rounding.
  cplx v00 = ph * u.at(0, 0), v10 = ph * u.at(1, 0), v11 = ph * u.at(1, 1);
  double theta = 2.0 * std::atan2(std::abs(v10), std::abs(v00));
  double phi, lambda;
  if (std::abs(v10) == 0.0) {
    lambda = 0.0;
    phi = 2.0 * std::arg(v11);
  } else if (std::abs(v00) == 0.0) {
    lambda = 0.0;
    phi = 2.0 * std::arg(v10);
  } else {
    phi = std::arg(v11) + std::arg(v10);
    lambda = std::arg(v11) - std::arg(v10);
  }
  return {alpha, theta, phi, lambda};
}

Unitary2 zyz_reconstruct(const ZyzAngles& z) {
  Unitary2 m = compose(make_rz(z.phi), compose(make_ry(z.theta), make_rz(z.lambda)));
  cplx ph = std::polar(1.0, z.global_phase);
  return {ph * m.at(0, 0), ph * m.at(0, 1), ph * m.at(1, 0), ph * m.at(1, 1)};
}

double distance(const Unitary2& a, const Unitary2& b, bool up_to_global_phase) {
  cplx phase(1.0, 0.0);
  if (up_to_global_phase) {
    int best = 0;
    for (int i = 1; i < 4; ++i)
      if (std::abs(a.entries()[static_cast<std::size_t>(i)]) >
          std::abs(a.entries()[static_cast<std::size_t>(best)]))
        best = i;
    cplx r = b.entries()[static_cast<std::size_t>(best)] *
             std::conj(a.entries()[static_cast<std::size_t>(best)]);
    if (std::abs(r) > 0.0) phase = r / std::abs(r);
  }
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    worst = std::max(worst, std::abs(phase * a.entries()[static_cast<std::size_t>(i)] -
                                     b.entries()[static_cast<std::size_t>(i)]));
  return worst;
}

Unitary2 random_su2(std::uint64_t seed) {
  SplitMix64 g(seed);
  double phi = 2.0 * kPi * g.next_double();
  double lambda = 2.0 * kPi * g.next_double();
  double theta = std::acos(1.0 - 2.0 * g.next_double());
  return compose(make_rz(phi), compose(make_ry(theta), make_rz(lambda)));
}

}  // namespace mcuforge

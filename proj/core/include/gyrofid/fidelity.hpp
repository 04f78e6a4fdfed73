#pragma once

#include "gyrofid/gyrogroup.hpp"
#include "gyrofid/linalg.hpp"

namespace gyrofid {

/// Qubit state (1/2)(I + v_x sigma_x + v_y sigma_y + v_z sigma_z) for a
/// Bloch vector inside the unit ball.
class QubitDensity {
 public:
  explicit QubitDensity(BallVector bloch);

  const Hermitian2& entries() const noexcept { return entries_; }
  const BallVector& bloch() const noexcept { return bloch_; }

 private:
  BallVector bloch_;
  Hermitian2 entries_;
};

QubitDensity qubit_density(const BallVector& v);

/// B(v) / tr B(v).
class NormalizedBoost {
 public:
  explicit NormalizedBoost(BallVector generator);

  const SymmetricMatrix& matrix() const noexcept { return matrix_; }
  const BallVector& generator() const noexcept { return generator_; }

 private:
  BallVector generator_;
  SymmetricMatrix matrix_;
};

NormalizedBoost normalized_boost(const BallVector& v);

/// tr sqrt(rho^{1/2} sigma rho^{1/2}) for positive semidefinite inputs of
/// equal size. Trace one is not required.
double fidelity_spectral(const SymmetricMatrix& rho, const SymmetricMatrix& sigma);

/// Lorentz factor of w = half(u) (+) half(v):
///   ((1 + g_u)(1 + g_v) + g_u g_v u.v) / (2 sqrt((1 + g_u)(1 + g_v))).
GammaFactor gamma_midpoint(const BallVector& u, const BallVector& v);

/// F(B(u)/tr B(u), B(v)/tr B(v)) = (2 g_w + n - 1) / sqrt((2 g_u + n - 1)(2 g_v + n - 1))
/// with w the midpoint above.
double fidelity_boost_closed(const BallVector& u, const BallVector& v, int n);

/// tr (B(u) B(v)^2 B(u))^{1/2} = 2 g_{u(+)v} + n - 1.
double trace_sqrt_product(const BallVector& u, const BallVector& v);
/// The same trace through explicit matrices and sqrt_psd.
double trace_sqrt_product_spectral(const BallVector& u, const BallVector& v);

/// F(mu_{n,u}, mu_{n,v}) = (2 g_{u(+)v} + n - 1) / sqrt((4 g_u^2 + n - 3)(4 g_v^2 + n - 3)).
double fidelity_mobius_closed(const BallVector& u, const BallVector& v, int n);

/// Squared qubit fidelity from the density matrices: tr(rho sigma) + 2 sqrt(det rho det sigma).
double qubit_fidelity_sq(const BallVector& u, const BallVector& v);
/// (1 + g_{u(+)v}) / (2 g_u g_v).
double qubit_fidelity_sq_gamma(const BallVector& u, const BallVector& v);
/// (1 + u.v + sqrt(1 - |u|^2) sqrt(1 - |v|^2)) / 2.
double qubit_fidelity_sq_bloch(const BallVector& u, const BallVector& v);

}  // namespace gyrofid

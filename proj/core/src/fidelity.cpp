#include "gyrofid/fidelity.hpp"

#include <cmath>
#include <string>

#include "gyrofid/error.hpp"
#include "gyrofid/lorentz.hpp"

namespace gyrofid {

namespace {

void check_pair(const BallVector& u, const BallVector& v, int n, int min_n) {
  if (n < min_n) {
    throw Error(ErrorCode::invalid_argument,
                "n must be ≥ " + std::to_string(min_n) + " (got " + std::to_string(n) + ")");
  }
  if (u.dim() != static_cast<std::size_t>(n) || v.dim() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::dimension_mismatch, "vectors must have dim n = " + std::to_string(n));
  }
}

void require_bloch(const BallVector& v) {
  if (v.dim() != 3) {
    throw Error(ErrorCode::dimension_mismatch, "Bloch vectors have dim 3");
  }
}

}  // namespace

QubitDensity::QubitDensity(BallVector bloch) : bloch_(std::move(bloch)) {
  require_bloch(bloch_);
  entries_.top = 0.5 * (1.0 + bloch_[2]);
  entries_.bottom = 0.5 * (1.0 - bloch_[2]);
  entries_.off = {0.5 * bloch_[0], 0.5 * bloch_[1]};
}

QubitDensity qubit_density(const BallVector& v) { return QubitDensity(v); }

NormalizedBoost::NormalizedBoost(BallVector generator)
    : generator_(std::move(generator)), matrix_(1) {
  const LorentzBoost b = boost(generator_);
  matrix_ = (1.0 / trace(b.matrix())) * b.matrix();
}

NormalizedBoost normalized_boost(const BallVector& v) { return NormalizedBoost(v); }

double fidelity_spectral(const SymmetricMatrix& rho, const SymmetricMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "fidelity of matrices with different dims");
  }
  const Matrix root = sqrt_psd(rho).dense();
  const SymmetricMatrix inner = SymmetricMatrix::symmetrize(root * sigma.dense() * root);
  return trace(sqrt_psd(inner));
}

GammaFactor gamma_midpoint(const BallVector& u, const BallVector& v) {
  if (u.dim() != v.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "gamma_midpoint needs equal dims");
  }
  const double gu = gamma(u).value();
  const double gv = gamma(v).value();
  const double p = (1.0 + gu) * (1.0 + gv);
  return GammaFactor((p + gu * gv * dot(u.components(), v.components())) / (2.0 * std::sqrt(p)));
}

double fidelity_boost_closed(const BallVector& u, const BallVector& v, int n) {
  check_pair(u, v, n, 1);
  const double gw = gamma_midpoint(u, v).value();
  const double gu = gamma(u).value();
  const double gv = gamma(v).value();
  return (2.0 * gw + n - 1) / std::sqrt((2.0 * gu + n - 1) * (2.0 * gv + n - 1));
}

double trace_sqrt_product(const BallVector& u, const BallVector& v) {
  const double n = static_cast<double>(u.dim());
  return 2.0 * gamma_add(u, v).value() + n - 1.0;
}

double trace_sqrt_product_spectral(const BallVector& u, const BallVector& v) {
  return trace(star(boost(u), boost(v)));
}

double fidelity_mobius_closed(const BallVector& u, const BallVector& v, int n) {
  check_pair(u, v, n, 3);
  const double gsum = gamma_add(u, v).value();
  const double gu = gamma(u).value();
  const double gv = gamma(v).value();
  return (2.0 * gsum + n - 1) / std::sqrt((4.0 * gu * gu + n - 3) * (4.0 * gv * gv + n - 3));
}

double qubit_fidelity_sq(const BallVector& u, const BallVector& v) {
  const QubitDensity rho = qubit_density(u);
  const QubitDensity sigma = qubit_density(v);
  return trace_product(rho.entries(), sigma.entries()) +
         2.0 * std::sqrt(det(rho.entries()) * det(sigma.entries()));
}

double qubit_fidelity_sq_gamma(const BallVector& u, const BallVector& v) {
  require_bloch(u);
  require_bloch(v);
  return (1.0 + gamma_add(u, v).value()) / (2.0 * gamma(u).value() * gamma(v).value());
}

double qubit_fidelity_sq_bloch(const BallVector& u, const BallVector& v) {
  require_bloch(u);
  require_bloch(v);
  return 0.5 * (1.0 + dot(u.components(), v.components()) +
                std::sqrt(1.0 - u.norm_squared()) * std::sqrt(1.0 - v.norm_squared()));
}

}  // namespace gyrofid

#pragma once

#include <span>
#include <vector>

#include "gyrofid/gyrogroup.hpp"
#include "gyrofid/linalg.hpp"

namespace gyrofid {

/// Rotation-free Lorentz transformation B(v) acting on (t, x_1, ..., x_n):
///
///   [ gamma      gamma v^T                       ]
///   [ gamma v    I + gamma^2 / (1 + gamma) v v^T ]
class LorentzBoost {
 public:
  explicit LorentzBoost(BallVector generator);

  /// Re-wraps a matrix produced by star/ast once its generator is known.
  /// Throws ErrorCode::invalid_argument when the matrix is further than
  /// `tolerance` (max-norm) from B(generator).
  static LorentzBoost from_matrix(const SymmetricMatrix& matrix, BallVector generator,
                                  double tolerance);

  const SymmetricMatrix& matrix() const noexcept { return matrix_; }
  const BallVector& generator() const noexcept { return generator_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }

 private:
  BallVector generator_;
  SymmetricMatrix matrix_;
};

LorentzBoost boost(const BallVector& v);

/// The spacetime vector B(u) (gamma_v, gamma_v v) read back as a gamma factor
/// and a velocity.
struct BoostImage {
  GammaFactor gamma;
  BallVector velocity;
};

BoostImage boost_apply(const BallVector& u, const BallVector& v);

/// (P Q^2 P)^{1/2}; B(u) star B(v) = B(u (+) v).
SymmetricMatrix star(const SymmetricMatrix& p, const SymmetricMatrix& q);
SymmetricMatrix star(const LorentzBoost& p, const LorentzBoost& q);

/// P^{1/2} Q P^{1/2}; B(u)^2 ast B(v)^2 = B(u (+) v)^2.
SymmetricMatrix ast(const SymmetricMatrix& p, const SymmetricMatrix& q);
SymmetricMatrix ast(const LorentzBoost& p, const LorentzBoost& q);

/// Relativistic Doppler factor sqrt((1 + |v|) / (1 - |v|)), the largest
/// eigenvalue of B(v).
double doppler_factor(const BallVector& v);

/// B(v) = frame^T diag(diagonal) frame, diagonal = (lambda, 1/lambda, 1, ..., 1).
struct BoostDiagonalization {
  Matrix frame;
  std::vector<double> diagonal;
};

/// Throws ErrorCode::degenerate_direction for v = 0.
BoostDiagonalization boost_diag(const BallVector& v);

/// -s t + sum x_i y_i for x = (s, x_1, ...), y = (t, y_1, ...).
double lorentz_form(std::span<const double> x, std::span<const double> y);

/// diag(-1, 1, ..., 1) of size n + 1.
SymmetricMatrix minkowski_metric(std::size_t n);

}  // namespace gyrofid

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gyrofid {

/// Admissible velocities satisfy |v| <= 1 - kBallMargin (units where c = 1).
inline constexpr double kBallMargin = 1e-12;

double dot(std::span<const double> a, std::span<const double> b);

/// A velocity strictly inside the open unit ball of R^n.
class BallVector {
 public:
  /// Throws ErrorCode::ball_violation when |v| > 1 - kBallMargin and
  /// ErrorCode::invalid_argument for an empty or non-finite vector.
  explicit BallVector(std::vector<double> components);

  static BallVector zero(std::size_t dim);

  std::size_t dim() const noexcept { return components_.size(); }
  std::span<const double> components() const noexcept { return components_; }
  double operator[](std::size_t i) const { return components_[i]; }

  double norm_squared() const { return dot(components_, components_); }
  double norm() const;
  bool is_zero() const;

  /// Gyrogroup inverse; componentwise negation.
  BallVector operator-() const;

  friend bool operator==(const BallVector&, const BallVector&) = default;

 private:
  std::vector<double> components_;
};

/// Lorentz factor, always >= 1.
class GammaFactor {
 public:
  /// Values below 1 can only arise from round-off and are raised to 1.
  explicit GammaFactor(double value);

  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// Largest componentwise difference; throws on dimension mismatch.
double max_abs_diff(const BallVector& a, const BallVector& b);

GammaFactor gamma(const BallVector& v);

/// Einstein velocity addition u (+) v.
BallVector einstein_add(const BallVector& u, const BallVector& v);

/// Thomas gyration gyr[u, v] w, obtained as -(u (+) v) (+) (u (+) (v (+) w)).
BallVector gyration(const BallVector& u, const BallVector& v, const BallVector& w);

/// The unique w with w (+) w = v.
BallVector half(const BallVector& v);

/// v (+) v in closed form, scaling v by 2 gamma^2 / (2 gamma^2 - 1).
BallVector doubled(const BallVector& v);

/// gamma of u (+) v without forming the sum: gamma_u gamma_v (1 + u.v).
GammaFactor gamma_add(const BallVector& u, const BallVector& v);

}  // namespace gyrofid

#include "gyrofid/gyrogroup.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gyrofid/error.hpp"

namespace gyrofid {

namespace {

void require_same_dim(const BallVector& u, const BallVector& v) {
  if (u.dim() != v.dim()) {
    throw Error(ErrorCode::dimension_mismatch,
                "ball vector dims differ: " + std::to_string(u.dim()) + " vs " +
                    std::to_string(v.dim()));
  }
}

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::dimension_mismatch, "dot product of vectors of different length");
  }
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

BallVector::BallVector(std::vector<double> components) : components_(std::move(components)) {
  if (components_.empty()) {
    throw Error(ErrorCode::invalid_argument, "ball vector must have dim >= 1");
  }
  if (!std::all_of(components_.begin(), components_.end(),
                   [](double x) { return std::isfinite(x); })) {
    throw Error(ErrorCode::invalid_argument, "ball vector components must be finite");
  }
  const double r = norm();
  if (r > 1.0 - kBallMargin) {
    throw Error(ErrorCode::ball_violation,
                "ball violation: |v| = " + std::to_string(r) + " is not below 1");
  }
}

BallVector BallVector::zero(std::size_t dim) { return BallVector(std::vector<double>(dim, 0.0)); }

double BallVector::norm() const { return std::sqrt(norm_squared()); }

bool BallVector::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](double x) { return x == 0.0; });
}

BallVector BallVector::operator-() const {
  std::vector<double> neg(components_.size());
  std::transform(components_.begin(), components_.end(), neg.begin(),
                 [](double x) { return -x; });
  return BallVector(std::move(neg));
}

GammaFactor::GammaFactor(double value) : value_(std::max(value, 1.0)) {}

double max_abs_diff(const BallVector& a, const BallVector& b) {
  require_same_dim(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

GammaFactor gamma(const BallVector& v) {
  const double r = v.norm();
  return GammaFactor(1.0 / std::sqrt((1.0 - r) * (1.0 + r)));
}

BallVector einstein_add(const BallVector& u, const BallVector& v) {
  require_same_dim(u, v);
  const double gu = gamma(u).value();
  const double uv = dot(u.components(), v.components());
  const double along_u = 1.0 + gu / (1.0 + gu) * uv;
  const double scale = 1.0 / (1.0 + uv);

  std::vector<double> sum(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    sum[i] = scale * (along_u * u[i] + v[i] / gu);
  }
  return BallVector(std::move(sum));
}

BallVector gyration(const BallVector& u, const BallVector& v, const BallVector& w) {
  require_same_dim(u, v);
  require_same_dim(v, w);
  return einstein_add(-einstein_add(u, v), einstein_add(u, einstein_add(v, w)));
}

BallVector half(const BallVector& v) {
  const double g = gamma(v).value();
  const double k = g / (1.0 + g);
  std::vector<double> out(v.dim());
  std::transform(v.components().begin(), v.components().end(), out.begin(),
                 [k](double x) { return k * x; });
  return BallVector(std::move(out));
}

BallVector doubled(const BallVector& v) {
  const double g2 = 1.0 / (1.0 - v.norm_squared());
  const double k = 2.0 * g2 / (2.0 * g2 - 1.0);
  std::vector<double> out(v.dim());
  std::transform(v.components().begin(), v.components().end(), out.begin(),
                 [k](double x) { return k * x; });
  return BallVector(std::move(out));
}

GammaFactor gamma_add(const BallVector& u, const BallVector& v) {
  require_same_dim(u, v);
  return GammaFactor(gamma(u).value() * gamma(v).value() *
                     (1.0 + dot(u.components(), v.components())));
}

}  // namespace gyrofid

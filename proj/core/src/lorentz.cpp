#include "gyrofid/lorentz.hpp"

#include <cmath>
#include <string>

#include "gyrofid/error.hpp"
#include "gyrofid/mobius.hpp"

namespace gyrofid {

namespace {

SymmetricMatrix boost_matrix(const BallVector& v) {
  const std::size_t n = v.dim();
  const double g = gamma(v).value();
  const double k = g * g / (1.0 + g);
  SymmetricMatrix b(n + 1);
  b.set(0, 0, g);
  for (std::size_t i = 0; i < n; ++i) {
    b.set(i + 1, 0, g * v[i]);
    for (std::size_t j = 0; j <= i; ++j) {
      b.set(i + 1, j + 1, (i == j ? 1.0 : 0.0) + k * v[i] * v[j]);
    }
  }
  return b;
}

}  // namespace

LorentzBoost::LorentzBoost(BallVector generator)
    : generator_(std::move(generator)), matrix_(boost_matrix(generator_)) {}

LorentzBoost LorentzBoost::from_matrix(const SymmetricMatrix& matrix, BallVector generator,
                                       double tolerance) {
  LorentzBoost b(std::move(generator));
  if (matrix.dim() != b.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "matrix does not match generator dim");
  }
  const double err = max_abs_diff(matrix, b.matrix());
  if (!(err <= tolerance)) {
    throw Error(ErrorCode::invalid_argument,
                "matrix is not the boost of the given generator (error " + std::to_string(err) +
                    ")");
  }
  return b;
}

LorentzBoost boost(const BallVector& v) { return LorentzBoost(v); }

BoostImage boost_apply(const BallVector& u, const BallVector& v) {
  if (u.dim() != v.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "boost_apply needs equal dims");
  }
  const std::size_t n = v.dim();
  const SymmetricMatrix b = boost(u).matrix();
  const double gv = gamma(v).value();

  std::vector<double> event(n + 1);
  event[0] = gv;
  for (std::size_t i = 0; i < n; ++i) event[i + 1] = gv * v[i];

  std::vector<double> image(n + 1, 0.0);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) image[i] += b(i, j) * event[j];

  std::vector<double> velocity(n);
  for (std::size_t i = 0; i < n; ++i) velocity[i] = image[i + 1] / image[0];
  return {GammaFactor(image[0]), BallVector(std::move(velocity))};
}

SymmetricMatrix star(const SymmetricMatrix& p, const SymmetricMatrix& q) {
  const Matrix pd = p.dense();
  const Matrix qd = q.dense();
  return sqrt_psd(SymmetricMatrix::symmetrize(pd * qd * qd * pd));
}

SymmetricMatrix star(const LorentzBoost& p, const LorentzBoost& q) {
  return star(p.matrix(), q.matrix());
}

SymmetricMatrix ast(const SymmetricMatrix& p, const SymmetricMatrix& q) {
  const Matrix root = sqrt_psd(p).dense();
  return SymmetricMatrix::symmetrize(root * q.dense() * root);
}

SymmetricMatrix ast(const LorentzBoost& p, const LorentzBoost& q) {
  return ast(p.matrix(), q.matrix());
}

double doppler_factor(const BallVector& v) {
  const double r = v.norm();
  return std::sqrt((1.0 + r) / (1.0 - r));
}

BoostDiagonalization boost_diag(const BallVector& v) {
  if (v.is_zero()) {
    throw Error(ErrorCode::degenerate_direction,
                "boost_diag: B(0) = I has no canonical eigenframe");
  }
  const double lambda = doppler_factor(v);
  std::vector<double> d(v.dim() + 1, 1.0);
  d[0] = lambda;
  d[1] = 1.0 / lambda;
  return {orthogonal_frame(v).matrix, std::move(d)};
}

double lorentz_form(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.empty()) {
    throw Error(ErrorCode::dimension_mismatch, "lorentz_form needs equal non-empty dims");
  }
  return -x[0] * y[0] + dot(x.subspan(1), y.subspan(1));
}

SymmetricMatrix minkowski_metric(std::size_t n) {
  SymmetricMatrix eta = SymmetricMatrix::identity(n + 1);
  eta.set(0, 0, -1.0);
  return eta;
}

}  // namespace gyrofid

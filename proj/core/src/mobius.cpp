#include "gyrofid/mobius.hpp"

#include <cmath>
#include <string>

#include "gyrofid/error.hpp"
#include "gyrofid/lorentz.hpp"

namespace gyrofid {

namespace {

void check_mobius_args(int n, const BallVector& v) {
  if (n < 3) {
    throw Error(ErrorCode::invalid_argument, "n must be ≥ 3 (got " + std::to_string(n) + ")");
  }
  if (v.dim() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::dimension_mismatch,
                "generator has dim " + std::to_string(v.dim()) + " but n = " + std::to_string(n));
  }
}

void require_nonzero(const BallVector& v, const char* what) {
  if (v.is_zero()) {
    throw Error(ErrorCode::degenerate_direction,
                std::string(what) + ": direction of the zero vector is undefined");
  }
}

}  // namespace

MobiusMatrix mobius(int n, const BallVector& v) {
  check_mobius_args(n, v);
  const double r2 = v.norm_squared();
  const double inv_gamma_sq = 1.0 - r2;
  const double half_inv = 0.5 * inv_gamma_sq;
  const double prefactor = 2.0 / ((n - 3) * inv_gamma_sq + 4.0);

  SymmetricMatrix m(static_cast<std::size_t>(n) + 1);
  m.set(0, 0, prefactor * (1.0 - half_inv));
  for (std::size_t i = 0; i < v.dim(); ++i) {
    m.set(i + 1, 0, prefactor * v[i]);
    for (std::size_t j = 0; j <= i; ++j) {
      m.set(i + 1, j + 1, prefactor * ((i == j ? half_inv : 0.0) + v[i] * v[j]));
    }
  }
  return MobiusMatrix(n, v, std::move(m));
}

MobiusMatrix mobius_from_boost(int n, const BallVector& v) {
  check_mobius_args(n, v);
  const SymmetricMatrix b = boost(v).matrix();
  const SymmetricMatrix squared = SymmetricMatrix::symmetrize(b * b);
  return MobiusMatrix(n, v, (1.0 / trace(squared)) * squared);
}

double mobius_det_closed(int n, const BallVector& v) {
  check_mobius_args(n, v);
  const double r2 = v.norm_squared();
  return std::pow((1.0 - r2) / ((n + 1) - (n - 3) * r2), n + 1);
}

std::vector<std::vector<double>> orthonormal_complement(const BallVector& v) {
  require_nonzero(v, "orthonormal_complement");
  const std::size_t n = v.dim();
  const double r = v.norm();

  std::size_t pivot = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(v[i]) > std::abs(v[pivot])) pivot = i;
  }

  std::vector<std::vector<double>> basis;
  basis.reserve(n);
  std::vector<double> direction(n);
  for (std::size_t i = 0; i < n; ++i) direction[i] = v[i] / r;
  basis.push_back(direction);

  for (std::size_t seed = 0; seed < n; ++seed) {
    if (seed == pivot) continue;
    std::vector<double> e(n, 0.0);
    e[seed] = 1.0;
    for (const auto& b : basis) {
      const double proj = dot(e, b);
      for (std::size_t i = 0; i < n; ++i) e[i] -= proj * b[i];
    }
    const double len = std::sqrt(dot(e, e));
    for (double& x : e) x /= len;
    basis.push_back(std::move(e));
  }
  basis.erase(basis.begin());
  return basis;
}

OrthogonalFrame orthogonal_frame(const BallVector& v) {
  require_nonzero(v, "orthogonal_frame");
  const std::size_t n = v.dim();
  const double r = v.norm();
  const double s = 1.0 / std::sqrt(2.0);

  OrthogonalFrame frame{Matrix(n + 1, n + 1), orthonormal_complement(v)};
  frame.matrix(0, 0) = s;
  frame.matrix(1, 0) = -s;
  for (std::size_t i = 0; i < n; ++i) {
    frame.matrix(0, i + 1) = s * v[i] / r;
    frame.matrix(1, i + 1) = s * v[i] / r;
  }
  for (std::size_t j = 0; j + 1 < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) frame.matrix(j + 2, i + 1) = frame.complement[j][i];
  }
  return frame;
}

MobiusDiagonalization mobius_diag(int n, const BallVector& v) {
  check_mobius_args(n, v);
  require_nonzero(v, "mobius_diag");
  const double lambda = doppler_factor(v);
  const double g = gamma(v).value();
  const double norm = 1.0 / ((n - 3) + 4.0 * g * g);

  std::vector<double> d(static_cast<std::size_t>(n) + 1, norm);
  d[0] = norm * lambda * lambda;
  d[1] = norm / (lambda * lambda);
  return {orthogonal_frame(v), std::move(d), lambda};
}

SymmetricMatrix congruence(const Matrix& frame, const std::vector<double>& diagonal) {
  if (frame.rows() != frame.cols() || frame.rows() != diagonal.size()) {
    throw Error(ErrorCode::dimension_mismatch, "frame and diagonal sizes differ");
  }
  const std::size_t n = diagonal.size();
  SymmetricMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) sum += frame(k, i) * diagonal[k] * frame(k, j);
      out.set(i, j, sum);
    }
  return out;
}

}  // namespace gyrofid

#include <cmath>

#include "doctest.h"
#include "gyrofid/gyrogroup.hpp"
#include "gyrofid/lorentz.hpp"
#include "gyrofid/sampling.hpp"
#include "test_support.hpp"

using namespace gyrofid;
using namespace gyrofid::testing;

namespace {

// B(u) B(v) = B(u (+) v) diag(1, G) with G the gyration; read G off
// B(-(u (+) v)) B(u) B(v).
std::vector<double> gyration_by_polar_decomposition(const BallVector& u, const BallVector& v,
                                                    const BallVector& w) {
  const Matrix rot = boost(-einstein_add(u, v)).matrix().dense() * boost(u).matrix().dense() *
                     boost(v).matrix().dense();
  std::vector<double> out(w.dim(), 0.0);
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = 0; j < w.dim(); ++j) out[i] += rot(i + 1, j + 1) * w[j];
  return out;
}

}  // namespace

TEST_CASE("ball membership") {
  CHECK(thrown_code([] { vec({1.0, 0.0}); }) == code(ErrorCode::ball_violation));
  CHECK(thrown_code([] { vec({1.0 - 1e-13}); }) == code(ErrorCode::ball_violation));
  CHECK_NOTHROW(vec({1.0 - 1e-11}));
  CHECK(thrown_code([] { BallVector(std::vector<double>{}); }) ==
        code(ErrorCode::invalid_argument));
  CHECK(thrown_code([] { vec({NAN, 0.0}); }) == code(ErrorCode::invalid_argument));
}

TEST_CASE("gamma") {
  CHECK(gamma(BallVector::zero(3)).value() == 1.0);
  CHECK(std::abs(gamma(vec({0.6, 0, 0})).value() - 1.25) <= 1e-15);
  CHECK(std::abs(gamma(vec({0.5, 0, 0})).value() - 2.0 / std::sqrt(3.0)) <= 1e-15);
  CHECK(GammaFactor(0.9999999999999998).value() == 1.0);
}

TEST_CASE("einstein_add") {
  const BallVector u = vec({0.1, -0.4, 0.3});
  CHECK(max_abs_diff(einstein_add(u, BallVector::zero(3)), u) == 0.0);
  CHECK(max_abs_diff(einstein_add(u, -u), BallVector::zero(3)) <= 1e-16);
  CHECK(max_abs_diff(einstein_add(vec({0.5, 0, 0}), vec({0.5, 0, 0})), vec({0.8, 0, 0})) <= 1e-15);
  CHECK(thrown_code([&] { einstein_add(u, vec({0.1, 0.1})); }) ==
        code(ErrorCode::dimension_mismatch));
}

TEST_CASE("collinear addition is the relativistic velocity sum (a + b)/(1 + ab)") {
  Sampler s(1);
  for (int t = 0; t < 500; ++t) {
    const double a = s.uniform(-0.99, 0.99);
    const double b = s.uniform(-0.99, 0.99);
    const BallVector sum = einstein_add(vec({a}), vec({b}));
    CHECK(std::abs(sum[0] - (a + b) / (1.0 + a * b)) <= 1e-14);
  }
}

TEST_CASE("addition is neither commutative nor associative") {
  const BallVector u = vec({0.5, 0, 0});
  const BallVector v = vec({0, 0.5, 0});
  const BallVector w = vec({0.3, 0.3, 0});
  CHECK(max_abs_diff(einstein_add(u, v), einstein_add(v, u)) > 1e-2);
  CHECK(max_abs_diff(einstein_add(u, einstein_add(v, w)), einstein_add(einstein_add(u, v), w)) >
        1e-3);
}

TEST_CASE("gyration") {
  const BallVector w = vec({0.2, -0.3, 0.4});
  const BallVector v = vec({-0.5, 0.1, 0.6});
  CHECK(max_abs_diff(gyration(BallVector::zero(3), v, w), w) <= 1e-15);
  CHECK(max_abs_diff(gyration(v, v, w), w) <= 1e-14);

  const BallVector u = vec({0.5, 0, 0});
  const BallVector e = vec({0, 0.5, 0});
  const BallVector z = vec({0, 0, 0.9});
  const BallVector r = gyration(u, e, z);
  CHECK(std::abs(r.norm() - 0.9) <= 1e-10);
  // z is orthogonal to the rotation plane span{u, e}, so gyr[u, e] fixes it;
  // an in-plane vector is moved.
  CHECK(max_abs_diff(r, z) <= 1e-14);
  const BallVector p = gyration(u, e, vec({0.3, 0.3, 0.0}));
  CHECK(std::abs(p.norm() - vec({0.3, 0.3, 0.0}).norm()) <= 1e-12);
  CHECK(max_abs_diff(p, vec({0.3, 0.3, 0.0})) > 1e-3);
}

TEST_CASE("gyration agrees with the rotation part of a boost composition") {
  Sampler s(2);
  for (std::size_t n : {2, 3, 5, 8}) {
    for (int t = 0; t < 200; ++t) {
      const BallVector u = s.ball_vector(n);
      const BallVector v = s.ball_vector(n);
      const BallVector w = s.ball_vector(n);
      const auto oracle = gyration_by_polar_decomposition(u, v, w);
      const BallVector g = gyration(u, v, w);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(g[i] - oracle[i]) <= 1e-10);
    }
  }
}

TEST_CASE("half and doubled") {
  CHECK(half(BallVector::zero(3)).is_zero());
  CHECK(max_abs_diff(half(vec({0.8, 0, 0})), vec({0.5, 0, 0})) <= 1e-15);
  CHECK(doubled(BallVector::zero(3)).is_zero());
  CHECK(max_abs_diff(doubled(vec({0.5, 0, 0})), vec({0.8, 0, 0})) <= 1e-15);
  CHECK(std::abs(gamma(doubled(vec({0.5, 0, 0}))).value() - 5.0 / 3.0) <= 1e-14);

  Sampler s(3);
  for (int t = 0; t < 1000; ++t) {
    const BallVector v = s.ball_vector(1 + static_cast<std::size_t>(t % 8));
    const BallVector h = half(v);
    CHECK(max_abs_diff(einstein_add(h, h), v) <= 1e-10);
    CHECK(max_abs_diff(doubled(v), einstein_add(v, v)) <= 1e-12);
    const double g = gamma(v).value();
    CHECK(rel_diff(gamma(doubled(v)).value(), 2 * g * g - 1) <= 1e-12);
  }
}

TEST_CASE("doubling near the boundary leaves the ball") {
  const double r = 1.0 - 1e-7;
  CHECK(thrown_code([&] { doubled(vec({r, 0.0})); }) == code(ErrorCode::ball_violation));
}

TEST_CASE("gamma_add") {
  const BallVector v = vec({0.3, 0.2, -0.1});
  CHECK(gamma_add(BallVector::zero(3), v).value() == gamma(v).value());
  CHECK(std::abs(gamma_add(v, -v).value() - 1.0) <= 1e-15);
  CHECK(std::abs(gamma_add(vec({0.5, 0, 0}), vec({0.5, 0, 0})).value() - 5.0 / 3.0) <= 1e-15);

  Sampler s(4);
  for (int t = 0; t < 500; ++t) {
    const BallVector a = s.ball_vector(5);
    const BallVector b = s.ball_vector(5);
    CHECK(rel_diff(gamma_add(a, b).value(), gamma(einstein_add(a, b)).value()) <= 1e-11);
  }
}

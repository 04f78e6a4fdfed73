#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "gyrofid/gyrogroup.hpp"
#include "gyrofid/linalg.hpp"

namespace gyrofid {

/// Radius cap for random velocities; keeps gamma <= ~3.2.
inline constexpr double kSamplingRadius = 0.95;

/// Mixes a base seed with a path of indices (suite, dimension, trial, ...)
/// through splitmix64, so every trial owns an independent stream.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path);

/// Seeded generator of random test inputs, backed by std::mt19937_64.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  std::vector<double> gaussian_vector(std::size_t n);

  /// Direction uniform on the sphere, radius s^{1/n} * max_radius with s
  /// uniform on [0, 1), i.e. uniform in the ball of that radius.
  BallVector ball_vector(std::size_t n, double max_radius = kSamplingRadius);

  /// Gram-Schmidt orthonormalization of a Gaussian matrix (rows orthonormal).
  Matrix orthogonal_matrix(std::size_t n);

  /// Entries uniform on [-1, 1].
  SymmetricMatrix symmetric_matrix(std::size_t n);

  /// M^T M with M entries uniform on [-1, 1].
  SymmetricMatrix psd_matrix(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace gyrofid

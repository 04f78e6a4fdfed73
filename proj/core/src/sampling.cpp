#include "gyrofid/sampling.hpp"

#include <cmath>

namespace gyrofid {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = splitmix64(seed);
  for (std::uint64_t p : path) h = splitmix64(h ^ splitmix64(p));
  return h;
}

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

std::vector<double> Sampler::gaussian_vector(std::size_t n) {
  std::normal_distribution<double> normal;
  std::vector<double> x(n);
  for (double& xi : x) xi = normal(engine_);
  return x;
}

BallVector Sampler::ball_vector(std::size_t n, double max_radius) {
  std::vector<double> x = gaussian_vector(n);
  double len = std::sqrt(dot(x, x));
  while (len == 0.0) {
    x = gaussian_vector(n);
    len = std::sqrt(dot(x, x));
  }
  const double radius = std::pow(uniform(0.0, 1.0), 1.0 / static_cast<double>(n)) * max_radius;
  for (double& xi : x) xi *= radius / len;
  return BallVector(std::move(x));
}

Matrix Sampler::orthogonal_matrix(std::size_t n) {
  Matrix q(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row = gaussian_vector(n);
    for (std::size_t k = 0; k < i; ++k) {
      const double proj = dot(row, q.row(k));
      for (std::size_t j = 0; j < n; ++j) row[j] -= proj * q(k, j);
    }
    const double len = std::sqrt(dot(row, row));
    for (std::size_t j = 0; j < n; ++j) q(i, j) = row[j] / len;
  }
  return q;
}

SymmetricMatrix Sampler::symmetric_matrix(std::size_t n) {
  SymmetricMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) a.set(i, j, uniform(-1.0, 1.0));
  return a;
}

SymmetricMatrix Sampler::psd_matrix(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform(-1.0, 1.0);
  return SymmetricMatrix::symmetrize(m.transposed() * m);
}

}  // namespace gyrofid

#include "gyrofid/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gyrofid/error.hpp"

namespace gyrofid {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ball_violation: return "ball_violation";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::degenerate_direction: return "degenerate_direction";
    case ErrorCode::not_positive_semidefinite: return "not_positive_semidefinite";
    case ErrorCode::no_convergence: return "no_convergence";
    case ErrorCode::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::dimension_mismatch, "matrix shapes differ");
  }
}

void require_same_dim(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::dimension_mismatch,
                "symmetric matrix dims differ: " + std::to_string(a.dim()) +
                    " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::dimension_mismatch, "inner matrix dimensions differ");
  }
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

Matrix operator*(double s, const Matrix& a) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (double x : a.row(i)) m = std::max(m, std::abs(x));
  return m;
}

double trace(const Matrix& a) {
  double t = 0.0;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

SymmetricMatrix::SymmetricMatrix(std::size_t dim)
    : dim_(dim), packed_(dim * (dim + 1) / 2, 0.0) {
  if (dim == 0) {
    throw Error(ErrorCode::invalid_argument, "symmetric matrix dim must be >= 1");
  }
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t dim) {
  SymmetricMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1.0);
  return m;
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> values) {
  SymmetricMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m.set(i, i, values[i]);
  return m;
}

SymmetricMatrix SymmetricMatrix::symmetrize(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::dimension_mismatch, "cannot symmetrize a non-square matrix");
  }
  SymmetricMatrix s(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j) s.set(i, j, 0.5 * (a(i, j) + a(j, i)));
  return s;
}

Matrix SymmetricMatrix::dense() const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  require_same_dim(a, b);
  SymmetricMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j <= i; ++j) c.set(i, j, a(i, j) + b(i, j));
  return c;
}

SymmetricMatrix operator-(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  require_same_dim(a, b);
  SymmetricMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j <= i; ++j) c.set(i, j, a(i, j) - b(i, j));
  return c;
}

SymmetricMatrix operator*(double s, const SymmetricMatrix& a) {
  SymmetricMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j <= i; ++j) c.set(i, j, s * a(i, j));
  return c;
}

Matrix operator*(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  require_same_dim(a, b);
  return a.dense() * b.dense();
}

double max_abs(const SymmetricMatrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j <= i; ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

double max_abs_diff(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  return max_abs(a - b);
}

double frobenius_norm(const SymmetricMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

SymmetricMatrix Spectrum::map(const std::function<double(double)>& f) const {
  const std::size_t n = eigenvalues.size();
  std::vector<double> fl(n);
  std::transform(eigenvalues.begin(), eigenvalues.end(), fl.begin(), f);
  SymmetricMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        sum += eigenvectors(i, k) * fl[k] * eigenvectors(j, k);
      out.set(i, j, sum);
    }
  return out;
}

SymmetricMatrix Spectrum::reconstruct() const {
  return map([](double x) { return x; });
}

namespace {

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = p + 1; q < a.cols(); ++q) sum += a(p, q) * a(p, q);
  return std::sqrt(2.0 * sum);
}

// A <- J^T A J and V <- V J for the rotation J in the (p, q) plane that
// annihilates A(p, q).
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const std::size_t n = a.rows();
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

Spectrum sym_eigen(const SymmetricMatrix& input) {
  const std::size_t n = input.dim();
  if (n > kMaxDim) {
    throw Error(ErrorCode::invalid_argument,
                "sym_eigen supports dim <= " + std::to_string(kMaxDim));
  }
  Matrix a = input.dense();
  Matrix v = Matrix::identity(n);
  const double scale = frobenius_norm(input);

  bool converged = scale == 0.0;
  for (int sweep = 0; sweep < kJacobiSweepBudget && !converged; ++sweep) {
    if (off_diagonal_norm(a) <= kJacobiThreshold * scale) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Once the sweep has settled, drop elements below the diagonal's ulp.
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(a(p, p)) + g == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + g == std::abs(a(q, q))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        rotate(a, v, p, q);
      }
    }
  }
  if (!converged && off_diagonal_norm(a) > kJacobiThreshold * scale) {
    throw Error(ErrorCode::no_convergence, "Jacobi sweep budget exhausted");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  Spectrum out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.eigenvalues[k] = a(src, src);
    double sign = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(v(i, src)) > 1e-12) {
        sign = v(i, src) < 0.0 ? -1.0 : 1.0;
        break;
      }
    }
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = sign * v(i, src);
  }
  return out;
}

SymmetricMatrix sqrt_psd(const SymmetricMatrix& a) {
  const Spectrum spec = sym_eigen(a);
  if (spec.eigenvalues.front() < -kEigenTolerance) {
    throw Error(ErrorCode::not_positive_semidefinite,
                "matrix has eigenvalue " + std::to_string(spec.eigenvalues.front()));
  }
  return spec.map([](double x) { return std::sqrt(std::max(x, 0.0)); });
}

double trace(const SymmetricMatrix& a) {
  double t = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

double det(const SymmetricMatrix& a) {
  const Spectrum spec = sym_eigen(a);
  return std::accumulate(spec.eigenvalues.begin(), spec.eigenvalues.end(), 1.0,
                         std::multiplies<>());
}

std::complex<double> Hermitian2::operator()(std::size_t i, std::size_t j) const {
  if (i == 0 && j == 0) return top;
  if (i == 1 && j == 1) return bottom;
  if (i == 1 && j == 0) return off;
  return std::conj(off);
}

double trace(const Hermitian2& a) { return a.top + a.bottom; }

double det(const Hermitian2& a) { return a.top * a.bottom - std::norm(a.off); }

std::array<double, 2> eigenvalues(const Hermitian2& a) {
  const double mean = 0.5 * (a.top + a.bottom);
  const double half_gap = 0.5 * (a.top - a.bottom);
  const double radius = std::sqrt(half_gap * half_gap + std::norm(a.off));
  return {mean - radius, mean + radius};
}

double trace_product(const Hermitian2& a, const Hermitian2& b) {
  std::complex<double> t{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k) t += a(i, k) * b(k, i);
  return t.real();
}

}  // namespace gyrofid

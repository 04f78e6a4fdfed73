#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace gyrofid {

/// Jacobi sweeps allowed before sym_eigen gives up.
inline constexpr int kJacobiSweepBudget = 100;
/// Convergence threshold on the off-diagonal Frobenius norm, relative to the
/// Frobenius norm of the input.
inline constexpr double kJacobiThreshold = 1e-14;
/// Eigenvalues above -kEigenTolerance are treated as round-off of a PSD matrix.
inline constexpr double kEigenTolerance = 1e-10;
inline constexpr std::size_t kMaxDim = 64;

/// Dense row-major real matrix. Used for products and orthogonal frames,
/// neither of which is symmetric in general.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  Matrix transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);

double max_abs(const Matrix& a);
double trace(const Matrix& a);

/// Real symmetric matrix. Only the lower triangle is stored, so
/// (i, j) and (j, i) are the same element by construction.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t dim);

  static SymmetricMatrix identity(std::size_t dim);
  static SymmetricMatrix diagonal(std::span<const double> values);
  /// Symmetric part (A + A^T) / 2 of a square matrix.
  static SymmetricMatrix symmetrize(const Matrix& a);

  std::size_t dim() const noexcept { return dim_; }

  double operator()(std::size_t i, std::size_t j) const {
    return packed_[index(i, j)];
  }
  void set(std::size_t i, std::size_t j, double value) {
    packed_[index(i, j)] = value;
  }

  Matrix dense() const;

 private:
  static std::size_t index(std::size_t i, std::size_t j) noexcept {
    return i >= j ? i * (i + 1) / 2 + j : j * (j + 1) / 2 + i;
  }

  std::size_t dim_;
  std::vector<double> packed_;
};

SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b);
SymmetricMatrix operator-(const SymmetricMatrix& a, const SymmetricMatrix& b);
SymmetricMatrix operator*(double s, const SymmetricMatrix& a);
Matrix operator*(const SymmetricMatrix& a, const SymmetricMatrix& b);

double max_abs(const SymmetricMatrix& a);
double max_abs_diff(const SymmetricMatrix& a, const SymmetricMatrix& b);
double frobenius_norm(const SymmetricMatrix& a);

/// Eigendecomposition A = Q diag(eigenvalues) Q^T.
struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // column k pairs with eigenvalues[k]

  SymmetricMatrix reconstruct() const;
  /// Q diag(f(lambda)) Q^T.
  SymmetricMatrix map(const std::function<double(double)>& f) const;
};

/// Cyclic Jacobi eigensolver. Eigenvectors are sign-normalized so that their
/// first component of magnitude above 1e-12 is positive.
Spectrum sym_eigen(const SymmetricMatrix& a);

/// Principal square root of a positive semidefinite matrix.
SymmetricMatrix sqrt_psd(const SymmetricMatrix& a);

double trace(const SymmetricMatrix& a);
/// Product of the eigenvalues returned by sym_eigen.
double det(const SymmetricMatrix& a);

/// 2x2 complex Hermitian matrix [[top, conj(off)], [off, bottom]].
struct Hermitian2 {
  double top = 0.0;
  double bottom = 0.0;
  std::complex<double> off{};

  std::complex<double> operator()(std::size_t i, std::size_t j) const;
};

double trace(const Hermitian2& a);
double det(const Hermitian2& a);
/// Closed-form roots of the characteristic quadratic, ascending.
std::array<double, 2> eigenvalues(const Hermitian2& a);
/// tr(A B), real for Hermitian A and B.
double trace_product(const Hermitian2& a, const Hermitian2& b);

}  // namespace gyrofid

#pragma once

#include <cstddef>
#include <vector>

#include "gyrofid/gyrogroup.hpp"
#include "gyrofid/linalg.hpp"

namespace gyrofid {

/// Trace-one positive definite (n+1)x(n+1) matrix
///
///   2 g^2 / ((n - 3) + 4 g^2) * [ 1 - 1/(2 g^2)   v^T                   ]
///                               [ v               I/(2 g^2) + v v^T     ]
///
/// with g the Lorentz factor of v, defined for n >= 3.
class MobiusMatrix {
 public:
  int n() const noexcept { return n_; }
  const BallVector& generator() const noexcept { return generator_; }
  const SymmetricMatrix& matrix() const noexcept { return matrix_; }

 private:
  MobiusMatrix(int n, BallVector generator, SymmetricMatrix matrix)
      : n_(n), generator_(std::move(generator)), matrix_(std::move(matrix)) {}

  friend MobiusMatrix mobius(int n, const BallVector& v);
  friend MobiusMatrix mobius_from_boost(int n, const BallVector& v);

  int n_;
  BallVector generator_;
  SymmetricMatrix matrix_;
};

/// Throws ErrorCode::invalid_argument for n < 3 and
/// ErrorCode::dimension_mismatch when v.dim() != n.
MobiusMatrix mobius(int n, const BallVector& v);

/// Same matrix built as B(v)^2 / tr B(v)^2.
MobiusMatrix mobius_from_boost(int n, const BallVector& v);

/// ((1 - |v|^2) / ((n + 1) - (n - 3)|v|^2))^(n+1).
double mobius_det_closed(int n, const BallVector& v);

/// Gram-Schmidt basis of the hyperplane orthogonal to v. Seeds are the
/// standard basis vectors except the one along the largest |v_k| (lowest k on
/// ties), orthogonalized against v/|v| in index order.
std::vector<std::vector<double>> orthonormal_complement(const BallVector& v);

/// Rows are the common eigenvectors of B(v) and mu_{n,v}:
///   ( 1/sqrt2, v/(sqrt2 |v|)), (-1/sqrt2, v/(sqrt2 |v|)), (0, u_1), ..., (0, u_{n-1}).
struct OrthogonalFrame {
  Matrix matrix;
  std::vector<std::vector<double>> complement;
};

OrthogonalFrame orthogonal_frame(const BallVector& v);

struct MobiusDiagonalization {
  OrthogonalFrame frame;
  /// (lambda^2, 1/lambda^2, 1, ..., 1) / ((n - 3) + 4 g^2)
  std::vector<double> diagonal;
  double doppler;
};

/// mu_{n,v} = frame^T diag(diagonal) frame. Throws
/// ErrorCode::degenerate_direction for v = 0.
MobiusDiagonalization mobius_diag(int n, const BallVector& v);

/// frame^T diag(d) frame.
SymmetricMatrix congruence(const Matrix& frame, const std::vector<double>& diagonal);

}  // namespace gyrofid

#pragma once

#include <cmath>
#include <functional>
#include <initializer_list>
#include <vector>

#include "gyrofid/error.hpp"
#include "gyrofid/gyrogroup.hpp"
#include "gyrofid/linalg.hpp"

namespace gyrofid::testing {

inline BallVector vec(std::initializer_list<double> xs) { return BallVector(std::vector<double>(xs)); }

inline double max_diff(const Matrix& a, const Matrix& b) { return max_abs(a - b); }

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

/// The ErrorCode thrown by f, or nullopt-like sentinel -1 when nothing is thrown.
inline int thrown_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return static_cast<int>(e.code());
  }
  return -1;
}

inline int code(ErrorCode c) { return static_cast<int>(c); }

}  // namespace gyrofid::testing

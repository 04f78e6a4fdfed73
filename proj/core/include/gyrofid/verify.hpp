#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gyrofid {

enum class Suite { gyro, boost, mobius, fidelity, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

/// `agree` records pass when max_error <= tolerance. `deviate` records
/// document a formula that is known to be wrong and pass when the observed
/// error exceeds the tolerance.
enum class Expectation { agree, deviate };

struct ReportRecord {
  std::string suite;
  std::string name;
  std::size_t trials = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  Expectation expectation = Expectation::agree;

  bool passed() const;
  /// "pass", "fail", "deviates as documented" or "unexpected agreement".
  std::string_view status() const;
};

/// Runs every identity check of the chosen suite. `trials` random draws are
/// made per sampled dimension; the output is a pure function of
/// (suite, trials, seed).
std::vector<ReportRecord> run_suite(Suite suite, std::size_t trials, std::uint64_t seed);

bool all_passed(const std::vector<ReportRecord>& records);

/// Superseded closed forms, known to be wrong.
/// They exist only so the verification suite can show the corrected forms
/// are load-bearing; nothing else should call them.
namespace printed {

/// Lorentz factor of half(u) (+) half(v) using (1 + g)/sqrt(1 + 2 g) as the
/// factor of each half.
double gamma_midpoint(double gamma_u, double gamma_v, double dot_uv);

/// Möbius fidelity with numerator g_{u(+)v} + n - 1 (factor 2 missing).
double mobius_fidelity(double gamma_sum, double gamma_u, double gamma_v, int n);

}  // namespace printed

}  // namespace gyrofid

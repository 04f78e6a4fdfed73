#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "doctest.h"
#include "gyrofid/sampling.hpp"
#include "gyrofid/verify.hpp"
#include "test_support.hpp"

using namespace gyrofid;
using namespace gyrofid::testing;

namespace {

bool has_prefix(const std::vector<ReportRecord>& rs, std::string_view prefix) {
  return std::any_of(rs.begin(), rs.end(),
                     [&](const ReportRecord& r) { return r.name.rfind(prefix, 0) == 0; });
}

}  // namespace

TEST_CASE("gyro suite reports the five axioms") {
  const auto rs = run_suite(Suite::gyro, 1, 7);
  for (const char* p : {"G1 ", "G2 ", "G3 ", "G4 ", "G5 "}) CHECK(has_prefix(rs, p));
  std::set<std::string> names;
  for (const auto& r : rs) {
    CHECK(r.suite == "gyro");
    CHECK(r.trials > 0);
    CHECK(r.tolerance >= 0.0);
    CHECK(names.insert(r.name).second);
  }
  CHECK(all_passed(rs));
}

TEST_CASE("suite output is a pure function of its inputs") {
  for (Suite s : {Suite::gyro, Suite::boost, Suite::mobius, Suite::fidelity}) {
    const auto a = run_suite(s, 5, 11);
    const auto b = run_suite(s, 5, 11);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].name == b[i].name);
      CHECK(a[i].max_error == b[i].max_error);
    }
  }
  const auto c = run_suite(Suite::gyro, 5, 12);
  const auto d = run_suite(Suite::gyro, 5, 11);
  bool differs = false;
  for (std::size_t i = 0; i < c.size(); ++i) differs |= c[i].max_error != d[i].max_error;
  CHECK(differs);
}

TEST_CASE("all concatenates the four suites") {
  const auto all = run_suite(Suite::all, 3, 5);
  std::size_t total = 0;
  for (Suite s : {Suite::gyro, Suite::boost, Suite::mobius, Suite::fidelity})
    total += run_suite(s, 3, 5).size();
  CHECK(all.size() == total);
  CHECK(all_passed(all));
}

TEST_CASE("record status") {
  ReportRecord r{"gyro", "x", 1, 1e-12, 1e-10, Expectation::agree};
  CHECK(r.passed());
  CHECK(r.status() == "pass");
  r.max_error = 1e-9;
  CHECK_FALSE(r.passed());
  CHECK(r.status() == "fail");
  r.expectation = Expectation::deviate;
  r.tolerance = 1e-3;
  r.max_error = 0.4;
  CHECK(r.passed());
  CHECK(r.status() == "deviates as documented");
  r.max_error = 1e-6;
  CHECK_FALSE(r.passed());
  CHECK(r.status() == "unexpected agreement");
  r.expectation = Expectation::agree;
  r.max_error = std::numeric_limits<double>::infinity();
  CHECK_FALSE(r.passed());
}

TEST_CASE("deviation records are present and deviate") {
  const auto rs = run_suite(Suite::fidelity, 5, 3);
  int deviations = 0;
  for (const auto& r : rs) {
    if (r.expectation != Expectation::deviate) continue;
    ++deviations;
    CHECK(r.max_error > r.tolerance);
    CHECK(r.status() == "deviates as documented");
  }
  CHECK(deviations == 2);
}

TEST_CASE("parse_suite") {
  CHECK(parse_suite("gyro") == Suite::gyro);
  CHECK(parse_suite("boost") == Suite::boost);
  CHECK(parse_suite("mobius") == Suite::mobius);
  CHECK(parse_suite("fidelity") == Suite::fidelity);
  CHECK(parse_suite("all") == Suite::all);
  CHECK_FALSE(parse_suite("Gyro").has_value());
  CHECK_FALSE(parse_suite("").has_value());
  for (Suite s : {Suite::gyro, Suite::boost, Suite::mobius, Suite::fidelity, Suite::all})
    CHECK(parse_suite(to_string(s)) == s);
}

TEST_CASE("zero trials is rejected") {
  CHECK(thrown_code([] { run_suite(Suite::gyro, 0, 1); }) == code(ErrorCode::invalid_argument));
}

TEST_CASE("sampling") {
  CHECK(derive_seed(42, {1, 2, 3}) == derive_seed(42, {1, 2, 3}));
  CHECK(derive_seed(42, {1, 2, 3}) != derive_seed(42, {1, 2, 4}));
  CHECK(derive_seed(42, {1, 2, 3}) != derive_seed(43, {1, 2, 3}));

  Sampler a(9), b(9);
  for (int t = 0; t < 100; ++t) CHECK(a.ball_vector(4) == b.ball_vector(4));

  Sampler s(10);
  double largest = 0.0;
  for (int t = 0; t < 2000; ++t) {
    const BallVector v = s.ball_vector(3);
    CHECK(v.norm() <= kSamplingRadius);
    largest = std::max(largest, v.norm());
  }
  CHECK(largest > 0.9);

  const Matrix o = s.orthogonal_matrix(6);
  CHECK(max_diff(o * o.transposed(), Matrix::identity(6)) <= 1e-12);
  CHECK(sym_eigen(s.psd_matrix(6)).eigenvalues.front() >= -1e-12);
}

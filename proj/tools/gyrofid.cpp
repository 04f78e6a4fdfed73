// gyrofid: command-line front end for the Einstein gyrogroup, Lorentz boost,
// Möbius matrix and fidelity routines.
//
//   gyrofid add --u "[0.5,0,0]" --v "[0.5,0,0]"
//   gyrofid fidelity --kind mobius --n 3 --u "[0.6,0,0]" --v "[0,0.6,0]"
//   gyrofid matrix --kind mobius --n 3 --v "[0.6,0,0]"
//   gyrofid verify --suite all --trials 500 --seed 42
//
// Output is JSON on stdout. Errors are a single {"code", "message"} object on
// stderr. Exit codes: 0 success, 1 verification failure, 2 input error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gyrofid/error.hpp"
#include "gyrofid/fidelity.hpp"
#include "gyrofid/gyrogroup.hpp"
#include "gyrofid/linalg.hpp"
#include "gyrofid/lorentz.hpp"
#include "gyrofid/mobius.hpp"
#include "gyrofid/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace gyrofid;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

// Rounds to 10 significant digits; integral results print without a
// fractional part.
json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  const double r = std::strtod(buf, nullptr);
  if (r == 0.0) return 0;
  if (std::abs(r) < 1e15 && r == std::trunc(r)) return static_cast<std::int64_t>(r);
  return r;
}

json numbers(const std::vector<double>& xs) {
  json out = json::array();
  for (double x : xs) out.push_back(number(x));
  return out;
}

json numbers(std::span<const double> xs) { return numbers(std::vector<double>(xs.begin(), xs.end())); }

json rows(const SymmetricMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(number(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

int emit_error(std::string_view code, std::string_view message) {
  std::cerr << json{{"code", code}, {"message", message}}.dump() << '\n';
  return kExitInputError;
}

BallVector parse_vector(const std::string& flag, const std::string& text) {
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw Error(ErrorCode::invalid_argument, flag + " is not valid JSON");
  }
  if (!parsed.is_array() || parsed.empty()) {
    throw Error(ErrorCode::invalid_argument, flag + " must be a non-empty JSON array of numbers");
  }
  std::vector<double> components;
  for (const auto& x : parsed) {
    if (!x.is_number()) {
      throw Error(ErrorCode::invalid_argument, flag + " must contain only numbers");
    }
    components.push_back(x.get<double>());
  }
  try {
    return BallVector(std::move(components));
  } catch (const Error& e) {
    throw Error(e.code(), flag + ": " + e.what());
  }
}

int resolve_n(const std::optional<int>& n, const BallVector& v) {
  return n.value_or(static_cast<int>(v.dim()));
}

void require_n_matches(int n, const BallVector& v) {
  if (static_cast<std::size_t>(n) != v.dim()) {
    throw Error(ErrorCode::dimension_mismatch,
                "--n " + std::to_string(n) + " does not match vector dim " +
                    std::to_string(v.dim()));
  }
}

struct Options {
  std::string u;
  std::string v;
  std::optional<int> n;
  std::string kind;
  std::string suite = "all";
  std::size_t trials = 500;
  std::uint64_t seed = 42;
};

int cmd_add(const Options& o) {
  const BallVector u = parse_vector("--u", o.u);
  const BallVector v = parse_vector("--v", o.v);
  const BallVector sum = einstein_add(u, v);
  json out;
  out["result"] = numbers(sum.components());
  out["gamma"] = number(gamma(sum).value());
  std::cout << out.dump() << '\n';
  return kExitOk;
}

int cmd_fidelity(const Options& o) {
  const BallVector u = parse_vector("--u", o.u);
  const BallVector v = parse_vector("--v", o.v);
  const int n = resolve_n(o.n, u);

  json out;
  out["kind"] = o.kind;
  out["n"] = n;
  double value = 0.0;
  double oracle = 0.0;
  if (o.kind == "qubit") {
    if (n != 3) throw Error(ErrorCode::invalid_argument, "qubit fidelity needs n = 3");
    out["quantity"] = "fidelity_squared";
    value = qubit_fidelity_sq_gamma(u, v);
    oracle = qubit_fidelity_sq(u, v);
  } else if (o.kind == "mobius") {
    out["quantity"] = "fidelity";
    value = fidelity_mobius_closed(u, v, n);
    oracle = fidelity_spectral(mobius(n, u).matrix(), mobius(n, v).matrix());
  } else if (o.kind == "boost") {
    out["quantity"] = "fidelity";
    value = fidelity_boost_closed(u, v, n);
    oracle = fidelity_spectral(normalized_boost(u).matrix(), normalized_boost(v).matrix());
  } else {  // spectral
    out["quantity"] = "fidelity";
    value = fidelity_spectral(mobius(n, u).matrix(), mobius(n, v).matrix());
    oracle = fidelity_mobius_closed(u, v, n);
  }
  out["value"] = number(value);
  out["oracle"] = number(oracle);
  out["abs_diff"] = number(std::abs(value - oracle));
  std::cout << out.dump() << '\n';
  return kExitOk;
}

int cmd_matrix(const Options& o) {
  const BallVector v = parse_vector("--v", o.v);
  const int n = resolve_n(o.n, v);

  SymmetricMatrix m(1);
  if (o.kind == "mobius") {
    m = mobius(n, v).matrix();
  } else {
    require_n_matches(n, v);
    m = o.kind == "boost" ? boost(v).matrix() : normalized_boost(v).matrix();
  }
  const Spectrum spec = sym_eigen(m);

  json out;
  out["kind"] = o.kind;
  out["n"] = n;
  out["matrix"] = rows(m);
  out["trace"] = number(trace(m));
  out["det"] = number(det(m));
  out["eigenvalues"] = numbers(spec.eigenvalues);
  std::cout << out.dump() << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const std::optional<Suite> suite = parse_suite(o.suite);
  if (!suite) throw Error(ErrorCode::invalid_argument, "unknown suite " + o.suite);
  const std::vector<ReportRecord> records = run_suite(*suite, o.trials, o.seed);

  json list = json::array();
  for (const ReportRecord& r : records) {
    list.push_back({{"suite", r.suite},
                    {"name", r.name},
                    {"trials", r.trials},
                    {"max_error", number(r.max_error)},
                    {"tolerance", number(r.tolerance)},
                    {"expectation", r.expectation == Expectation::agree ? "agree" : "deviate"},
                    {"status", r.status()}});
  }
  const bool ok = all_passed(records);
  json out;
  out["suite"] = o.suite;
  out["trials"] = o.trials;
  out["seed"] = o.seed;
  out["records"] = std::move(list);
  out["passed"] = ok;
  std::cout << out.dump(2) << '\n';
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Einstein gyrogroup, Lorentz boosts, Möbius matrices and their fidelity"};
  app.require_subcommand(1);
  Options o;

  auto* add = app.add_subcommand("add", "Einstein velocity addition u (+) v");
  add->add_option("--u", o.u, "JSON array")->required();
  add->add_option("--v", o.v, "JSON array")->required();

  auto* fid = app.add_subcommand("fidelity", "Closed-form fidelity with its spectral cross-check");
  fid->add_option("--kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"mobius", "boost", "qubit", "spectral"}));
  fid->add_option("--u", o.u, "JSON array")->required();
  fid->add_option("--v", o.v, "JSON array")->required();
  fid->add_option("--n", o.n, "Ambient dimension (defaults to the vector dim)");

  auto* mat = app.add_subcommand("matrix", "Dump a boost or Möbius matrix with its spectrum");
  mat->add_option("--kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"boost", "mobius", "normalized_boost"}));
  mat->add_option("--v", o.v, "JSON array")->required();
  mat->add_option("--n", o.n, "Ambient dimension (defaults to the vector dim)");

  auto* ver = app.add_subcommand("verify", "Run the identity verification suites");
  ver->add_option("--suite", o.suite)
      ->check(CLI::IsMember({"gyro", "boost", "mobius", "fidelity", "all"}));
  ver->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  ver->add_option("--seed", o.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error("usage", e.what());
  }

  try {
    if (*add) return cmd_add(o);
    if (*fid) return cmd_fidelity(o);
    if (*mat) return cmd_matrix(o);
    return cmd_verify(o);
  } catch (const Error& e) {
    return emit_error(to_string(e.code()), e.what());
  }
}

#include "gyrofid/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "gyrofid/error.hpp"
#include "gyrofid/fidelity.hpp"
#include "gyrofid/gyrogroup.hpp"
#include "gyrofid/linalg.hpp"
#include "gyrofid/lorentz.hpp"
#include "gyrofid/mobius.hpp"
#include "gyrofid/sampling.hpp"

namespace gyrofid {

bool ReportRecord::passed() const {
  if (expectation == Expectation::deviate) return max_error > tolerance;
  return max_error <= tolerance;
}

std::string_view ReportRecord::status() const {
  if (expectation == Expectation::deviate) {
    return passed() ? "deviates as documented" : "unexpected agreement";
  }
  return passed() ? "pass" : "fail";
}

bool all_passed(const std::vector<ReportRecord>& records) {
  return std::all_of(records.begin(), records.end(),
                     [](const ReportRecord& r) { return r.passed(); });
}

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "gyro") return Suite::gyro;
  if (name == "boost") return Suite::boost;
  if (name == "mobius") return Suite::mobius;
  if (name == "fidelity") return Suite::fidelity;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::gyro: return "gyro";
    case Suite::boost: return "boost";
    case Suite::mobius: return "mobius";
    case Suite::fidelity: return "fidelity";
    case Suite::all: return "all";
  }
  return "unknown";
}

namespace printed {

double gamma_midpoint(double gamma_u, double gamma_v, double dot_uv) {
  return ((1.0 + gamma_u) * (1.0 + gamma_v) + gamma_u * gamma_v * dot_uv) /
         (std::sqrt(1.0 + 2.0 * gamma_u) * std::sqrt(1.0 + 2.0 * gamma_v));
}

double mobius_fidelity(double gamma_sum, double gamma_u, double gamma_v, int n) {
  return (gamma_sum + n - 1) /
         std::sqrt((4.0 * gamma_u * gamma_u + n - 3) * (4.0 * gamma_v * gamma_v + n - 3));
}

}  // namespace printed

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Accumulates the worst error per named check, in first-seen order.
class Collector {
 public:
  explicit Collector(std::string suite) : suite_(std::move(suite)) {}

  void observe(std::string_view name, double tolerance, const std::function<double()>& error,
               Expectation expectation = Expectation::agree) {
    double e;
    try {
      e = error();
    } catch (const Error&) {
      e = kInf;
    }
    if (std::isnan(e)) e = kInf;

    auto it = std::find_if(records_.begin(), records_.end(),
                           [&](const ReportRecord& r) { return r.name == name; });
    if (it == records_.end()) {
      records_.push_back({suite_, std::string(name), 0, 0.0, tolerance, expectation});
      it = std::prev(records_.end());
    }
    ++it->trials;
    it->max_error = std::max(it->max_error, e);
  }

  std::vector<ReportRecord> take() { return std::move(records_); }

 private:
  std::string suite_;
  std::vector<ReportRecord> records_;
};

double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

double euclidean_diff(const BallVector& a, const BallVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

double max_abs_diff(const Matrix& a, const Matrix& b) { return max_abs(a - b); }

// Largest gap between two multisets of reals of equal size.
double multiset_diff(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double orthogonality_error(const Matrix& q) {
  return max_abs(q.transposed() * q - Matrix::identity(q.rows()));
}

SymmetricMatrix conjugate(const Matrix& o, const SymmetricMatrix& a) {
  return SymmetricMatrix::symmetrize(o * a.dense() * o.transposed());
}

enum SuiteTag : std::uint64_t { kGyroTag = 1, kBoostTag, kMobiusTag, kFidelityTag, kQubitTag };

void run_gyro(Collector& c, std::size_t trials, std::uint64_t seed) {
  for (std::size_t n : {2, 3, 5, 8}) {
    const BallVector zero = BallVector::zero(n);
    for (std::size_t t = 0; t < trials; ++t) {
      Sampler s(derive_seed(seed, {kGyroTag, n, t}));
      const BallVector u = s.ball_vector(n);
      const BallVector v = s.ball_vector(n);
      const BallVector w = s.ball_vector(n);
      const BallVector x = s.ball_vector(n);

      c.observe("G1 identity: 0 (+) a = a (+) 0 = a", 1e-10, [&] {
        return std::max(max_abs_diff(einstein_add(zero, u), u),
                        max_abs_diff(einstein_add(u, zero), u));
      });
      c.observe("G2 inverse: a (+) (-a) = (-a) (+) a = 0", 1e-10, [&] {
        return std::max(max_abs_diff(einstein_add(u, -u), zero),
                        max_abs_diff(einstein_add(-u, u), zero));
      });
      c.observe("G3 gyroassociativity", 1e-10, [&] {
        return max_abs_diff(einstein_add(u, einstein_add(v, w)),
                            einstein_add(einstein_add(u, v), gyration(u, v, w)));
      });
      c.observe("G4 gyr[0, a] = id", 1e-10,
                [&] { return max_abs_diff(gyration(zero, u, w), w); });
      c.observe("G5 loop property: gyr[u (+) v, v] = gyr[u, v]", 1e-10, [&] {
        return max_abs_diff(gyration(einstein_add(u, v), v, w), gyration(u, v, w));
      });
      c.observe("gyrocommutativity: u (+) v = gyr[u, v](v (+) u)", 1e-10, [&] {
        return max_abs_diff(einstein_add(u, v), gyration(u, v, einstein_add(v, u)));
      });
      c.observe("gyration preserves inner products", 1e-10, [&] {
        const BallVector gw = gyration(u, v, w);
        const BallVector gx = gyration(u, v, x);
        return std::max(std::abs(dot(gw.components(), gx.components()) -
                                 dot(w.components(), x.components())),
                        std::abs(gw.norm_squared() - w.norm_squared()));
      });
      c.observe("half(v) (+) half(v) = v", 1e-10, [&] {
        const BallVector h = half(v);
        return max_abs_diff(einstein_add(h, h), v);
      });
      c.observe("unique 2-divisibility: double(half(v)) = half(double(v)) = v", 1e-10, [&] {
        return std::max(max_abs_diff(doubled(half(v)), v), max_abs_diff(half(doubled(v)), v));
      });
      c.observe("double(v) = v (+) v", 1e-12,
                [&] { return max_abs_diff(doubled(v), einstein_add(v, v)); });
      c.observe("gamma of double(v) = 2 gamma_v^2 - 1 (relative)", 1e-12, [&] {
        const double g = gamma(v).value();
        return rel_diff(gamma(doubled(v)).value(), 2.0 * g * g - 1.0);
      });
      c.observe("gamma identity: gamma_{u (+) v} = gamma_u gamma_v (1 + u.v) (relative)", 1e-11,
                [&] { return rel_diff(gamma_add(u, v).value(), gamma(einstein_add(u, v)).value()); });
      c.observe(
          "non-associativity witness: |u (+) (v (+) w) - (u (+) v) (+) w|", 1e-3,
          [&] {
            return euclidean_diff(einstein_add(u, einstein_add(v, w)),
                                  einstein_add(einstein_add(u, v), w));
          },
          Expectation::deviate);
    }
  }
}

void run_boost(Collector& c, std::size_t trials, std::uint64_t seed) {
  for (std::size_t n : {2, 3, 5}) {
    const SymmetricMatrix eta = minkowski_metric(n);
    for (std::size_t t = 0; t < trials; ++t) {
      Sampler s(derive_seed(seed, {kBoostTag, n, t}));
      const BallVector u = s.ball_vector(n);
      const BallVector v = s.ball_vector(n);
      const std::vector<double> x = s.gaussian_vector(n + 1);
      const std::vector<double> y = s.gaussian_vector(n + 1);
      const LorentzBoost bu = boost(u);
      const LorentzBoost bv = boost(v);
      const Matrix bvd = bv.matrix().dense();

      c.observe("Lorentz form preserved: B^T eta B = eta", 1e-10, [&] {
        return max_abs_diff(bvd.transposed() * eta.dense() * bvd, eta.dense());
      });
      c.observe("L(Bx, By) = L(x, y)", 1e-10, [&] {
        std::vector<double> bx(n + 1, 0.0), by(n + 1, 0.0);
        for (std::size_t i = 0; i <= n; ++i)
          for (std::size_t j = 0; j <= n; ++j) {
            bx[i] += bvd(i, j) * x[j];
            by[i] += bvd(i, j) * y[j];
          }
        return std::abs(lorentz_form(bx, by) - lorentz_form(x, y));
      });
      c.observe("det B = 1 (relative)", 1e-10, [&] { return std::abs(det(bv.matrix()) - 1.0); });
      c.observe("orthochronous: B_00 = gamma_v >= 1", 1e-14, [&] {
        return std::max(std::max(0.0, 1.0 - bv.matrix()(0, 0)),
                        std::abs(bv.matrix()(0, 0) - gamma(v).value()));
      });
      c.observe("tr B(v) = 2 gamma_v + n - 1 (relative)", 1e-12, [&] {
        return rel_diff(trace(bv.matrix()), 2.0 * gamma(v).value() + static_cast<double>(n) - 1.0);
      });
      c.observe("boost_apply gamma = gamma_add (relative)", 1e-11, [&] {
        return rel_diff(boost_apply(u, v).gamma.value(), gamma_add(u, v).value());
      });
      c.observe("boost_apply velocity = u (+) v", 1e-10,
                [&] { return max_abs_diff(boost_apply(u, v).velocity, einstein_add(u, v)); });
      c.observe("(B(u) B(v)^2 B(u))^{1/2} = B(u (+) v)", 1e-9, [&] {
        return max_abs_diff(star(bu, bv), boost(einstein_add(u, v)).matrix());
      });
      c.observe("B(u)^2 ast B(v)^2 = B(u (+) v)^2", 1e-9, [&] {
        const SymmetricMatrix uu = SymmetricMatrix::symmetrize(bu.matrix() * bu.matrix());
        const SymmetricMatrix vv = SymmetricMatrix::symmetrize(bv.matrix() * bv.matrix());
        const SymmetricMatrix w = boost(einstein_add(u, v)).matrix();
        return max_abs_diff(ast(uu, vv), SymmetricMatrix::symmetrize(w * w));
      });
      c.observe("B(2 (x) v) = B(v)^2", 1e-9, [&] {
        return max_abs_diff(boost(doubled(v)).matrix(),
                            SymmetricMatrix::symmetrize(bv.matrix() * bv.matrix()));
      });
      c.observe("B((1/2) (x) v) = B(v)^{1/2}", 1e-9,
                [&] { return max_abs_diff(boost(half(v)).matrix(), sqrt_psd(bv.matrix())); });
      c.observe("boost_diag reconstruction O^T diag(d) O = B(v)", 1e-10, [&] {
        const BoostDiagonalization bd = boost_diag(v);
        return max_abs_diff(congruence(bd.frame, bd.diagonal), bv.matrix());
      });
      c.observe("boost_diag frame orthogonal", 1e-12,
                [&] { return orthogonality_error(boost_diag(v).frame); });
      c.observe("spectrum of B(v) = (lambda, 1/lambda, 1, ..., 1)", 1e-10, [&] {
        return multiset_diff(sym_eigen(bv.matrix()).eigenvalues, boost_diag(v).diagonal);
      });
    }
  }
}

void run_mobius(Collector& c, std::size_t trials, std::uint64_t seed) {
  for (int n : {3, 4, 5, 8}) {
    for (std::size_t t = 0; t < trials; ++t) {
      Sampler s(derive_seed(seed, {kMobiusTag, static_cast<std::uint64_t>(n), t}));
      const BallVector v = s.ball_vector(static_cast<std::size_t>(n));
      const MobiusMatrix mu = mobius(n, v);
      const double g = gamma(v).value();

      c.observe("tr mu = 1", 1e-12, [&] { return std::abs(trace(mu.matrix()) - 1.0); });
      c.observe("mu positive definite", 0.0, [&] {
        const double lo = sym_eigen(mu.matrix()).eigenvalues.front();
        return lo > 0.0 ? 0.0 : 1.0 + std::abs(lo);
      });
      c.observe("spectrum of mu = (lambda^2, 1/lambda^2, 1, ..., 1) / ((n-3) + 4 gamma^2)", 1e-10,
                [&] {
                  return multiset_diff(sym_eigen(mu.matrix()).eigenvalues,
                                       mobius_diag(n, v).diagonal);
                });
      c.observe("diagonalization O^T D O = mu", 1e-10, [&] {
        const MobiusDiagonalization md = mobius_diag(n, v);
        return max_abs_diff(congruence(md.frame.matrix, md.diagonal), mu.matrix());
      });
      c.observe("frame orthonormal and complement orthogonal to v", 1e-12, [&] {
        const OrthogonalFrame f = orthogonal_frame(v);
        double e = orthogonality_error(f.matrix);
        for (const auto& uj : f.complement) e = std::max(e, std::abs(dot(uj, v.components())));
        return e;
      });
      c.observe("det mu closed form (relative)", 1e-9,
                [&] { return rel_diff(det(mu.matrix()), mobius_det_closed(n, v)); });
      c.observe("mu = B(v)^2 / tr B(v)^2", 1e-10,
                [&] { return max_abs_diff(mobius_from_boost(n, v).matrix(), mu.matrix()); });
      c.observe("mu = B(2 (x) v) / tr B(2 (x) v)", 1e-10, [&] {
        const SymmetricMatrix b2 = boost(doubled(v)).matrix();
        return max_abs_diff((1.0 / trace(b2)) * b2, mu.matrix());
      });
      c.observe("tr B(v)^2 = (n - 3) + 4 gamma^2 (relative)", 1e-11, [&] {
        const SymmetricMatrix b = boost(v).matrix();
        return rel_diff(trace(b * b), (n - 3) + 4.0 * g * g);
      });
    }
  }
}

void run_fidelity(Collector& c, std::size_t trials, std::uint64_t seed) {
  for (int n : {3, 4, 5, 8}) {
    const auto dim = static_cast<std::size_t>(n);
    for (std::size_t t = 0; t < trials; ++t) {
      Sampler s(derive_seed(seed, {kFidelityTag, dim, t}));
      const BallVector u = s.ball_vector(dim);
      const BallVector v = s.ball_vector(dim);
      const Matrix o = s.orthogonal_matrix(dim + 1);
      const double alpha = 10.0 * (1.0 - s.uniform(0.0, 1.0));
      const double beta = 10.0 * (1.0 - s.uniform(0.0, 1.0));

      const SymmetricMatrix mu_u = mobius(n, u).matrix();
      const SymmetricMatrix mu_v = mobius(n, v).matrix();
      const SymmetricMatrix nb_u = normalized_boost(u).matrix();
      const SymmetricMatrix nb_v = normalized_boost(v).matrix();
      const double f_mu = fidelity_spectral(mu_u, mu_v);
      const double f_nb = fidelity_spectral(nb_u, nb_v);

      c.observe("0 <= F <= 1 on density matrices", 1e-10, [&] {
        return std::max({0.0, f_mu - 1.0, -f_mu, f_nb - 1.0, -f_nb});
      });
      c.observe("F(rho, rho) = 1", 1e-10, [&] {
        return std::max(std::abs(fidelity_spectral(mu_u, mu_u) - 1.0),
                        std::abs(fidelity_spectral(nb_u, nb_u) - 1.0));
      });
      c.observe("F < 1 - 1e-6 when |rho - sigma|_max > 1e-3", 0.0, [&] {
        double e = 0.0;
        if (max_abs_diff(mu_u, mu_v) > 1e-3) e = std::max(e, f_mu - (1.0 - 1e-6));
        if (max_abs_diff(nb_u, nb_v) > 1e-3) e = std::max(e, f_nb - (1.0 - 1e-6));
        return std::max(e, 0.0);
      });
      c.observe("F(rho, sigma) = F(sigma, rho)", 1e-10,
                [&] { return std::abs(fidelity_spectral(mu_v, mu_u) - f_mu); });
      c.observe("F(O rho O^T, O sigma O^T) = F(rho, sigma)", 1e-9, [&] {
        return std::abs(fidelity_spectral(conjugate(o, mu_u), conjugate(o, mu_v)) - f_mu);
      });
      c.observe("F(alpha A, beta B) = sqrt(alpha beta) F(A, B) (relative)", 1e-10, [&] {
        const SymmetricMatrix b = boost(v).matrix();
        return rel_diff(fidelity_spectral(alpha * mu_u, beta * b),
                        std::sqrt(alpha * beta) * fidelity_spectral(mu_u, b));
      });
      c.observe("normalized boost fidelity closed form vs spectral", 1e-9,
                [&] { return std::abs(fidelity_boost_closed(u, v, n) - f_nb); });
      c.observe("tr (B(u) B(v)^2 B(u))^{1/2} = 2 gamma_{u (+) v} + n - 1", 1e-9, [&] {
        return std::abs(trace_sqrt_product(u, v) - trace_sqrt_product_spectral(u, v));
      });
      c.observe("gamma_midpoint = gamma(half(u) (+) half(v)) (relative)", 1e-11, [&] {
        return rel_diff(gamma_midpoint(u, v).value(),
                        gamma(einstein_add(half(u), half(v))).value());
      });
      c.observe("Möbius fidelity closed form vs spectral", 1e-9,
                [&] { return std::abs(fidelity_mobius_closed(u, v, n) - f_mu); });
      c.observe("Möbius fidelity = boost fidelity at doubled generators", 1e-10, [&] {
        return std::abs(fidelity_mobius_closed(u, v, n) -
                        fidelity_boost_closed(doubled(u), doubled(v), n));
      });
      if (n == 4) {
        c.observe(
            "printed Möbius numerator gamma_{u (+) v} + n - 1 vs spectral", 1e-3,
            [&] {
              return std::abs(printed::mobius_fidelity(gamma_add(u, v).value(), gamma(u).value(),
                                                       gamma(v).value(), n) -
                              f_mu);
            },
            Expectation::deviate);
      }
    }
  }

  c.observe(
      "printed midpoint gamma at u = 0, v = (0.6, 0, 0)", 1e-3,
      [&] {
        const BallVector u = BallVector::zero(3);
        const BallVector v({0.6, 0.0, 0.0});
        const double oracle = gamma(einstein_add(half(u), half(v))).value();
        return std::abs(printed::gamma_midpoint(gamma(u).value(), gamma(v).value(), 0.0) -
                        oracle);
      },
      Expectation::deviate);

  for (std::size_t t = 0; t < trials; ++t) {
    Sampler s(derive_seed(seed, {kQubitTag, 3, t}));
    const BallVector u = s.ball_vector(3);
    const BallVector v = s.ball_vector(3);
    const double from_density = qubit_fidelity_sq(u, v);
    const double from_gamma = qubit_fidelity_sq_gamma(u, v);
    const double from_bloch = qubit_fidelity_sq_bloch(u, v);

    c.observe("qubit F^2: density form = gamma form = Bloch form", 1e-10, [&] {
      return std::max({std::abs(from_density - from_gamma), std::abs(from_density - from_bloch),
                       std::abs(from_gamma - from_bloch)});
    });
    c.observe("F(mu_3u, mu_3v) = (1 + gamma_{u (+) v}) / (2 gamma_u gamma_v) = qubit F^2", 1e-10,
              [&] {
                const double m = fidelity_mobius_closed(u, v, 3);
                return std::max({std::abs(m - from_gamma), std::abs(m - from_density),
                                 std::abs(m - from_bloch)});
              });
  }
  c.observe("qubit F^2 = 0.82 at u = (0.6, 0, 0), v = (0, 0.6, 0)", 1e-10, [&] {
    const BallVector u({0.6, 0.0, 0.0});
    const BallVector v({0.0, 0.6, 0.0});
    return std::max({std::abs(qubit_fidelity_sq(u, v) - 0.82),
                     std::abs(qubit_fidelity_sq_gamma(u, v) - 0.82),
                     std::abs(qubit_fidelity_sq_bloch(u, v) - 0.82)});
  });
}

}  // namespace

std::vector<ReportRecord> run_suite(Suite suite, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) {
    throw Error(ErrorCode::invalid_argument, "trials must be >= 1");
  }
  std::vector<ReportRecord> out;
  auto run = [&](Suite which, auto body) {
    if (suite != Suite::all && suite != which) return;
    Collector c{std::string(to_string(which))};
    body(c, trials, seed);
    auto records = c.take();
    out.insert(out.end(), std::make_move_iterator(records.begin()),
               std::make_move_iterator(records.end()));
  };
  run(Suite::gyro, run_gyro);
  run(Suite::boost, run_boost);
  run(Suite::mobius, run_mobius);
  run(Suite::fidelity, run_fidelity);
  return out;
}

}  // namespace gyrofid

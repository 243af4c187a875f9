#include "hatom/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hatom/errors.hpp"
#include "hatom/hydrogenic.hpp"
#include "hatom/momentum_forms.hpp"
#include "hatom/specfun.hpp"

namespace hatom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Pinned tolerances, before tol_scale.
constexpr double kTolEquivalence = 1e-11;
constexpr double kTolQuadrature = 1e-7;
constexpr double kTolDiagonalization = 1e-7;
constexpr double kTolParseval = 1e-7;
constexpr double kTolLombardi = 1e-9;
constexpr double kTolHankel = 1e-7;
constexpr double kTolPPNorm = 1e-8;
constexpr double kTolTailSlope = 0.01;
constexpr double kTolGroundProduct = 1e-9;
constexpr double kTolIdentities = 1e-13;
constexpr double kTolLaguerre = 1e-12;
constexpr double kTolSO4 = 1e-10;
constexpr double kTolFigure = 1e-15;

using States = std::vector<std::pair<int, int>>;

States all_states(int max_n) {
  States out;
  for (int N = 1; N <= max_n; ++N) {
    for (int l = 0; l < N; ++l) out.emplace_back(N, l);
  }
  return out;
}

PhysicalScale scale_of(const VerificationConfig& c) { return PhysicalScale::scaled(c.hbar_beta); }

CheckResult start(std::string name, const States& states, double tolerance,
                  const VerificationConfig& config) {
  CheckResult r;
  r.name = std::move(name);
  r.states_covered = states;
  r.tolerance = tolerance * config.tol_scale;
  return r;
}

void require_grid(const EvaluationGrid& grid, const char* who) {
  if (grid.empty()) throw PreconditionError(std::string(who) + ": empty grid");
}

void require_max_n(int max_n, int limit, const char* who) {
  if (max_n < 1 || max_n > limit) {
    throw PreconditionError(std::string(who) + ": max N must lie in [1, " +
                            std::to_string(limit) + "]");
  }
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Relative standard deviation of a set of complex samples.
double relative_spread(const std::vector<std::complex<double>>& v, std::complex<double>* mean_out) {
  std::complex<double> mean = 0.0;
  for (const auto& z : v) mean += z;
  mean /= static_cast<double>(v.size());
  double var = 0.0;
  for (const auto& z : v) var += std::norm(z - mean);
  var /= static_cast<double>(v.size());
  if (mean_out) *mean_out = mean;
  return std::sqrt(var) / std::abs(mean);
}

double max_or_inf(double current, double candidate) {
  if (std::isnan(candidate)) return kInf;
  return std::max(current, candidate);
}

struct Bump {
  double a;
  double b;
  double value(double r) const {
    const double s = (2.0 * r - (a + b)) / (b - a);
    if (std::abs(s) >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - s * s));
  }
  double derivative(double r) const {
    const double s = (2.0 * r - (a + b)) / (b - a);
    if (std::abs(s) >= 1.0) return 0.0;
    const double w = 1.0 - s * s;
    return value(r) * (-2.0 * s / (w * w)) * (2.0 / (b - a));
  }
};

std::vector<CompactTestFunction> diagonalization_test_functions() {
  std::vector<CompactTestFunction> out;
  const Bump bump{1.0, 3.0};
  out.push_back({[bump](double r) { return bump.value(r); },
                 [bump](double r) { return bump.derivative(r); }, bump.a, bump.b});

  const double a = 0.5;
  const double b = 2.5;
  out.push_back({[=](double r) { return std::pow((r - a) * (b - r), 4); },
                 [=](double r) {
                   const double u = r - a;
                   const double v = b - r;
                   return 4.0 * u * u * u * v * v * v * (v - u);
                 },
                 a, b});

  const double lo = 1.0;
  const double hi = 4.0;
  const double k = std::numbers::pi / (hi - lo);
  out.push_back({[=](double r) { return std::pow(std::sin(k * (r - lo)), 4); },
                 [=](double r) {
                   const double s = std::sin(k * (r - lo));
                   return 4.0 * k * s * s * s * std::cos(k * (r - lo));
                 },
                 lo, hi});
  return out;
}

// Default grids of the individual suites.
EvaluationGrid mirrored_default() { return EvaluationGrid::default_momentum().with_negatives(); }
EvaluationGrid diagonalization_grid() { return EvaluationGrid::linear(-10.0, 10.0, 41); }

using SuiteRunner = std::function<std::vector<CheckResult>(const VerificationConfig&)>;

const std::vector<std::pair<std::string, SuiteRunner>>& registry() {
  static const std::vector<std::pair<std::string, SuiteRunner>> suites = {
      {"form_equivalence",
       [](const VerificationConfig& c) {
         return std::vector{verify_form_equivalence(8, mirrored_default(), c)};
       }},
      {"quadrature",
       [](const VerificationConfig& c) {
         return std::vector{verify_quadrature(4, mirrored_default(), c)};
       }},
      {"diagonalization",
       [](const VerificationConfig& c) {
         return std::vector{verify_diagonalization(diagonalization_grid(), c)};
       }},
      {"parseval", [](const VerificationConfig& c) { return std::vector{verify_parseval(5, c)}; }},
      {"lo_proportionality",
       [](const VerificationConfig& c) {
         return std::vector{verify_lo_proportionality(6, mirrored_default(), c)};
       }},
      {"pp_hankel",
       [](const VerificationConfig& c) {
         return std::vector{verify_pp_vs_hankel(4, EvaluationGrid::default_momentum(), c)};
       }},
      {"pp_normalization",
       [](const VerificationConfig& c) { return std::vector{verify_pp_normalization(5, c)}; }},
      {"pp_tail", [](const VerificationConfig& c) { return std::vector{verify_pp_tail(c)}; }},
      {"uncertainty",
       [](const VerificationConfig& c) {
         return std::vector{verify_uncertainty(5, c), verify_uncertainty_ground_state(c)};
       }},
      {"special_functions",
       [](const VerificationConfig& c) {
         return std::vector{verify_trig_identities(c), verify_laguerre(c)};
       }},
      {"so4_constancy",
       [](const VerificationConfig& c) {
         return std::vector{verify_so4_constancy(6, mirrored_default(), c)};
       }},
      {"figure", [](const VerificationConfig& c) { return std::vector{verify_figure_values(c)}; }},
  };
  return suites;
}

}  // namespace

GridDescriptor GridDescriptor::of(const EvaluationGrid& grid) {
  GridDescriptor d;
  d.spacing = grid.spacing;
  d.units = grid.units;
  d.count = grid.size();
  d.mirrored = grid.mirrored;
  if (!grid.empty()) {
    d.min = grid.min();
    d.max = grid.max();
  }
  return d;
}

void CheckResult::settle() { passed = max_residual <= tolerance; }

void VerificationConfig::validate() const {
  if (!(tol_scale > 0.0) || !std::isfinite(tol_scale)) {
    throw PreconditionError("verification: tol_scale must be positive and finite");
  }
  if (!(hbar_beta > 0.0) || !std::isfinite(hbar_beta)) {
    throw PreconditionError("verification: hbar_beta must be positive and finite");
  }
  for (const auto& s : suites) {
    if (!is_suite(s)) throw PreconditionError("verification: unknown suite '" + s + "'");
  }
  quadrature.validate();
}

bool VerificationConfig::operator==(const VerificationConfig& o) const {
  return suites == o.suites && tol_scale == o.tol_scale && hbar_beta == o.hbar_beta &&
         convention == o.convention && quadrature.rel_tol == o.quadrature.rel_tol &&
         quadrature.abs_tol == o.quadrature.abs_tol &&
         quadrature.max_radius == o.quadrature.max_radius &&
         quadrature.panel_budget == o.quadrature.panel_budget && timestamp == o.timestamp;
}

bool VerificationReport::operator==(const VerificationReport& o) const {
  return results == o.results && config == o.config && timestamp == o.timestamp &&
         overall_pass == o.overall_pass;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, runner] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

CheckResult verify_form_equivalence(int max_n, const EvaluationGrid& grid,
                                    const VerificationConfig& config) {
  require_max_n(max_n, 8, "verify_form_equivalence");
  require_grid(grid, "verify_form_equivalence");
  const auto scale = scale_of(config);
  const double q = scale.hbar_beta();
  const auto& conv = config.convention;
  CheckResult r = start("form_equivalence", all_states(max_n), kTolEquivalence, config);
  r.grid = GridDescriptor::of(grid);

  double worst = 0.0;
  double worst_script = 0.0;
  for (const auto& [N, l] : r.states_covered) {
    const QuantumState s(N, l, scale);
    // Align on the value at p = hbar beta, where every form is nonzero.
    const auto t_ref = psi_trig(s, q, conv);
    const auto g_ref = psi_gegenbauer(s, q, conv);
    if (std::abs(t_ref) == 0.0 || std::abs(g_ref) == 0.0) {
      worst = kInf;
      r.details += "zero reference value for (" + std::to_string(N) + "," + std::to_string(l) + "); ";
      continue;
    }
    const auto align = t_ref / g_ref;
    for (double x : grid.points) {
      const double p = x * q;
      const auto t = psi_trig(s, p, conv);
      const auto g = psi_gegenbauer(s, p, conv);
      worst = max_or_inf(worst, std::abs(t - g * align) / (1.0 + std::abs(t)));
      worst_script = max_or_inf(worst_script, std::abs(psi_script_D(s, p, conv) - g));
    }
  }
  r.max_residual = std::max(worst, worst_script);
  r.details += "trig vs gegenbauer " + format_double(worst) + "; script_D vs gegenbauer " +
               format_double(worst_script);
  r.settle();
  return r;
}

CheckResult verify_quadrature(int max_n, const EvaluationGrid& grid,
                              const VerificationConfig& config) {
  require_max_n(max_n, 8, "verify_quadrature");
  require_grid(grid, "verify_quadrature");
  const auto scale = scale_of(config);
  const double q = scale.hbar_beta();
  CheckResult r = start("quadrature", all_states(max_n), kTolQuadrature, config);
  r.grid = GridDescriptor::of(grid);

  int failures = 0;
  double worst = 0.0;
  for (const auto& [N, l] : r.states_covered) {
    const QuantumState s(N, l, scale);
    QuadratureSpec spec = config.quadrature;
    spec.max_radius = slater_truncation_radius(normalized_slater_expansion(s), spec.abs_tol);
    const RadialFunction R = [&s](double rr) { return radial_wavefunction(s, rr); };
    for (double x : grid.points) {
      const double p = x * q;
      try {
        const auto numeric = transform_numeric(R, p, config.convention, spec, scale.hbar);
        worst = max_or_inf(worst, std::abs(numeric - psi_trig(s, p, config.convention)));
      } catch (const ConvergenceError& e) {
        ++failures;
        worst = kInf;
        r.details += "no convergence at (" + std::to_string(N) + "," + std::to_string(l) +
                     ") p=" + format_double(p) + "; ";
      }
    }
  }
  r.max_residual = worst;
  r.details += std::to_string(failures) + " quadrature failures";
  r.settle();
  return r;
}

CheckResult verify_diagonalization(const EvaluationGrid& grid, const VerificationConfig& config) {
  require_grid(grid, "verify_diagonalization");
  CheckResult r = start("diagonalization", {}, kTolDiagonalization, config);
  r.grid = GridDescriptor::of(grid);
  r.grid.units = "hbar";
  std::ostringstream notes;
  const char* labels[] = {"bump[1,3]", "poly8[0.5,2.5]", "sin4[1,4]"};
  int i = 0;
  for (const auto& f : diagonalization_test_functions()) {
    const double res = diagonalization_residual(f, grid, config.quadrature, config.convention);
    r.max_residual = max_or_inf(r.max_residual, res);
    notes << labels[i++] << " " << format_double(res) << "; ";
  }
  r.details = notes.str() + "eigenvalue sign " + format_double(config.convention.eigenvalue_sign());
  r.settle();
  return r;
}

CheckResult verify_parseval(int max_n, const VerificationConfig& config) {
  require_max_n(max_n, 8, "verify_parseval");
  const auto scale = scale_of(config);
  CheckResult r = start("parseval", all_states(max_n), kTolParseval, config);
  r.grid.spacing = "adaptive";
  r.grid.units = "hbar*beta";
  for (const auto& [N, l] : r.states_covered) {
    const QuantumState s(N, l, scale);
    const auto res = parseval_check(normalized_slater_expansion(s), config.quadrature);
    r.max_residual = max_or_inf(r.max_residual, std::abs(res.momentum_norm - 1.0));
    r.max_residual = max_or_inf(r.max_residual, std::abs(res.position_norm - 1.0));
    if (N == 1) {
      // Ground state: |psi|^2 = (4/beta) q^4/(q^2+p^2)^2 integrates to q/beta = hbar exactly.
      r.details = "ground state momentum norm " + format_double(res.momentum_norm) +
                  " (exact 1)";
    }
  }
  r.settle();
  return r;
}

CheckResult verify_lo_proportionality(int max_n, const EvaluationGrid& grid,
                                      const VerificationConfig& config) {
  require_max_n(max_n, 8, "verify_lo_proportionality");
  require_grid(grid, "verify_lo_proportionality");
  const auto scale = scale_of(config);
  const double q = scale.hbar_beta();
  CheckResult r = start("lo_proportionality", all_states(max_n), kTolLombardi, config);
  r.grid = GridDescriptor::of(grid);
  std::ostringstream notes;
  notes << "constants psi/alpha:";
  for (const auto& [N, l] : r.states_covered) {
    const QuantumState s(N, l, scale);
    std::vector<std::complex<double>> ratios;
    for (double x : grid.points) {
      const double p = x * q;
      ratios.push_back(psi_trig(s, p, config.convention) /
                       lombardi_ogilvie_alpha(s, p, config.convention));
    }
    std::complex<double> mean;
    r.max_residual = max_or_inf(r.max_residual, relative_spread(ratios, &mean));
    notes << " (" << N << "," << l << ")=" << format_double(mean.real()) << (mean.imag() < 0 ? "" : "+")
          << format_double(mean.imag()) << "i";
  }
  r.details = notes.str();
  r.settle();
  return r;
}

CheckResult verify_pp_vs_hankel(int max_n, const EvaluationGrid& grid,
                                const VerificationConfig& config) {
  require_max_n(max_n, 8, "verify_pp_vs_hankel");
  const EvaluationGrid positive = grid.nonnegative();
  require_grid(positive, "verify_pp_vs_hankel");
  const auto scale = scale_of(config);
  const double q = scale.hbar_beta();
  CheckResult r = start("pp_hankel", all_states(max_n), kTolHankel, config);
  r.grid = GridDescriptor::of(positive);
  std::ostringstream notes;
  notes << "constants G/hankel:";

  for (const auto& [N, l] : r.states_covered) {
    const QuantumState s(N, l, scale);
    QuadratureSpec spec = config.quadrature;
    // The r^2 weight needs a longer tail than the bound for r.
    const double radius =
        slater_truncation_radius(normalized_slater_expansion(s), spec.abs_tol * 1e-3);
    std::vector<double> g;
    std::vector<double> h;
    for (double x : positive.points) {
      const double p = x * q;
      g.push_back(podolsky_pauling_G(s, p));
      const double k = p / scale.hbar;
      auto integrand = [&](double rr) {
        return specfun::spherical_bessel_j(l, k * rr) * radial_wavefunction(s, rr) * rr * rr;
      };
      const double periods = k * radius / (2.0 * std::numbers::pi);
      const int panels = static_cast<int>(std::ceil(periods / 2.0)) + 4;
      h.push_back(integrate_adaptive(integrand, 0.0, radius, spec, panels).value);
    }
    double gmax = 0.0;
    for (double v : g) gmax = std::max(gmax, std::abs(v));
    std::vector<std::complex<double>> ratios;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (std::abs(g[i]) >= 1e-4 * gmax) ratios.emplace_back(g[i] / h[i], 0.0);
    }
    std::complex<double> mean;
    r.max_residual = max_or_inf(r.max_residual, relative_spread(ratios, &mean));
    notes << " (" << N << "," << l << ")=" << format_double(mean.real());
  }
  r.details = notes.str() + "; points with |G| < 1e-4 max|G| excluded";
  r.settle();
  return r;
}

CheckResult verify_pp_normalization(int max_n, const VerificationConfig& config) {
  require_max_n(max_n, 8, "verify_pp_normalization");
  const auto scale = scale_of(config);
  const double q = scale.hbar_beta();
  CheckResult r = start("pp_normalization", all_states(max_n), kTolPPNorm, config);
  r.grid.spacing = "adaptive";
  QuadratureSpec spec = config.quadrature;
  spec.rel_tol = std::min(spec.rel_tol, 1e-13);
  for (const auto& [N, l] : r.states_covered) {
    const QuantumState s(N, l, scale);
    auto integrand = [&](double u) {
      if (u >= 0.5 * std::numbers::pi) return 0.0;
      const double c = std::cos(u);
      const double p = q * std::tan(u);
      const double g = podolsky_pauling_G(s, p);
      return g * g * p * p * q / (c * c);
    };
    const double norm = integrate_adaptive(integrand, 0.0, 0.5 * std::numbers::pi, spec, 4).value;
    r.max_residual = max_or_inf(r.max_residual, std::abs(norm - 1.0));
  }
  r.settle();
  return r;
}

CheckResult verify_pp_tail(const VerificationConfig& config) {
  const auto scale = scale_of(config);
  const double q = scale.hbar_beta();
  const QuantumState s(1, 0, scale);
  CheckResult r = start("pp_tail", {{1, 0}}, kTolTailSlope, config);
  // Least-squares slope of ln G^2 against ln(1 + p^2/q^2) over p in [10, 1000] q.
  const int count = 20;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int k = 0; k < count; ++k) {
    const double x = std::pow(10.0, 1.0 + 2.0 * k / (count - 1));
    const double g = podolsky_pauling_G(s, x * q);
    const double lx = std::log1p(x * x);
    const double ly = std::log(g * g);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  r.grid.spacing = "log";
  r.grid.min = 10.0;
  r.grid.max = 1000.0;
  r.grid.count = count;
  r.max_residual = std::abs(slope + 4.0) / 4.0;
  if (std::isnan(r.max_residual)) r.max_residual = kInf;
  r.details = "fitted exponent " + format_double(slope) + " (expected -4)";
  r.settle();
  return r;
}

CheckResult verify_uncertainty(int max_n, const VerificationConfig& config) {
  require_max_n(max_n, 8, "verify_uncertainty");
  const auto scale = scale_of(config);
  CheckResult r = start("uncertainty", all_states(max_n), 0.0, config);
  double lowest = kInf;
  for (const auto& [N, l] : r.states_covered) {
    const QuantumState s(N, l, scale);
    const double hbar2 = scale.hbar * scale.hbar;
    const double product = expectation_r2(s) * expectation_p2(s) / hbar2;
    lowest = std::min(lowest, std::isnan(product) ? -kInf : product);
  }
  // Residual is the amount by which the bound 9/4 is violated.
  r.max_residual = std::max(0.0, 2.25 - lowest);
  r.details = "smallest <r^2><p^2>/hbar^2 = " + format_double(lowest) + " (bound 9/4)";
  r.settle();
  return r;
}

CheckResult verify_uncertainty_ground_state(const VerificationConfig& config) {
  const auto scale = scale_of(config);
  const QuantumState s(1, 0, scale);
  CheckResult r = start("uncertainty_ground_state", {{1, 0}}, kTolGroundProduct, config);
  const double product = expectation_r2(s) * expectation_p2(s) / (scale.hbar * scale.hbar);
  r.max_residual = std::abs(product - 3.0);
  if (std::isnan(r.max_residual)) r.max_residual = kInf;
  r.details = "<r^2><p^2>/hbar^2 = " + format_double(product) + " (exact 3)";
  r.settle();
  return r;
}

CheckResult verify_trig_identities(const VerificationConfig& config) {
  using mp = boost::multiprecision::cpp_bin_float_50;
  CheckResult r = start("trig_identities", {}, kTolIdentities, config);
  r.grid.spacing = "linear";
  r.grid.units = "angle";
  r.grid.min = 0.5 * std::numbers::pi / 200.0;
  r.grid.max = 0.5 * std::numbers::pi * 199.0 / 200.0;
  r.grid.count = 199;

  // sin g C^1_n(cos g) = sin((n+1) g),  sin g D^1_n(cos g) = cos((n+1) g),
  // and together sin g (C^1_n + i D^1_n)(cos g) = i e^{-i(n+1) g}; the
  // trig side is taken in 50 digits at the exact double x.
  for (int n = 0; n <= 40; ++n) {
    for (int k = 1; k < 200; ++k) {
      const double x = std::cos(k * (0.5 * std::numbers::pi) / 200.0);
      const mp X = x;
      const mp g = boost::multiprecision::acos(X);
      const double s = static_cast<double>(boost::multiprecision::sqrt(1 - X * X));
      const double c_exact = static_cast<double>(boost::multiprecision::sin((n + 1) * g));
      const double d_exact = static_cast<double>(boost::multiprecision::cos((n + 1) * g));
      const double c = s * specfun::gegenbauer_C(n, 1.0, x);
      const double d = s * specfun::gegenbauer_D1(n, x);
      const std::complex<double> both = 2.0 * s * specfun::gegenbauer_script_D1(n, x);
      const std::complex<double> expected(c_exact, d_exact);  // = i e^{-i(n+1) g}
      r.max_residual = max_or_inf(r.max_residual, std::abs(c - c_exact));
      r.max_residual = max_or_inf(r.max_residual, std::abs(d - d_exact));
      r.max_residual = max_or_inf(r.max_residual, std::abs(both - expected));
    }
  }
  r.details = "n <= 40, absolute on the sin-weighted forms";
  r.settle();
  return r;
}

CheckResult verify_laguerre(const VerificationConfig& config) {
  using mp = boost::multiprecision::cpp_bin_float_50;
  CheckResult r = start("laguerre_recurrence", {}, kTolLaguerre, config);
  r.grid.spacing = "linear";
  r.grid.units = "x";
  r.grid.min = 0.0;
  r.grid.max = 30.0;
  r.grid.count = 61;
  // Recurrence against the explicit alternating sum in 50 digits,
  // relative to max(1, |L|).
  for (int n = 0; n <= 20; ++n) {
    for (int alpha = 0; alpha <= 15; ++alpha) {
      for (int i = 0; i <= 60; ++i) {
        const double x = 0.5 * i;
        mp sum = 0;
        mp term = 1;
        for (int j = 1; j <= n; ++j) term = term * (alpha + j) / j;  // C(n+alpha, n)
        for (int m = 0; m <= n; ++m) {
          sum += (m % 2 == 0) ? term : mp(-term);
          term = term * (n - m) / (alpha + m + 1) * x / (m + 1);
        }
        const double exact = static_cast<double>(sum);
        const double rec = specfun::laguerre(n, alpha, x);
        r.max_residual =
            max_or_inf(r.max_residual, std::abs(rec - exact) / std::max(1.0, std::abs(exact)));
      }
    }
  }
  r.details = "n <= 20, alpha <= 15, x in [0, 30]";
  r.settle();
  return r;
}

CheckResult verify_so4_constancy(int max_n, const EvaluationGrid& grid,
                                 const VerificationConfig& config) {
  require_max_n(max_n, 8, "verify_so4_constancy");
  require_grid(grid, "verify_so4_constancy");
  const auto scale = scale_of(config);
  const double q = scale.hbar_beta();
  States states;
  for (int N = 1; N <= max_n; ++N) states.emplace_back(N, N - 1);
  CheckResult r = start("so4_constancy", states, kTolSO4, config);
  r.grid = GridDescriptor::of(grid);
  for (const auto& [N, l] : states) {
    const QuantumState s(N, l, scale);
    std::vector<std::complex<double>> values;
    for (double x : grid.points) {
      const double p = x * q;
      values.emplace_back(std::norm(psi_trig(s, p, config.convention)) *
                              std::pow(q * q + p * p, N + 1),
                          0.0);
    }
    r.max_residual = max_or_inf(r.max_residual, relative_spread(values, nullptr));
  }
  r.settle();
  return r;
}

CheckResult verify_figure_values(const VerificationConfig& config) {
  CheckResult r = start("figure", {{1, 0}}, kTolFigure, config);
  const PhysicalScale unit = PhysicalScale::scaled(1.0);
  const double pp0 = distribution_max_l(DistributionFamily::podolsky_pauling, 1, 0.0, unit);
  const double pp1 = distribution_max_l(DistributionFamily::podolsky_pauling, 1, 1.0, unit);
  const double lo1 = distribution_max_l(DistributionFamily::lombardi_ogilvie, 1, 1.0, unit);
  r.max_residual = std::max({std::abs(pp0 - 1.0), std::abs(pp1 - 1.0 / 16.0), std::abs(lo1 - 0.25)});
  r.details = "PP(0)=" + format_double(pp0) + " PP(1)=" + format_double(pp1) +
              " LO(1)=" + format_double(lo1) + " at hbar beta = 1";
  r.settle();
  return r;
}

VerificationReport run_all(const VerificationConfig& config) {
  config.validate();
  std::vector<std::pair<std::string, std::future<std::vector<CheckResult>>>> jobs;
  for (const auto& [name, runner] : registry()) {
    const bool selected = config.suites.empty() ||
                          std::find(config.suites.begin(), config.suites.end(), name) !=
                              config.suites.end();
    if (!selected) continue;
    jobs.emplace_back(name, std::async(std::launch::async, runner, std::cref(config)));
  }

  VerificationReport report;
  report.config = config;
  report.timestamp = config.timestamp;
  for (auto& [name, job] : jobs) {
    try {
      for (auto& result : job.get()) report.results.push_back(std::move(result));
    } catch (const std::exception& e) {
      CheckResult failed;
      failed.name = name;
      failed.max_residual = kInf;
      failed.details = std::string("suite raised: ") + e.what();
      failed.settle();
      report.results.push_back(std::move(failed));
    }
  }
  report.overall_pass = std::all_of(report.results.begin(), report.results.end(),
                                    [](const CheckResult& c) { return c.passed; });
  return report;
}

// --- serialization -----------------------------------------------------------

namespace {

nlohmann::json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;  // JSON has no infinities; null reads back as +inf
}

double read_number(const nlohmann::json& j) {
  return j.is_null() ? kInf : j.get<double>();
}

}  // namespace

void to_json(nlohmann::json& j, const GridDescriptor& g) {
  j = {{"spacing", g.spacing}, {"units", g.units}, {"min", g.min},
       {"max", g.max},         {"count", g.count}, {"mirrored", g.mirrored}};
}

void from_json(const nlohmann::json& j, GridDescriptor& g) {
  j.at("spacing").get_to(g.spacing);
  j.at("units").get_to(g.units);
  j.at("min").get_to(g.min);
  j.at("max").get_to(g.max);
  j.at("count").get_to(g.count);
  j.at("mirrored").get_to(g.mirrored);
}

void to_json(nlohmann::json& j, const CheckResult& r) {
  nlohmann::json states = nlohmann::json::array();
  for (const auto& [N, l] : r.states_covered) states.push_back({N, l});
  j = {{"name", r.name},
       {"states_covered", states},
       {"grid", r.grid},
       {"max_residual", number(r.max_residual)},
       {"tolerance", number(r.tolerance)},
       {"passed", r.passed},
       {"details", r.details}};
}

void from_json(const nlohmann::json& j, CheckResult& r) {
  j.at("name").get_to(r.name);
  r.states_covered.clear();
  for (const auto& s : j.at("states_covered")) {
    r.states_covered.emplace_back(s.at(0).get<int>(), s.at(1).get<int>());
  }
  j.at("grid").get_to(r.grid);
  r.max_residual = read_number(j.at("max_residual"));
  r.tolerance = read_number(j.at("tolerance"));
  j.at("passed").get_to(r.passed);
  j.at("details").get_to(r.details);
}

void to_json(nlohmann::json& j, const VerificationConfig& c) {
  j = {{"suites", c.suites},
       {"tol_scale", c.tol_scale},
       {"hbar_beta", c.hbar_beta},
       {"convention",
        {{"kernel", to_string(c.convention.kernel)},
         {"prefactor", to_string(c.convention.prefactor)}}},
       {"quadrature",
        {{"rel_tol", c.quadrature.rel_tol},
         {"abs_tol", c.quadrature.abs_tol},
         {"max_radius", c.quadrature.max_radius},
         {"panel_budget", c.quadrature.panel_budget}}},
       {"timestamp", c.timestamp}};
}

void from_json(const nlohmann::json& j, VerificationConfig& c) {
  j.at("suites").get_to(c.suites);
  j.at("tol_scale").get_to(c.tol_scale);
  j.at("hbar_beta").get_to(c.hbar_beta);
  const auto& conv = j.at("convention");
  c.convention.kernel = parse_kernel_sign(conv.at("kernel").get<std::string>());
  c.convention.prefactor = parse_phase_prefactor(conv.at("prefactor").get<std::string>());
  const auto& q = j.at("quadrature");
  q.at("rel_tol").get_to(c.quadrature.rel_tol);
  q.at("abs_tol").get_to(c.quadrature.abs_tol);
  q.at("max_radius").get_to(c.quadrature.max_radius);
  q.at("panel_budget").get_to(c.quadrature.panel_budget);
  j.at("timestamp").get_to(c.timestamp);
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = {{"results", r.results},
       {"config", r.config},
       {"timestamp", r.timestamp},
       {"overall_pass", r.overall_pass}};
}

void from_json(const nlohmann::json& j, VerificationReport& r) {
  j.at("results").get_to(r.results);
  j.at("config").get_to(r.config);
  j.at("timestamp").get_to(r.timestamp);
  j.at("overall_pass").get_to(r.overall_pass);
}

}  // namespace hatom

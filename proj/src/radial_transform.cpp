#include "hatom/radial_transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>

#include "hatom/errors.hpp"
#include "hatom/specfun.hpp"

namespace hatom {

namespace {

constexpr std::complex<double> kI(0.0, 1.0);

double kernel_direction(const TransformConvention& conv) {
  return conv.kernel == KernelSign::outgoing ? 1.0 : -1.0;
}

// Two oscillation periods per starting panel keeps the first Kronrod pass honest.
int oscillation_panels(double p, double radius, double hbar, int budget) {
  const double periods = std::abs(p) * radius / (2.0 * std::numbers::pi * hbar);
  const double panels = std::ceil(periods / 2.0) + 1.0;
  return static_cast<int>(std::min(panels, std::max(1.0, budget / 2.0)));
}

std::complex<double> half_line_transform(const RadialFunction& f, double p, double radius,
                                         const TransformConvention& conv,
                                         const QuadratureSpec& spec, double hbar) {
  if (!(radius > 0.0)) {
    throw PreconditionError("transform_numeric: truncation radius must be positive");
  }
  if (!(hbar > 0.0)) throw PreconditionError("transform_numeric: hbar must be positive");
  const double k = kernel_direction(conv) * p / hbar;
  auto integrand = [&](double r) {
    const double w = f(r) * r;
    return std::complex<double>(w * std::cos(k * r), w * std::sin(k * r));
  };
  const auto result = integrate_adaptive(integrand, 0.0, radius, spec,
                                         oscillation_panels(p, radius, hbar, spec.panel_budget));
  return conv.phase() * result.value;
}

}  // namespace

std::complex<double> TransformConvention::phase() const {
  if (prefactor == PhasePrefactor::none) return 1.0;
  return kernel == KernelSign::incoming ? kI : -kI;
}

std::string to_string(KernelSign k) {
  return k == KernelSign::outgoing ? "outgoing" : "incoming";
}

std::string to_string(PhasePrefactor f) {
  return f == PhasePrefactor::none ? "none" : "spherical_hankel";
}

KernelSign parse_kernel_sign(std::string_view s) {
  if (s == "outgoing") return KernelSign::outgoing;
  if (s == "incoming") return KernelSign::incoming;
  throw PreconditionError("unknown kernel sign: " + std::string(s));
}

PhasePrefactor parse_phase_prefactor(std::string_view s) {
  if (s == "none") return PhasePrefactor::none;
  if (s == "spherical_hankel") return PhasePrefactor::spherical_hankel;
  throw PreconditionError("unknown phase prefactor: " + std::string(s));
}

std::complex<double> reexpress(std::complex<double> value, const TransformConvention& from,
                               const TransformConvention& to) {
  std::complex<double> bare = value / from.phase();
  if (from.kernel != to.kernel) bare = std::conj(bare);
  return to.phase() * bare;
}

std::complex<double> reflect_momentum(std::complex<double> value,
                                      const TransformConvention& conv) {
  return conv.phase() * std::conj(value / conv.phase());
}

std::complex<double> transform_numeric(const RadialFunction& f, double p,
                                       const TransformConvention& conv,
                                       const QuadratureSpec& spec, double hbar) {
  return half_line_transform(f, p, spec.max_radius, conv, spec, hbar);
}

std::complex<double> transform_numeric(const SlaterExpansion& f, double p,
                                       const TransformConvention& conv,
                                       const QuadratureSpec& spec) {
  const double radius =
      spec.max_radius > 0.0 ? spec.max_radius : slater_truncation_radius(f, spec.abs_tol);
  return half_line_transform([&f](double r) { return f.evaluate(r); }, p, radius, conv, spec,
                             f.scale.hbar);
}

double slater_truncation_radius(const SlaterExpansion& f, double abs_tol) {
  if (!(abs_tol > 0.0)) throw PreconditionError("slater_truncation_radius: abs_tol must be > 0");
  const double two_beta = 2.0 * f.scale.beta;
  // int_R^inf rho^k e^{-rho/2} r dr = 2^{k+2} Gamma(k+2, rho_R/2) / (2 beta)^2.
  auto tail = [&](double rho) {
    double bound = 0.0;
    for (std::size_t t = 0; t < f.coefficients.size(); ++t) {
      const int k = f.l + static_cast<int>(t);
      bound += std::abs(f.prefactor * f.coefficients[t]) * std::pow(2.0, k + 2) *
               boost::math::tgamma(k + 2.0, 0.5 * rho);
    }
    return bound / (two_beta * two_beta);
  };
  double rho = 8.0;
  while (tail(rho) >= abs_tol / 10.0 && rho < 1e5) rho *= 1.25;
  return rho / two_beta;
}

std::complex<double> transform_slater_closed(int l_plus_t, double p, const PhysicalScale& scale,
                                             const TransformConvention& conv) {
  if (l_plus_t < 0) throw DomainError("transform_slater_closed: l + t must be >= 0");
  const int n = l_plus_t + 1;
  const double alpha = 0.5;
  const double b = p / (2.0 * scale.hbar_beta());
  const double theta = std::atan2(b, alpha);
  const double modulus =
      specfun::factorial(n) / std::pow(alpha * alpha + b * b, 0.5 * (n + 1));
  const double phase_angle = kernel_direction(conv) * (n + 1) * theta;
  return conv.phase() * std::polar(modulus, phase_angle);
}

std::complex<double> transform_slater_expansion(const SlaterExpansion& f, double p,
                                                const TransformConvention& conv) {
  std::complex<double> sum = 0.0;
  for (std::size_t t = 0; t < f.coefficients.size(); ++t) {
    sum += f.coefficients[t] *
           transform_slater_closed(f.l + static_cast<int>(t), p, f.scale, conv);
  }
  const double two_beta = 2.0 * f.scale.beta;
  return f.prefactor * sum / (two_beta * two_beta);
}

ParsevalResult parseval_check(const SlaterExpansion& f, const QuadratureSpec& spec) {
  ParsevalResult out;
  if (f.coefficients.empty() || f.prefactor == 0.0) return out;

  const double radius =
      spec.max_radius > 0.0 ? spec.max_radius : slater_truncation_radius(f, spec.abs_tol);
  auto position = [&f](double r) {
    const double v = f.evaluate(r);
    return v * v * r * r;
  };
  out.position_norm = integrate_adaptive(position, 0.0, radius, spec, 8).value;

  // p = hbar beta tan(u) turns the line into (-pi/2, pi/2) with a smooth integrand.
  const double q = f.scale.hbar_beta();
  auto momentum = [&](double u) {
    const double c = std::cos(u);
    if (c <= 0.0) return 0.0;
    const double p = q * std::tan(u);
    return std::norm(transform_slater_expansion(f, p)) * q / (c * c);
  };
  const double half = 0.5 * std::numbers::pi;
  const double line = integrate_adaptive(momentum, -half, half, spec, 8).value;
  out.momentum_norm = line / (2.0 * std::numbers::pi * f.scale.hbar);
  return out;
}

double diagonalization_residual(const CompactTestFunction& test, const EvaluationGrid& p_grid,
                                const QuadratureSpec& spec, const TransformConvention& conv) {
  if (!test.value || !test.derivative) {
    throw PreconditionError("diagonalization_residual: value and derivative are required");
  }
  if (!(test.support_lo > 0.0) || !(test.support_hi > test.support_lo)) {
    throw PreconditionError(
        "diagonalization_residual: support must be a bounded interval away from r = 0");
  }
  const double lo = test.support_lo;
  const double hi = test.support_hi;
  const double edge = std::max(std::abs(test.value(lo)), std::abs(test.value(hi)));
  if (edge > 1e-12) {
    throw PreconditionError("diagonalization_residual: test function must vanish at the support ends");
  }
  if (p_grid.empty()) throw PreconditionError("diagonalization_residual: empty grid");

  const double direction = kernel_direction(conv);
  auto transform_on_support = [&](double p, const auto& g) {
    const double k = direction * p;
    auto integrand = [&](double r) {
      const double w = g(r) * r;
      return std::complex<double>(w * std::cos(k * r), w * std::sin(k * r));
    };
    const int panels = oscillation_panels(p, hi - lo, 1.0, spec.panel_budget);
    return integrate_adaptive(integrand, lo, hi, spec, panels).value;
  };
  // p_r f = -i (f' + f / r); the real part f' + f/r is transformed, -i applied after.
  auto f = [&](double r) { return test.value(r); };
  auto momentum_image = [&](double r) { return test.derivative(r) + test.value(r) / r; };

  double worst = 0.0;
  for (double p : p_grid.points) {
    const std::complex<double> h_f = transform_on_support(p, f);
    const std::complex<double> h_pf =
        std::complex<double>(0.0, -1.0) * transform_on_support(p, momentum_image);
    worst = std::max(worst, std::abs(h_pf - conv.eigenvalue_sign() * p * h_f));
  }
  return worst;
}

}  // namespace hatom

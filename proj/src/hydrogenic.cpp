#include "hatom/hydrogenic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hatom/errors.hpp"
#include "hatom/momentum_forms.hpp"
#include "hatom/quadrature.hpp"
#include "hatom/specfun.hpp"

namespace hatom {

PhysicalScale PhysicalScale::scaled(double hbar_beta) {
  PhysicalScale s;
  s.hbar = 1.0;
  s.beta = hbar_beta;
  s.mu = 1.0;
  s.validate();
  return s;
}

PhysicalScale PhysicalScale::physical(int Z, double mu, double alpha_fs, int N,
                                      double hbar, double c) {
  if (Z < 1 || N < 1 || !(alpha_fs > 0.0)) {
    throw PreconditionError("PhysicalScale::physical: need Z >= 1, N >= 1, alpha > 0");
  }
  if (c == 0.0) c = 1.0 / alpha_fs;
  PhysicalScale s;
  s.hbar = hbar;
  s.mu = mu;
  s.beta = Z * mu * c * alpha_fs / (N * hbar);
  s.validate();
  return s;
}

void PhysicalScale::validate() const {
  if (!(hbar > 0.0) || !(beta > 0.0) || !(mu > 0.0)) {
    throw PreconditionError("PhysicalScale: hbar, beta and mu must be positive");
  }
}

QuantumState::QuantumState(int N, int l, PhysicalScale scale)
    : N_(N), l_(l), scale_(scale) {
  if (N < 1) {
    throw PreconditionError("QuantumState: N must be >= 1, got " + std::to_string(N));
  }
  if (l < 0 || l > N - 1) {
    throw PreconditionError("QuantumState: need 0 <= l <= N-1, got N=" +
                            std::to_string(N) + " l=" + std::to_string(l));
  }
  scale_.validate();
}

double QuantumState::energy() const {
  const double q = scale_.hbar_beta();
  return -q * q / (2.0 * scale_.mu);
}

double QuantumState::coulomb_strength() const {
  return scale_.hbar * scale_.hbar * scale_.beta * N_ / scale_.mu;
}

double SlaterExpansion::evaluate(double r) const {
  const double x = rho(r);
  double sum = 0.0;
  double power = std::pow(x, l);
  for (double c : coefficients) {
    sum += c * power;
    power *= x;
  }
  return prefactor * sum * std::exp(-0.5 * x);
}

std::complex<double> ComplexSlaterSeries::evaluate(double r) const {
  const double x = 2.0 * scale.beta * r;
  std::complex<double> sum = 0.0;
  double power = std::pow(x, lowest_power);
  for (const auto& c : coefficients) {
    sum += c * power;
    power *= x;
  }
  return sum * std::exp(-0.5 * x);
}

ComplexSlaterSeries ComplexSlaterSeries::from(const SlaterExpansion& expansion) {
  ComplexSlaterSeries s;
  s.scale = expansion.scale;
  s.lowest_power = expansion.l;
  s.coefficients.reserve(expansion.coefficients.size());
  for (double c : expansion.coefficients) {
    s.coefficients.emplace_back(expansion.prefactor * c, 0.0);
  }
  return s;
}

double normalization_constant(const QuantumState& state) {
  const int N = state.N();
  const int l = state.l();
  const double two_beta = 2.0 * state.scale().beta;
  return std::pow(two_beta, 1.5) *
         std::sqrt(specfun::factorial(N - l - 1) /
                   (2.0 * N * specfun::factorial(N + l)));
}

SlaterExpansion slater_expansion(const QuantumState& state) {
  const int N = state.N();
  const int l = state.l();
  SlaterExpansion e;
  e.l = l;
  e.scale = state.scale();
  e.prefactor = 1.0;
  for (int t = 0; t <= N - l - 1; ++t) {
    const double sign = (t % 2 == 0) ? 1.0 : -1.0;
    e.coefficients.push_back(sign * specfun::binomial(N + l, N - l - 1 - t) /
                             specfun::factorial(t));
  }
  return e;
}

SlaterExpansion normalized_slater_expansion(const QuantumState& state) {
  SlaterExpansion e = slater_expansion(state);
  e.prefactor = normalization_constant(state);
  return e;
}

double radial_wavefunction(const QuantumState& state, double r) {
  if (r < 0.0) throw DomainError("radial_wavefunction: r must be >= 0");
  const int l = state.l();
  const double rho = 2.0 * state.scale().beta * r;
  return normalization_constant(state) * std::exp(-0.5 * rho) * std::pow(rho, l) *
         specfun::laguerre(state.N() - l - 1, 2 * l + 1, rho);
}

ComplexSlaterSeries apply_radial_momentum(const ComplexSlaterSeries& series) {
  ComplexSlaterSeries out;
  out.scale = series.scale;
  const auto n = series.coefficients.size();
  if (n == 0) return out;

  // Output powers run from lowest_power-1 to lowest_power+n-1.
  out.lowest_power = series.lowest_power - 1;
  out.coefficients.assign(n + 1, {0.0, 0.0});
  const std::complex<double> factor(0.0, -series.scale.hbar * 2.0 * series.scale.beta);
  for (std::size_t j = 0; j < n; ++j) {
    const int k = series.lowest_power + static_cast<int>(j);
    out.coefficients[j] += factor * static_cast<double>(k + 1) * series.coefficients[j];
    out.coefficients[j + 1] += factor * (-0.5) * series.coefficients[j];
  }
  // Trim leading zeros: (k+1) vanishes for k = -1.
  std::size_t lead = 0;
  while (lead < out.coefficients.size() && out.coefficients[lead] == 0.0) ++lead;
  out.coefficients.erase(out.coefficients.begin(),
                         out.coefficients.begin() + static_cast<long>(lead));
  out.lowest_power += static_cast<int>(lead);
  out.contains_inverse_power = series.contains_inverse_power;
  for (std::size_t j = 0; j < out.coefficients.size(); ++j) {
    if (out.lowest_power + static_cast<int>(j) < 0 && out.coefficients[j] != 0.0) {
      out.contains_inverse_power = true;
    }
  }
  return out;
}

ComplexSlaterSeries apply_radial_momentum(const SlaterExpansion& expansion) {
  return apply_radial_momentum(ComplexSlaterSeries::from(expansion));
}

double schrodinger_residual(const QuantumState& state, double r) {
  if (!(r > 0.0)) throw DomainError("schrodinger_residual: r must be > 0");
  const auto& s = state.scale();
  const SlaterExpansion R = normalized_slater_expansion(state);
  const auto p2R = apply_radial_momentum(apply_radial_momentum(R)).evaluate(r);
  const double value = R.evaluate(r);
  const double l = state.l();
  const double kinetic = p2R.real() / (2.0 * s.mu);
  const double centrifugal = l * (l + 1.0) * s.hbar * s.hbar / (2.0 * s.mu * r * r) * value;
  const double coulomb = -state.coulomb_strength() / r * value;
  return kinetic + centrifugal + coulomb - state.energy() * value;
}

double expectation_r2(const QuantumState& state) {
  // int R^2 r^4 dr = N^2/(2beta)^5 sum_{s,t} c_s c_t Gamma(2l+s+t+5).
  const SlaterExpansion e = slater_expansion(state);
  const int l = state.l();
  double sum = 0.0;
  for (std::size_t s = 0; s < e.coefficients.size(); ++s) {
    for (std::size_t t = 0; t < e.coefficients.size(); ++t) {
      sum += e.coefficients[s] * e.coefficients[t] *
             specfun::factorial(2 * l + static_cast<int>(s + t) + 4);
    }
  }
  const double norm = normalization_constant(state);
  return norm * norm * sum / std::pow(2.0 * state.scale().beta, 5);
}

double expectation_p2(const QuantumState& state) {
  // Substituting p = hbar beta tan(u) maps the half line onto [0, pi/2) and
  // leaves a smooth trigonometric integrand.
  const double q = state.scale().hbar_beta();
  auto integrand = [&](double u) {
    if (u >= 0.5 * std::numbers::pi) return 0.0;
    const double c = std::cos(u);
    const double p = q * std::tan(u);
    const double g = podolsky_pauling_G(state, p);
    return p * p * p * p * g * g * q / (c * c);
  };
  QuadratureSpec spec;
  spec.rel_tol = 1e-13;
  spec.abs_tol = 1e-300;
  return integrate_adaptive(integrand, 0.0, 0.5 * std::numbers::pi, spec, 4).value;
}

}  // namespace hatom

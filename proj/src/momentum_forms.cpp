#include "hatom/momentum_forms.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hatom/errors.hpp"
#include "hatom/specfun.hpp"

namespace hatom {

namespace {

constexpr std::complex<double> kI(0.0, 1.0);

// Native conventions of each family (see the header comment).
constexpr TransformConvention kTrigNative{KernelSign::outgoing, PhasePrefactor::none};
constexpr TransformConvention kGegenbauerNative{KernelSign::incoming,
                                                PhasePrefactor::spherical_hankel};
constexpr TransformConvention kLombardiNative{KernelSign::incoming, PhasePrefactor::none};

void check_finite(double p, const char* who) {
  if (!std::isfinite(p)) throw DomainError(std::string(who) + ": p must be finite");
}

// sin(g) * 2 D^1_n(cos g + i0) = sin(g) (C^1_n + i D^1_n)(cos g), for g in (0, pi/2).
// C is taken from the polynomial recurrence in x, D from the angle.
std::complex<double> sin_times_script_D(int n, double x, double sin_g, double g) {
  const double c = specfun::gegenbauer_C(n, 1.0, x);
  const double d = specfun::gegenbauer_D1_at_angle(n, g);
  return 0.5 * sin_g * std::complex<double>(c, d);
}

// Shared by psi_gegenbauer and psi_script_D so the two agree to the last bit.
std::complex<double> gegenbauer_native(const QuantumState& state, double p) {
  const double u = std::abs(p) / state.scale().hbar_beta();
  const int l = state.l();
  const int terms = state.term_count();
  std::complex<double> sum = 0.0;
  if (u == 0.0) {
    // sin g D^1_n(cos g) -> 1 and sin g C^1_n(cos g) -> 0 as g -> 0.
    for (int t = 0; t < terms; ++t) sum += coeff_a(state, t) * kI;
  } else {
    const double x = 1.0 / std::sqrt(1.0 + u * u);
    const double sin_g = u * x;
    const double g = std::atan(u);
    for (int t = 0; t < terms; ++t) {
      const std::complex<double> script = sin_times_script_D(l + 1 + t, x, sin_g, g);
      sum += 2.0 * coeff_a(state, t) * std::pow(x, l + 2 + t) * script;
    }
  }
  return sum;
}

std::complex<double> from_native_abs(std::complex<double> at_abs_p, double p,
                                     const TransformConvention& native,
                                     const TransformConvention& conv) {
  std::complex<double> v = at_abs_p;
  if (p < 0.0) v = reflect_momentum(v, native);
  return reexpress(v, native, conv);
}

}  // namespace

std::string to_string(MomentumForm form) {
  switch (form) {
    case MomentumForm::gegenbauer: return "gegenbauer";
    case MomentumForm::script_D: return "script_D";
    case MomentumForm::ferrers: return "ferrers";
    case MomentumForm::trig: return "trig";
    case MomentumForm::lombardi_ogilvie: return "lombardi_ogilvie";
    case MomentumForm::podolsky_pauling: return "podolsky_pauling";
  }
  return "unknown";
}

MomentumForm parse_momentum_form(std::string_view name) {
  if (name == "gegenbauer") return MomentumForm::gegenbauer;
  if (name == "script_D" || name == "scriptD") return MomentumForm::script_D;
  if (name == "ferrers") return MomentumForm::ferrers;
  if (name == "trig") return MomentumForm::trig;
  if (name == "lombardi_ogilvie" || name == "lo") return MomentumForm::lombardi_ogilvie;
  if (name == "podolsky_pauling" || name == "pp") return MomentumForm::podolsky_pauling;
  throw PreconditionError("unknown momentum form: " + std::string(name));
}

AngleVariables angle_variables(double p, const PhysicalScale& scale) {
  check_finite(p, "angle_variables");
  const double q = scale.hbar_beta();
  const double u = p / q;
  const double b = p / (2.0 * q);
  AngleVariables a;
  a.x = 0.5 / std::sqrt(0.25 + b * b);
  a.theta = std::atan(u);
  a.gamma = a.theta;
  a.chi_p = 2.0 * std::atan(std::abs(u));
  return a;
}

double momentum_from_chi(double chi, const PhysicalScale& scale) {
  if (!(chi >= 0.0 && chi <= std::numbers::pi)) {
    throw DomainError("momentum_from_chi: chi must lie in [0, pi]");
  }
  return scale.hbar_beta() * std::tan(0.5 * chi);
}

double coeff_a(const QuantumState& state, int t) {
  const int N = state.N();
  const int l = state.l();
  if (t < 0 || t > N - l - 1) {
    throw IndexError("coeff_a: t = " + std::to_string(t) + " outside [0, " +
                     std::to_string(N - l - 1) + "]");
  }
  const double two_beta = 2.0 * state.scale().beta;
  const double sign = (t % 2 == 0) ? 1.0 : -1.0;
  return normalization_constant(state) * std::ldexp(1.0, l + t + 2) * sign *
         specfun::binomial(N + l, N - l - 1 - t) * specfun::factorial(l + t + 1) /
         (specfun::factorial(t) * two_beta * two_beta);
}

double coeff_b(const QuantumState& state, int t) {
  const int N = state.N();
  const int l = state.l();
  if (t < 0 || t > N - l - 1) {
    throw IndexError("coeff_b: t = " + std::to_string(t) + " outside [0, " +
                     std::to_string(N - l - 1) + "]");
  }
  const double beta = state.scale().beta;
  const double gamma = std::tgamma(static_cast<double>(l + t + 2));
  const double magnitude = std::pow(2.0, l + t) * specfun::binomial(N + l, N - l - 1 - t) *
                           gamma / (specfun::factorial(t) * beta * beta);
  return (t % 2 == 0 ? 1.0 : -1.0) * normalization_constant(state) * magnitude;
}

std::complex<double> psi_trig(const QuantumState& state, double p,
                              const TransformConvention& conv) {
  check_finite(p, "psi_trig");
  const double u = p / state.scale().hbar_beta();
  const double theta = std::atan(u);
  const double cos_theta = 1.0 / std::sqrt(1.0 + u * u);
  std::complex<double> sum = 0.0;
  for (int t = 0; t < state.term_count(); ++t) {
    const int k = state.l() + t + 2;
    sum += coeff_b(state, t) * std::polar(std::pow(cos_theta, k), k * theta);
  }
  return reexpress(sum, kTrigNative, conv);
}

std::complex<double> psi_gegenbauer(const QuantumState& state, double p,
                                    const TransformConvention& conv) {
  check_finite(p, "psi_gegenbauer");
  return from_native_abs(gegenbauer_native(state, p), p, kGegenbauerNative, conv);
}

std::complex<double> psi_script_D(const QuantumState& state, double p,
                                  const TransformConvention& conv) {
  check_finite(p, "psi_script_D");
  return from_native_abs(gegenbauer_native(state, p), p, kGegenbauerNative, conv);
}

std::complex<double> psi_ferrers(const QuantumState& state, double p,
                                 const TransformConvention& conv) {
  check_finite(p, "psi_ferrers");
  if (p == 0.0) throw DomainError("psi_ferrers: p = 0 is not reachable on this route");
  const auto& s = state.scale();
  const double pa = std::abs(p);
  const int N = state.N();
  const int l = state.l();
  const double x = angle_variables(pa, s).x;
  const double two_beta = 2.0 * s.beta;
  std::complex<double> sum = 0.0;
  for (int t = 0; t <= N - l - 1; ++t) {
    const double nu = l + 1.5 + t;
    const double sign = (t % 2 == 0) ? 1.0 : -1.0;
    const double weight = sign * specfun::binomial(N + l, N - l - 1 - t) /
                          (specfun::factorial(t) * two_beta * two_beta * two_beta) *
                          std::pow(2.0 * x, l + 2.5 + t) * specfun::factorial(l + 2 + t);
    const std::complex<double> legendre(specfun::ferrers_P_mhalf(nu, x),
                                        2.0 / std::numbers::pi * specfun::ferrers_Q_mhalf(nu, x));
    sum += weight * legendre;
  }
  const double front =
      pa / s.hbar * normalization_constant(state) * std::sqrt(s.beta * s.hbar * std::numbers::pi / pa);
  return from_native_abs(front * sum, p, kGegenbauerNative, conv);
}

double lombardi_ogilvie_coefficient(int N, int l, int k) {
  if (N < 1 || l < 0 || l > N - 1) {
    throw PreconditionError("lombardi_ogilvie_coefficient: invalid (N, l)");
  }
  if (k < 0 || k > N - l - 1) {
    throw IndexError("lombardi_ogilvie_coefficient: k out of range");
  }
  using specfun::factorial;
  return std::ldexp(1.0, k) * factorial(N - l - 1) * factorial(l + k + 1) /
         (factorial(k) * factorial(N - l - k - 1) * factorial(2 * l + k + 1));
}

std::complex<double> lombardi_ogilvie_alpha(const QuantumState& state, double p,
                                            const TransformConvention& conv) {
  check_finite(p, "lombardi_ogilvie_alpha");
  const double q = state.scale().hbar_beta();
  const std::complex<double> ratio = kI * q / (p - kI * q);
  std::complex<double> sum = 0.0;
  for (int k = 0; k < state.term_count(); ++k) {
    sum += lombardi_ogilvie_coefficient(state.N(), state.l(), k) *
           std::pow(ratio, state.l() + k + 2);
  }
  return reexpress(sum, kLombardiNative, conv);
}

namespace {

double pp_root(const QuantumState& state) {
  using specfun::factorial;
  const int N = state.N();
  const int l = state.l();
  return factorial(l) *
         std::sqrt(factorial(N - l - 1) * N / (std::numbers::pi * factorial(N + l)));
}

}  // namespace

double podolsky_pauling_G(const QuantumState& state, double p) {
  if (!(p >= 0.0) || !std::isfinite(p)) {
    throw DomainError("podolsky_pauling_G: p must be finite and >= 0");
  }
  const double q = state.scale().hbar_beta();
  const int l = state.l();
  const double u = p / q;
  const double cos_chi = (1.0 - u * u) / (1.0 + u * u);
  return std::pow(2.0 * q, 2.5) * pp_root(state) * std::pow(4.0 * q * p, l) /
         std::pow(q * q + p * p, l + 2) *
         specfun::gegenbauer_C(state.N() - l - 1, l + 1.0, cos_chi);
}

double podolsky_pauling_chi(const QuantumState& state, double chi) {
  if (!(chi >= 0.0 && chi <= std::numbers::pi)) {
    throw DomainError("podolsky_pauling_chi: chi must lie in [0, pi]");
  }
  const double q = state.scale().hbar_beta();
  const int l = state.l();
  const double half = std::cos(0.5 * chi);
  const double harmonic = std::pow(std::sin(chi), l) *
                          specfun::gegenbauer_C(state.N() - l - 1, l + 1.0, std::cos(chi));
  return std::sqrt(2.0 * q) * std::ldexp(1.0, l + 2) * pp_root(state) * half * half * harmonic;
}

double distribution_max_l(DistributionFamily family, int N, double p,
                          const PhysicalScale& scale) {
  if (N < 1) throw PreconditionError("distribution_max_l: N must be >= 1");
  check_finite(p, "distribution_max_l");
  const double q = scale.hbar_beta();
  const double d = q * q + p * p;
  if (family == DistributionFamily::lombardi_ogilvie) return 1.0 / std::pow(d, N + 1);
  if (p < 0.0) throw DomainError("distribution_max_l: PP densities need p >= 0");
  return std::pow(4.0 * q * p, 2 * (N - 1)) / std::pow(d, 2 * (N + 1));
}

MomentumAmplitude evaluate_form(MomentumForm form, const QuantumState& state, double p,
                                const TransformConvention& conv) {
  MomentumAmplitude out;
  out.p = p;
  out.form = form;
  switch (form) {
    case MomentumForm::gegenbauer: out.value = psi_gegenbauer(state, p, conv); break;
    case MomentumForm::script_D: out.value = psi_script_D(state, p, conv); break;
    case MomentumForm::ferrers: out.value = psi_ferrers(state, p, conv); break;
    case MomentumForm::trig: out.value = psi_trig(state, p, conv); break;
    case MomentumForm::lombardi_ogilvie:
      out.value = lombardi_ogilvie_alpha(state, p, conv);
      break;
    case MomentumForm::podolsky_pauling: out.value = podolsky_pauling_G(state, p); break;
  }
  return out;
}

}  // namespace hatom

#pragma once

// Closed-form radial momentum wave functions of the hydrogen atom.
//
// Three families of the same radial-momentum amplitude psi_{Nl}(p_r):
//   * trig:        sum_t b_t e^{i(l+t+2) theta} cos^{l+t+2} theta,  theta = atan(p / hbar beta)
//   * gegenbauer:  sum_t a_t sin g cos^{l+2+t} g (C^1_{l+1+t} + i D^1_{l+1+t})(cos g)
//   * script_D:    the same with C^1 + i D^1 = 2 D^1(x + i0)
//   * ferrers:     the Hankel-integral route through P^{-1/2}_nu and Q^{-1/2}_nu
// plus the Lombardi-Ogilvie amplitude (proportional to psi) and the
// Podolsky-Pauling functions of |p| (the ordinary 3D Fourier transform).
//
// The trig family is the transform with the outgoing kernel e^{+ipr}; the
// Gegenbauer-type families come out of the incoming kernel written through
// p h_0^(2)(pr), which differs by a conjugation and a factor i. Every complex
// form takes a TransformConvention and returns its value in that convention,
// so forms agree with each other (and with the numerical transform) exactly
// when asked for the same convention.

#include <complex>
#include <string>
#include <string_view>

#include "hatom/hydrogenic.hpp"
#include "hatom/radial_transform.hpp"

namespace hatom {

enum class MomentumForm {
  gegenbauer,
  script_D,
  ferrers,
  trig,
  lombardi_ogilvie,
  podolsky_pauling,
};

std::string to_string(MomentumForm form);
/// Accepts the enum names plus the short aliases "lo", "pp", "scriptD".
MomentumForm parse_momentum_form(std::string_view name);

struct MomentumAmplitude {
  double p = 0.0;
  std::complex<double> value;
  MomentumForm form = MomentumForm::trig;
};

/// The changes of variable used by the closed forms.
///   x     = (1/2) [(1/2)^2 + (p / 2 hbar beta)^2]^{-1/2} = cos gamma
///   theta = atan(p / hbar beta) = gamma  (signed, odd in p)
///   cos chi_p = (hbar^2 beta^2 - p^2) / (hbar^2 beta^2 + p^2),  chi_p in [0, pi]
struct AngleVariables {
  double x = 1.0;
  double gamma = 0.0;
  double theta = 0.0;
  double chi_p = 0.0;
};

AngleVariables angle_variables(double p, const PhysicalScale& scale);

/// p(chi) = hbar beta tan(chi / 2), the inverse of the chi_p substitution.
double momentum_from_chi(double chi, const PhysicalScale& scale);

/// Expansion coefficient of the Gegenbauer form,
///   a_t = N_{Nl} 2^{l+t+2} (-1)^t C(N+l, N-l-1-t) Gamma(l+t+2) / (t! (2 beta)^2).
double coeff_a(const QuantumState& state, int t);
/// Expansion coefficient of the trigonometric form (same value as coeff_a).
double coeff_b(const QuantumState& state, int t);

std::complex<double> psi_trig(const QuantumState& state, double p,
                              const TransformConvention& conv = {});
std::complex<double> psi_gegenbauer(const QuantumState& state, double p,
                                    const TransformConvention& conv = {});
std::complex<double> psi_script_D(const QuantumState& state, double p,
                                  const TransformConvention& conv = {});
/// Ferrers-function route; p = 0 is a removable singularity that this route
/// cannot evaluate, so it throws DomainError there.
std::complex<double> psi_ferrers(const QuantumState& state, double p,
                                 const TransformConvention& conv = {});

/// c^k_{Nl} = 2^k (N-l-1)! (l+k+1)! / (k! (N-l-k-1)! (2l+k+1)!).
double lombardi_ogilvie_coefficient(int N, int l, int k);

/// Unnormalized Lombardi-Ogilvie amplitude
///   alpha(p) = sum_k c^k (i hbar beta / (p - i hbar beta))^{l+k+2},
/// which is the incoming-kernel transform up to a constant; re-expressed in conv.
std::complex<double> lombardi_ogilvie_alpha(const QuantumState& state, double p,
                                            const TransformConvention& conv = {});

/// Podolsky-Pauling momentum function, normalized so int G^2 p^2 dp = 1:
///   G(p) = (2 hbar beta)^{5/2} l! sqrt((N-l-1)! N / (pi (N+l)!))
///          (4 hbar beta p)^l / (hbar^2 beta^2 + p^2)^{l+2} C^{l+1}_{N-l-1}(cos chi_p).
double podolsky_pauling_G(const QuantumState& state, double p);

/// Ultra-spherical form on the 4-sphere,
///   G(chi) = (2 hbar beta)^{1/2} 2^{l+2} sqrt(...) l! cos^2(chi/2) sin^l(chi) C^{l+1}_{N-l-1}(cos chi).
/// Related to G(p) by the stereographic factor: G(p(chi)) = G(chi) cos^2(chi/2) / (hbar beta)^2.
double podolsky_pauling_chi(const QuantumState& state, double chi);

enum class DistributionFamily { podolsky_pauling, lombardi_ogilvie };

/// Unnormalized l = N-1 momentum densities:
///   PP: (4 hbar beta p)^{2(N-1)} / (hbar^2 beta^2 + p^2)^{2(N+1)}
///   LO: 1 / (hbar^2 beta^2 + p^2)^{N+1}
double distribution_max_l(DistributionFamily family, int N, double p,
                          const PhysicalScale& scale = {});

/// Dispatch over all forms. Podolsky-Pauling values are real and ignore conv.
MomentumAmplitude evaluate_form(MomentumForm form, const QuantumState& state, double p,
                                const TransformConvention& conv = {});

}  // namespace hatom

#pragma once

// The spherical-wave transform that diagonalizes the radial momentum
// p_r = -i hbar (1/r) d/dr r:
//
//   (H phi)(p) = int_0^inf phi(r) e^{-+ i p r / hbar} r dr,
//
// i.e. the half-line Fourier transform of r phi(r). The kernel sign and the
// optional constant phase in front of it are fixed by a TransformConvention;
// every closed form in this library can be re-expressed in any convention.

#include <complex>
#include <functional>
#include <string>
#include <string_view>

#include "hatom/grid.hpp"
#include "hatom/hydrogenic.hpp"
#include "hatom/quadrature.hpp"

namespace hatom {

/// Outgoing: e^{+ipr}/r. Incoming: e^{-ipr}/r.
enum class KernelSign { outgoing, incoming };

/// `none` keeps the bare exponential kernel. `spherical_hankel` writes the
/// kernel as p h_0(p r) with h_0 the matching spherical Hankel function, which
/// multiplies the transform by i (incoming) or -i (outgoing).
enum class PhasePrefactor { none, spherical_hankel };

struct TransformConvention {
  KernelSign kernel = KernelSign::outgoing;
  PhasePrefactor prefactor = PhasePrefactor::none;

  std::complex<double> phase() const;
  /// H(p_r phi) = sign * p * H(phi): +1 for the incoming kernel, -1 otherwise.
  double eigenvalue_sign() const { return kernel == KernelSign::incoming ? 1.0 : -1.0; }

  bool operator==(const TransformConvention&) const = default;
};

std::string to_string(KernelSign k);
std::string to_string(PhasePrefactor f);
KernelSign parse_kernel_sign(std::string_view s);
PhasePrefactor parse_phase_prefactor(std::string_view s);

/// Map a transform value of a real radial function from one convention to
/// another (kernel flips are complex conjugation for real p).
std::complex<double> reexpress(std::complex<double> value, const TransformConvention& from,
                               const TransformConvention& to);

/// Given H(p) in `conv`, the value at -p for a real radial function.
std::complex<double> reflect_momentum(std::complex<double> value,
                                      const TransformConvention& conv);

using RadialFunction = std::function<double(double)>;

/// Quadrature estimate of (H f)(p) on [0, spec.max_radius]. f must decay fast
/// enough that the tail beyond max_radius is negligible (or vanish there).
std::complex<double> transform_numeric(const RadialFunction& f, double p,
                                       const TransformConvention& conv,
                                       const QuadratureSpec& spec, double hbar = 1.0);

/// Same for a Slater expansion; the truncation radius comes from the analytic
/// tail bound unless spec.max_radius is set.
std::complex<double> transform_numeric(const SlaterExpansion& f, double p,
                                       const TransformConvention& conv,
                                       const QuadratureSpec& spec);

/// Radius beyond which int |f| r dr < abs_tol / 10, from upper incomplete
/// Gamma functions of the Slater terms.
double slater_truncation_radius(const SlaterExpansion& f, double abs_tol);

/// int_0^inf rho^n e^{-rho/2} e^{+-i b rho} d rho with n = l_plus_t + 1 and
/// b = p / (2 hbar beta), in closed form:
///   Gamma(n+1) e^{+-i(n+1)theta} / (1/4 + b^2)^{(n+1)/2},  theta = atan(2b).
std::complex<double> transform_slater_closed(int l_plus_t, double p, const PhysicalScale& scale,
                                             const TransformConvention& conv = {});

/// Exact (H f)(p) for a Slater expansion, assembled from transform_slater_closed.
std::complex<double> transform_slater_expansion(const SlaterExpansion& f, double p,
                                                const TransformConvention& conv = {});

struct ParsevalResult {
  double position_norm = 0.0;
  double momentum_norm = 0.0;
};

/// position_norm = int |f|^2 r^2 dr and
/// momentum_norm = (1 / (2 pi hbar)) int_R |(H f)(p)|^2 dp.
ParsevalResult parseval_check(const SlaterExpansion& f, const QuadratureSpec& spec);

/// A smooth radial test function with compact support [support_lo, support_hi].
struct CompactTestFunction {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
  double support_lo = 1.0;
  double support_hi = 2.0;
};

/// max over the grid of |H(p_r f)(p) - s p H(f)(p)|, s = conv.eigenvalue_sign().
/// Grid points are read in units of hbar (the scale is hbar = 1 here).
double diagonalization_residual(const CompactTestFunction& test, const EvaluationGrid& p_grid,
                                const QuadratureSpec& spec, const TransformConvention& conv = {});

}  // namespace hatom

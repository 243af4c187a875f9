#pragma once

// Position-space hydrogenic radial functions.
//
// With rho = 2 beta r the bound radial states are
//
//   R_{Nl}(r) = N_{Nl} e^{-rho/2} rho^l L^{2l+1}_{N-l-1}(rho),
//   N_{Nl}    = (2 beta)^{3/2} sqrt((N-l-1)! / (2N (N+l)!)),
//
// and expanding the Laguerre polynomial gives a finite sum of Slater-type
// terms rho^{l+t} e^{-rho/2}, t = 0..N-l-1. Those finite sums are what the
// momentum-space closed forms are built from.

#include <complex>
#include <vector>

namespace hatom {

/// Units of a computation: hbar, the inverse length beta and the reduced mass.
///
/// Scaled mode (the default) fixes hbar = 1 and hbar*beta = 1 for every state;
/// physical mode derives beta = Z mu c alpha / (N hbar), so it differs per N.
struct PhysicalScale {
  double hbar = 1.0;
  double beta = 1.0;
  double mu = 1.0;

  static PhysicalScale scaled(double hbar_beta = 1.0);
  /// Atomic-style units: c defaults to 1/alpha_fs when left at zero.
  static PhysicalScale physical(int Z, double mu, double alpha_fs, int N,
                                double hbar = 1.0, double c = 0.0);

  double hbar_beta() const { return hbar * beta; }
  void validate() const;
};

/// One bound state (N, l). Invariant: N >= 1 and 0 <= l <= N-1.
class QuantumState {
 public:
  QuantumState(int N, int l, PhysicalScale scale = {});

  int N() const { return N_; }
  int l() const { return l_; }
  const PhysicalScale& scale() const { return scale_; }

  /// Number of Slater terms, N - l.
  int term_count() const { return N_ - l_; }
  /// E_N = -(hbar beta)^2 / (2 mu).
  double energy() const;
  /// Z e^2 consistent with beta: hbar^2 beta N / mu.
  double coulomb_strength() const;

 private:
  int N_;
  int l_;
  PhysicalScale scale_;
};

/// prefactor * sum_t coefficients[t] * rho^{l+t} e^{-rho/2}, rho = 2 beta r.
struct SlaterExpansion {
  int l = 0;
  PhysicalScale scale;
  double prefactor = 1.0;
  std::vector<double> coefficients;

  double rho(double r) const { return 2.0 * scale.beta * r; }
  double evaluate(double r) const;
};

/// General complex Slater series sum_k c_k rho^{lowest_power + k} e^{-rho/2}.
/// Produced by the radial momentum operator, which can lower the power to -1.
struct ComplexSlaterSeries {
  PhysicalScale scale;
  int lowest_power = 0;
  std::vector<std::complex<double>> coefficients;
  /// Set when a rho^{-1} piece is present. It is still square integrable
  /// against r^2 dr, but it is singular at the origin.
  bool contains_inverse_power = false;

  std::complex<double> evaluate(double r) const;
  static ComplexSlaterSeries from(const SlaterExpansion& expansion);
};

double normalization_constant(const QuantumState& state);

/// Unnormalized expansion of R_{Nl}: coefficient (-1)^t C(N+l, N-l-1-t) / t!.
SlaterExpansion slater_expansion(const QuantumState& state);
/// Same terms with prefactor N_{Nl}, so evaluate() returns R_{Nl}(r).
SlaterExpansion normalized_slater_expansion(const QuantumState& state);

/// R_{Nl}(r) through the Laguerre recurrence.
double radial_wavefunction(const QuantumState& state, double r);

/// Radial momentum p_r = -i hbar (1/r) d/dr r applied term by term:
///   rho^k e^{-rho/2}  ->  -i hbar 2 beta [(k+1) rho^{k-1} - rho^k / 2] e^{-rho/2}.
ComplexSlaterSeries apply_radial_momentum(const SlaterExpansion& expansion);
ComplexSlaterSeries apply_radial_momentum(const ComplexSlaterSeries& series);

/// (H - E_N) R_{Nl} at r, with H = p_r^2/(2mu) + l(l+1) hbar^2/(2 mu r^2) - Z e^2 / r
/// and p_r^2 assembled from apply_radial_momentum twice. Zero up to rounding.
double schrodinger_residual(const QuantumState& state, double r);

/// <r^2> = int R^2 r^4 dr, exact from Gamma integrals of the Slater terms.
double expectation_r2(const QuantumState& state);

/// <p^2> = int p^4 |G_{Nl}(p)|^2 dp with the Podolsky-Pauling momentum
/// function, by adaptive quadrature.
double expectation_p2(const QuantumState& state);

}  // namespace hatom

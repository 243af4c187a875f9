#pragma once

// Special functions used by the hydrogenic closed forms.
//
// Everything here is double precision and pure. Orthogonal polynomials are
// evaluated with their three-term recurrences; the explicit alternating sums
// are numerically poor for large degree and are kept only in the tests.

#include <complex>
#include <cstdint>

namespace hatom::specfun {

/// Largest n for which n! fits exactly in a 64-bit unsigned integer.
inline constexpr int kMaxExactFactorial = 20;
/// Largest n for which n! is finite in double precision.
inline constexpr int kMaxFloatFactorial = 170;

/// n! exactly. Throws RangeError for n > kMaxExactFactorial, DomainError for n < 0.
std::uint64_t factorial_exact(int n);

/// n! as a double. Throws RangeError for n > kMaxFloatFactorial.
double factorial(int n);

/// Binomial coefficient C(a, b); zero when b < 0 or b > a. Requires a >= 0.
double binomial(int a, int b);

/// Generalized Laguerre polynomial L_n^alpha(x).
double laguerre(int n, int alpha, double x);

/// Gegenbauer polynomial C_n^lambda(x), lambda >= 1.
double gegenbauer_C(int n, double lambda, double x);

/// Order-one Gegenbauer function of the second kind,
///   D^1_n(cos t) = cos((n+1) t) / sin t,
/// evaluated with the three-term recurrence it shares with C^1_n.
/// Singular at x = +-1, which is rejected with DomainError.
double gegenbauer_D1(int n, double x);

/// C^1_n(cos t) and D^1_n(cos t) evaluated from the angle itself. Near t = 0
/// these avoid the loss of precision in acos(x); t must lie in (0, pi) for D.
double gegenbauer_C1_at_angle(int n, double t);
double gegenbauer_D1_at_angle(int n, double t);

/// Boundary value of the complex second-kind function,
///   2 D^1_n(x + i0) = C^1_n(x) + i D^1_n(x).
std::complex<double> gegenbauer_script_D1(int n, double x);

/// Ferrers functions P_nu^{-1/2}(x) and Q_nu^{-1/2}(x) on the cut, through
/// their reduction to C^1 and D^1 with mu = 1/2:
///
///   P_nu^{-mu}(x) = 2^mu/sqrt(pi) G(mu+1/2) G(nu-mu+1)/G(nu+mu+1) (1-x^2)^{mu/2} C^{mu+1/2}_{nu-mu}(x)
///   Q_nu^{-mu}(x) = 2^mu sqrt(pi)/2 G(mu+1/2) G(nu-mu+1)/G(nu+mu+1) (1-x^2)^{mu/2} D^{mu+1/2}_{nu-mu}(x)
///
/// nu - 1/2 must be a nonnegative integer. P accepts [-1, 1]; Q accepts (-1, 1).
double ferrers_P_mhalf(double nu, double x);
double ferrers_Q_mhalf(double nu, double x);

/// Spherical Bessel function of the first kind j_l(x), any real x.
double spherical_bessel_j(int l, double x);

/// n_0(x) = -cos(x)/x for x > 0.
double spherical_neumann_n0(double x);

}  // namespace hatom::specfun

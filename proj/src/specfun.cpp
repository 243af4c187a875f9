#include "hatom/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hatom/errors.hpp"

namespace hatom::specfun {

namespace {

void require_degree(int n, const char* who) {
  if (n < 0) {
    throw DomainError(std::string(who) + ": degree must be nonnegative");
  }
}

// nu - 1/2 as a nonnegative integer, or DomainError.
int half_integer_degree(double nu, const char* who) {
  const double shifted = nu - 0.5;
  const double rounded = std::round(shifted);
  if (rounded < 0.0 || std::abs(shifted - rounded) > 1e-12) {
    throw DomainError(std::string(who) +
                      ": nu - 1/2 must be a nonnegative integer");
  }
  return static_cast<int>(rounded);
}

// j_l(x) for 0 < x < 1 from the power series; no cancellation there.
double sph_bessel_series(int l, double x) {
  double lead = 1.0;
  for (int k = 1; k <= l; ++k) {
    lead *= x / (2.0 * k + 1.0);
  }
  const double y = -0.5 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    term *= y / (k * (2.0 * l + 2.0 * k + 1.0));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return lead * sum;
}

// Miller's downward recurrence, normalized against j_0 or j_1.
double sph_bessel_downward(int l, double x) {
  const int start =
      l + 20 + static_cast<int>(x) + static_cast<int>(std::sqrt(40.0 * (l + 1)));
  double above = 0.0;
  double current = 1e-300;
  double at_l = 0.0;
  for (int k = start; k > 0; --k) {
    const double below = (2.0 * k + 1.0) / x * current - above;
    above = current;
    current = below;
    if (k - 1 == l) at_l = current;
    if (std::abs(current) > 1e250) {
      current *= 1e-250;
      above *= 1e-250;
      at_l *= 1e-250;
    }
  }
  // `current` is the unnormalized j_0 and `above` the unnormalized j_1.
  const double j0 = std::sin(x) / x;
  const double j1 = std::sin(x) / (x * x) - std::cos(x) / x;
  if (std::abs(j0) >= std::abs(j1)) {
    return at_l * (j0 / current);
  }
  return at_l * (j1 / above);
}

}  // namespace

std::uint64_t factorial_exact(int n) {
  if (n < 0) throw DomainError("factorial_exact: n must be nonnegative");
  if (n > kMaxExactFactorial) {
    throw RangeError("factorial_exact: n! overflows 64 bits for n > 20");
  }
  std::uint64_t result = 1;
  for (int k = 2; k <= n; ++k) result *= static_cast<std::uint64_t>(k);
  return result;
}

double factorial(int n) {
  if (n < 0) throw DomainError("factorial: n must be nonnegative");
  if (n > kMaxFloatFactorial) {
    throw RangeError("factorial: n! overflows double for n > 170");
  }
  double result = 1.0;
  for (int k = 2; k <= n; ++k) result *= k;
  return result;
}

double binomial(int a, int b) {
  if (a < 0) throw DomainError("binomial: upper argument must be nonnegative");
  if (b < 0 || b > a) return 0.0;
  const int k = std::min(b, a - b);
  double result = 1.0;
  // Each partial product is itself a binomial coefficient, so this stays
  // exact while below 2^53.
  for (int j = 1; j <= k; ++j) {
    result = result * (a - k + j) / j;
  }
  if (!std::isfinite(result)) throw RangeError("binomial: overflow");
  return result;
}

double laguerre(int n, int alpha, double x) {
  require_degree(n, "laguerre");
  if (alpha < 0) throw DomainError("laguerre: alpha must be nonnegative");
  double prev = 1.0;
  if (n == 0) return prev;
  double curr = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next =
        ((2.0 * k + 1.0 + alpha - x) * curr - (k + alpha) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

double gegenbauer_C(int n, double lambda, double x) {
  require_degree(n, "gegenbauer_C");
  if (!(lambda >= 1.0)) throw DomainError("gegenbauer_C: lambda must be >= 1");
  double prev = 1.0;
  if (n == 0) return prev;
  double curr = 2.0 * lambda * x;
  for (int k = 1; k < n; ++k) {
    const double next =
        (2.0 * (k + lambda) * x * curr - (k + 2.0 * lambda - 1.0) * prev) /
        (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

double gegenbauer_D1(int n, double x) {
  require_degree(n, "gegenbauer_D1");
  if (!(std::abs(x) < 1.0)) {
    throw DomainError("gegenbauer_D1: requires |x| < 1");
  }
  // Same recurrence as C^1_n, seeded with D^1_0 = x/s and D^1_1 = (2x^2 - 1)/s.
  const double s = std::sqrt((1.0 - x) * (1.0 + x));
  double prev = x / s;
  if (n == 0) return prev;
  double cur = (2.0 * x * x - 1.0) / s;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double gegenbauer_C1_at_angle(int n, double t) {
  require_degree(n, "gegenbauer_C1_at_angle");
  const double s = std::sin(t);
  if (s == 0.0) {
    // Endpoint values C^1_n(+-1) = (+-1)^n (n+1).
    const double sign = (std::cos(t) < 0.0 && n % 2 == 1) ? -1.0 : 1.0;
    return sign * (n + 1.0);
  }
  return std::sin((n + 1.0) * t) / s;
}

double gegenbauer_D1_at_angle(int n, double t) {
  require_degree(n, "gegenbauer_D1_at_angle");
  const double s = std::sin(t);
  if (!(t > 0.0 && t < std::numbers::pi) || s == 0.0) {
    throw DomainError("gegenbauer_D1_at_angle: requires 0 < t < pi");
  }
  return std::cos((n + 1.0) * t) / s;
}

std::complex<double> gegenbauer_script_D1(int n, double x) {
  return 0.5 * std::complex<double>(gegenbauer_C(n, 1.0, x), gegenbauer_D1(n, x));
}

double ferrers_P_mhalf(double nu, double x) {
  const int degree = half_integer_degree(nu, "ferrers_P_mhalf");
  if (!(std::abs(x) <= 1.0)) {
    throw DomainError("ferrers_P_mhalf: requires |x| <= 1");
  }
  constexpr double mu = 0.5;
  const double gamma_ratio = std::tgamma(mu + 0.5) * std::tgamma(nu - mu + 1.0) /
                             std::tgamma(nu + mu + 1.0);
  return std::pow(2.0, mu) / std::sqrt(std::numbers::pi) * gamma_ratio *
         std::pow((1.0 - x) * (1.0 + x), mu / 2.0) *
         gegenbauer_C(degree, mu + 0.5, x);
}

double ferrers_Q_mhalf(double nu, double x) {
  const int degree = half_integer_degree(nu, "ferrers_Q_mhalf");
  if (!(std::abs(x) < 1.0)) {
    throw DomainError("ferrers_Q_mhalf: requires |x| < 1");
  }
  constexpr double mu = 0.5;
  const double gamma_ratio = std::tgamma(mu + 0.5) * std::tgamma(nu - mu + 1.0) /
                             std::tgamma(nu + mu + 1.0);
  return std::pow(2.0, mu) * std::sqrt(std::numbers::pi) / 2.0 * gamma_ratio *
         std::pow((1.0 - x) * (1.0 + x), mu / 2.0) * gegenbauer_D1(degree, x);
}

double spherical_bessel_j(int l, double x) {
  require_degree(l, "spherical_bessel_j");
  if (x < 0.0) {
    const double v = spherical_bessel_j(l, -x);
    return (l % 2 == 0) ? v : -v;
  }
  if (x == 0.0) return l == 0 ? 1.0 : 0.0;
  if (x < 1.0) return sph_bessel_series(l, x);
  const double j0 = std::sin(x) / x;
  if (l == 0) return j0;
  if (x < l) return sph_bessel_downward(l, x);
  // Upward recurrence is stable once x >= l.
  double prev = j0;
  double curr = std::sin(x) / (x * x) - std::cos(x) / x;
  for (int k = 1; k < l; ++k) {
    const double next = (2.0 * k + 1.0) / x * curr - prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

double spherical_neumann_n0(double x) {
  if (!(x > 0.0)) throw DomainError("spherical_neumann_n0: requires x > 0");
  return -std::cos(x) / x;
}

}  // namespace hatom::specfun

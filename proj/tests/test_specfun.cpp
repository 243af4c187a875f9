#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/special_functions/gegenbauer.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hatom/errors.hpp"
#include "hatom/specfun.hpp"

using namespace hatom;
using namespace hatom::specfun;
using mp = boost::multiprecision::cpp_bin_float_50;

namespace {

// Explicit sum L_n^a(x) = sum_m (-1)^m C(n+a, n-m) x^m / m!, in 50 digits.
double laguerre_sum(int n, int a, double x) {
  mp sum = 0;
  for (int m = 0; m <= n; ++m) {
    mp c = 1;
    for (int j = 1; j <= n - m; ++j) c = c * (a + m + j) / j;
    mp xm = 1;
    mp fact = 1;
    for (int j = 1; j <= m; ++j) {
      xm *= x;
      fact *= j;
    }
    sum += (m % 2 ? -1 : 1) * c * xm / fact;
  }
  return static_cast<double>(sum);
}

}  // namespace

TEST_CASE("factorial matches iterated product") {
  std::uint64_t prod = 1;
  for (int n = 0; n <= kMaxExactFactorial; ++n) {
    if (n > 0) prod *= static_cast<std::uint64_t>(n);
    CHECK(factorial_exact(n) == prod);
    CHECK(factorial(n) == doctest::Approx(static_cast<double>(prod)).epsilon(1e-15));
  }
  CHECK(factorial(170) == doctest::Approx(7.257415615307994e306).epsilon(1e-13));
  CHECK_THROWS_AS(factorial_exact(21), RangeError);
  CHECK_THROWS_AS(factorial(171), RangeError);
  CHECK_THROWS_AS(factorial(-1), DomainError);
}

TEST_CASE("binomial matches Pascal's triangle") {
  std::vector<std::vector<double>> pascal(31);
  for (int a = 0; a <= 30; ++a) {
    pascal[a].assign(a + 1, 1.0);
    for (int b = 1; b < a; ++b) pascal[a][b] = pascal[a - 1][b - 1] + pascal[a - 1][b];
  }
  for (int a = 0; a <= 30; ++a) {
    for (int b = 0; b <= a; ++b) CHECK(binomial(a, b) == doctest::Approx(pascal[a][b]).epsilon(1e-15));
    CHECK(binomial(a, -1) == 0.0);
    CHECK(binomial(a, a + 1) == 0.0);
  }
}

TEST_CASE("Laguerre recurrence against explicit sum and low orders") {
  for (double x : {0.0, 0.3, 1.0, 4.5, 12.0}) {
    CHECK(laguerre(0, 3, x) == 1.0);
    CHECK(laguerre(1, 3, x) == doctest::Approx(4.0 - x).epsilon(1e-15));
    CHECK(laguerre(2, 1, x) == doctest::Approx(0.5 * x * x - 3.0 * x + 3.0).epsilon(1e-14));
  }
  double worst = 0.0;
  for (int n = 0; n <= 15; ++n) {
    for (int a : {0, 1, 3, 5, 9, 13}) {
      for (double x : {0.0, 0.25, 1.0, 3.3, 7.0, 15.0, 24.0}) {
        const double exact = laguerre_sum(n, a, x);
        worst = std::max(worst, std::abs(laguerre(n, a, x) - exact) / std::max(1.0, std::abs(exact)));
      }
    }
  }
  CHECK(worst < 1e-12);
  CHECK_THROWS_AS(laguerre(-1, 0, 1.0), DomainError);
}

TEST_CASE("Gegenbauer polynomials against Boost and the trig form") {
  for (double lambda : {1.0, 2.0, 3.0, 5.0}) {
    for (int n = 0; n <= 12; ++n) {
      for (double x : {-0.9, -0.2, 0.0, 0.4, 0.99}) {
        const double ref = boost::math::gegenbauer(static_cast<unsigned>(n), lambda, x);
        CHECK(gegenbauer_C(n, lambda, x) == doctest::Approx(ref).epsilon(1e-12).scale(1.0));
      }
    }
  }
  for (int n = 0; n <= 40; ++n) {
    for (double t : {0.1, 0.7, 1.3, 2.5}) {
      const double s = std::sin(t);
      CHECK(s * gegenbauer_C(n, 1.0, std::cos(t)) ==
            doctest::Approx(std::sin((n + 1) * t)).epsilon(1e-12).scale(1.0));
      CHECK(s * gegenbauer_D1(n, std::cos(t)) ==
            doctest::Approx(std::cos((n + 1) * t)).epsilon(1e-12).scale(1.0));
      CHECK(gegenbauer_C1_at_angle(n, t) == doctest::Approx(gegenbauer_C(n, 1.0, std::cos(t))).epsilon(1e-10).scale(1.0));
      CHECK(gegenbauer_D1_at_angle(n, t) == doctest::Approx(gegenbauer_D1(n, std::cos(t))).epsilon(1e-10).scale(1.0));
    }
  }
  CHECK(gegenbauer_C1_at_angle(3, 0.0) == 4.0);
  CHECK_THROWS_AS(gegenbauer_D1(2, 1.0), DomainError);
  CHECK_THROWS_AS(gegenbauer_D1(2, -1.0), DomainError);
  CHECK_THROWS_AS(gegenbauer_D1_at_angle(2, 0.0), DomainError);
}

TEST_CASE("script D is half of C + iD") {
  for (int n = 0; n <= 10; ++n) {
    const double x = 0.37;
    const auto d = gegenbauer_script_D1(n, x);
    CHECK(2.0 * d.real() == gegenbauer_C(n, 1.0, x));
    CHECK(2.0 * d.imag() == gegenbauer_D1(n, x));
    // sin g (C + iD)(cos g) = i e^{-i(n+1) g}
    const double g = std::acos(x);
    const auto lhs = 2.0 * std::sin(g) * d;
    const auto rhs = std::complex<double>(0.0, 1.0) * std::polar(1.0, -(n + 1) * g);
    CHECK(std::abs(lhs - rhs) < 1e-13);
  }
}

TEST_CASE("Ferrers functions of order -1/2 against their trig forms") {
  // P^{-1/2}_nu(cos t) = sqrt(2/(pi sin t)) sin((nu+1/2) t)/(nu+1/2)
  // Q^{-1/2}_nu(cos t) = sqrt(pi/(2 sin t)) cos((nu+1/2) t)/(nu+1/2)
  for (double nu : {0.5, 1.5, 2.5, 5.5, 9.5}) {
    for (double t : {0.2, 0.9, 1.4, 2.2, 3.0}) {
      const double s = std::sin(t);
      const double P = std::sqrt(2.0 / (std::numbers::pi * s)) * std::sin((nu + 0.5) * t) / (nu + 0.5);
      const double Q = std::sqrt(std::numbers::pi / (2.0 * s)) * std::cos((nu + 0.5) * t) / (nu + 0.5);
      CHECK(ferrers_P_mhalf(nu, std::cos(t)) == doctest::Approx(P).epsilon(1e-12).scale(1.0));
      CHECK(ferrers_Q_mhalf(nu, std::cos(t)) == doctest::Approx(Q).epsilon(1e-12).scale(1.0));
    }
  }
  CHECK(ferrers_P_mhalf(1.5, 1.0) == 0.0);
  CHECK_THROWS_AS(ferrers_Q_mhalf(1.5, 1.0), DomainError);
  CHECK_THROWS_AS(ferrers_P_mhalf(1.0, 0.5), DomainError);
  CHECK_THROWS_AS(ferrers_P_mhalf(-0.5, 0.5), DomainError);
}

TEST_CASE("spherical Bessel functions against the standard library") {
  for (int l = 0; l <= 10; ++l) {
    for (double x : {1e-6, 0.01, 0.5, 1.0, 3.7, 9.9, 25.0, 140.0}) {
      const double ref = std::sph_bessel(static_cast<unsigned>(l), x);
      CHECK(spherical_bessel_j(l, x) == doctest::Approx(ref).epsilon(1e-12).scale(std::abs(ref) + 1e-300));
    }
    CHECK(spherical_bessel_j(l, 0.0) == (l == 0 ? 1.0 : 0.0));
    CHECK(spherical_bessel_j(l, -2.0) == doctest::Approx((l % 2 ? -1.0 : 1.0) * std::sph_bessel(l, 2.0)));
  }
  CHECK(spherical_neumann_n0(2.0) == doctest::Approx(-std::cos(2.0) / 2.0));
  CHECK_THROWS_AS(spherical_neumann_n0(0.0), DomainError);
}

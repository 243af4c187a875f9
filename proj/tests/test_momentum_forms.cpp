#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hatom/errors.hpp"
#include "hatom/grid.hpp"
#include "hatom/momentum_forms.hpp"
#include "hatom/specfun.hpp"

using namespace hatom;
using cd = std::complex<double>;

namespace {

constexpr TransformConvention kOut{KernelSign::outgoing, PhasePrefactor::none};
constexpr TransformConvention kIn{KernelSign::incoming, PhasePrefactor::none};
constexpr TransformConvention kInH{KernelSign::incoming, PhasePrefactor::spherical_hankel};

const cd I(0.0, 1.0);

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

double choose(int a, int b) {
  if (b < 0 || b > a) return 0.0;
  return factorial(a) / (factorial(b) * factorial(a - b));
}

// N_{Nl} = (2 beta)^{3/2} sqrt((N-l-1)! / (2N (N+l)!))
double norm_const(int N, int l, double beta) {
  return std::pow(2.0 * beta, 1.5) * std::sqrt(factorial(N - l - 1) / (2.0 * N * factorial(N + l)));
}

}  // namespace

TEST_CASE("angle variables") {
  const auto sc = PhysicalScale::scaled(1.0);
  auto a = angle_variables(0.0, sc);
  CHECK(a.x == 1.0);
  CHECK(a.theta == 0.0);
  CHECK(a.chi_p == 0.0);
  a = angle_variables(1.0, sc);
  CHECK(a.x == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(a.theta == doctest::Approx(std::numbers::pi / 4));
  CHECK(a.chi_p == doctest::Approx(std::numbers::pi / 2));
  a = angle_variables(1e12, sc);
  CHECK(a.x < 1e-11);
  CHECK(a.chi_p == doctest::Approx(std::numbers::pi));
  for (double p : {-7.0, 0.01, 0.6, 3.0, 80.0}) {
    const auto v = angle_variables(p, PhysicalScale::scaled(1.7));
    CHECK(std::abs(v.x - std::cos(v.theta)) < 1e-14);
    CHECK(v.gamma == v.theta);
    const double q = 1.7;
    CHECK(std::cos(v.chi_p) == doctest::Approx((q * q - p * p) / (q * q + p * p)).epsilon(1e-13).scale(1.0));
    if (p >= 0.0) CHECK(momentum_from_chi(v.chi_p, PhysicalScale::scaled(q)) == doctest::Approx(p));
  }
  CHECK_THROWS_AS(momentum_from_chi(4.0, sc), DomainError);
}

TEST_CASE("expansion coefficients") {
  const auto sc = PhysicalScale::scaled(1.0);
  CHECK(coeff_a(QuantumState(1, 0, sc), 0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(coeff_b(QuantumState(1, 0, sc), 0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(coeff_a(QuantumState(2, 1, sc), 0) == doctest::Approx(4.0 * norm_const(2, 1, 1.0)));
  // (3,0,2): N 2^4 (+1) C(3,0) Gamma(4) / (2! 4)
  CHECK(coeff_b(QuantumState(3, 0, sc), 2) == doctest::Approx(norm_const(3, 0, 1.0) * 16.0 * 6.0 / 8.0));
  for (int N = 1; N <= 8; ++N) {
    for (int l = 0; l < N; ++l) {
      for (double beta : {1.0, 0.3}) {
        const QuantumState s(N, l, PhysicalScale::scaled(beta));
        for (int t = 0; t <= N - l - 1; ++t) {
          const double expected = norm_const(N, l, beta) * std::pow(2.0, l + t + 2) * (t % 2 ? -1 : 1) *
                                  choose(N + l, N - l - 1 - t) * factorial(l + t + 1) /
                                  (factorial(t) * 4.0 * beta * beta);
          CHECK(coeff_a(s, t) == doctest::Approx(expected).epsilon(1e-13));
          CHECK(coeff_b(s, t) == doctest::Approx(coeff_a(s, t)).epsilon(1e-14));
          if (t > 0) CHECK(coeff_a(s, t) / coeff_a(s, t - 1) < 0.0);
        }
        CHECK_THROWS_AS(coeff_a(s, N - l), IndexError);
        CHECK_THROWS_AS(coeff_b(s, -1), IndexError);
      }
    }
  }
}

TEST_CASE("trig form: values, modulus, symmetry") {
  const QuantumState g(1, 0, PhysicalScale::scaled(1.0));
  CHECK(std::abs(psi_trig(g, 0.0) - cd(2.0, 0.0)) < 1e-15);
  CHECK(std::abs(psi_trig(g, 1.0) - I) < 1e-15);
  for (double p : {-4.0, -0.5, 0.0, 0.2, 3.0, 40.0}) {
    CHECK(std::norm(psi_trig(g, p)) == doctest::Approx(4.0 / std::pow(1.0 + p * p, 2)).epsilon(1e-14));
  }
  for (int N = 1; N <= 6; ++N) {
    for (int l = 0; l < N; ++l) {
      const QuantumState s(N, l, PhysicalScale::scaled(0.6));
      for (double p : {0.1, 1.0, 9.0}) {
        CHECK(std::abs(psi_trig(s, -p) - std::conj(psi_trig(s, p))) < 1e-14);
        // Exactly the normalized Slater assembly.
        CHECK(std::abs(psi_trig(s, p) - transform_slater_expansion(normalized_slater_expansion(s), p)) <
              1e-13 * (1.0 + std::abs(psi_trig(s, p))));
      }
    }
  }
}

TEST_CASE("Gegenbauer and script-D forms agree with the trig form") {
  const QuantumState g(1, 0, PhysicalScale::scaled(1.0));
  CHECK(std::abs(psi_gegenbauer(g, 1.0) - I) < 1e-15);
  // Native Gegenbauer convention: i times the incoming transform = i conj(trig).
  CHECK(std::abs(psi_gegenbauer(g, 1.0, kInH) - I * std::conj(psi_trig(g, 1.0))) < 1e-15);
  CHECK(std::abs(psi_gegenbauer(g, 0.0, kInH) - cd(0.0, 2.0)) < 1e-15);
  for (int N = 1; N <= 8; ++N) {
    for (int l = 0; l < N; ++l) {
      const QuantumState s(N, l, PhysicalScale::scaled(1.4));
      for (double u : {-30.0, -1.0, 0.0, 1e-3, 0.5, 1.0, 2.0, 17.0, 1e3}) {
        const double p = 1.4 * u;
        for (const auto& conv : {kOut, kIn, kInH}) {
          const cd t = psi_trig(s, p, conv);
          const cd ge = psi_gegenbauer(s, p, conv);
          CHECK(std::abs(t - ge) <= 1e-11 * (1.0 + std::abs(t)));
          const cd sd = psi_script_D(s, p, conv);
          CHECK(sd.real() == ge.real());
          CHECK(sd.imag() == ge.imag());
        }
      }
    }
  }
  const QuantumState s32(3, 2, PhysicalScale::scaled(1.0));
  CHECK(std::abs(psi_script_D(s32, 2.0) - psi_trig(s32, 2.0)) < 1e-12);
}

TEST_CASE("Ferrers route agrees with the Gegenbauer route") {
  for (int N = 1; N <= 5; ++N) {
    for (int l = 0; l < N; ++l) {
      const QuantumState s(N, l, PhysicalScale::scaled(1.0));
      for (double p : {-2.0, 0.05, 0.7, 3.0, 25.0}) {
        const cd f = psi_ferrers(s, p, kInH);
        const cd ge = psi_gegenbauer(s, p, kInH);
        CHECK(std::abs(f - ge) < 1e-9 * (1.0 + std::abs(ge)));
      }
      CHECK_THROWS_AS(psi_ferrers(s, 0.0), DomainError);
    }
  }
}

TEST_CASE("Lombardi-Ogilvie amplitude") {
  CHECK(lombardi_ogilvie_coefficient(1, 0, 0) == 1.0);
  CHECK(lombardi_ogilvie_coefficient(2, 0, 0) == 1.0);
  CHECK(lombardi_ogilvie_coefficient(2, 0, 1) == 2.0);
  CHECK_THROWS_AS(lombardi_ogilvie_coefficient(2, 0, 2), IndexError);
  CHECK_THROWS_AS(lombardi_ogilvie_coefficient(2, 2, 0), PreconditionError);

  const QuantumState g(1, 0, PhysicalScale::scaled(1.0));
  for (double p : {-3.0, 0.0, 0.5, 8.0}) {
    const cd alpha = lombardi_ogilvie_alpha(g, p, kIn);
    const cd expected = std::pow(I / (p - I), 2);
    CHECK(std::abs(alpha - expected) < 1e-15);
    CHECK(std::norm(alpha) == doctest::Approx(1.0 / std::pow(1.0 + p * p, 2)).epsilon(1e-14));
  }
  // psi / alpha is the constant (-1)^l N 2^{l+2} (N+l)! / ((2 beta)^2 (N-l-1)!).
  for (int N = 1; N <= 6; ++N) {
    for (int l = 0; l < N; ++l) {
      const double beta = 0.8;
      const QuantumState s(N, l, PhysicalScale::scaled(beta));
      const double K = (l % 2 ? -1.0 : 1.0) * norm_const(N, l, beta) * std::pow(2.0, l + 2) *
                       factorial(N + l) / (4.0 * beta * beta * factorial(N - l - 1));
      for (double p : {-5.0, 0.0, 0.3, 2.0, 60.0}) {
        const cd ratio = psi_trig(s, p, kIn) / lombardi_ogilvie_alpha(s, p, kIn);
        CHECK(std::abs(ratio - K) < 1e-11 * std::abs(K));
        // Any common convention keeps the ratio constant.
        const cd r_out = psi_trig(s, p, kOut) / lombardi_ogilvie_alpha(s, p, kOut);
        CHECK(std::abs(r_out - K) < 1e-11 * std::abs(K));
      }
    }
  }
}

TEST_CASE("Podolsky-Pauling functions") {
  const auto sc = PhysicalScale::scaled(1.0);
  const QuantumState g(1, 0, sc);
  CHECK(podolsky_pauling_G(g, 0.0) == doctest::Approx(std::pow(2.0, 2.5) / std::sqrt(std::numbers::pi)));
  CHECK(podolsky_pauling_G(QuantumState(2, 1, sc), 0.0) == 0.0);
  CHECK_THROWS_AS(podolsky_pauling_G(g, -1.0), DomainError);

  // Ground state, closed form 2^{5/2}/sqrt(pi) / (1+p^2)^2 and its normalization 32/pi * pi/32.
  for (double p : {0.3, 1.0, 7.0}) {
    CHECK(podolsky_pauling_G(g, p) ==
          doctest::Approx(std::pow(2.0, 2.5) / std::sqrt(std::numbers::pi) / std::pow(1.0 + p * p, 2)));
  }
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  for (int N = 1; N <= 5; ++N) {
    for (int l = 0; l < N; ++l) {
      for (double q : {1.0, 2.5}) {
        const QuantumState s(N, l, PhysicalScale::scaled(q));
        auto f = [&](double u) {
          if (u >= 1.0) return 0.0;
          // p = q u / (1 - u)
          const double p = q * u / (1.0 - u);
          const double G = podolsky_pauling_G(s, p);
          return G * G * p * p * q / ((1.0 - u) * (1.0 - u));
        };
        CHECK(GK::integrate(f, 0.0, 1.0, 25, 1e-13) == doctest::Approx(1.0).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("Podolsky-Pauling chi form and its Jacobian relation") {
  const auto sc = PhysicalScale::scaled(1.3);
  const double q = 1.3;
  for (int N = 1; N <= 5; ++N) {
    for (int l = 0; l < N; ++l) {
      const QuantumState s(N, l, sc);
      for (double chi : {0.0, 0.4, std::numbers::pi / 2, 2.0, 3.0}) {
        const double p = momentum_from_chi(chi, sc);
        const double half = std::cos(0.5 * chi);
        CHECK(podolsky_pauling_G(s, p) ==
              doctest::Approx(podolsky_pauling_chi(s, chi) * half * half / (q * q)).epsilon(1e-11));
      }
      CHECK(podolsky_pauling_chi(s, std::numbers::pi) == doctest::Approx(0.0).scale(1.0));
    }
  }
  // S_{11}(chi) = sin chi for (2,1).
  const QuantumState s21(2, 1, sc);
  const double ratio = podolsky_pauling_chi(s21, 0.9) / (std::cos(0.45) * std::cos(0.45) * std::sin(0.9));
  CHECK(podolsky_pauling_chi(s21, 1.7) / (std::cos(0.85) * std::cos(0.85) * std::sin(1.7)) ==
        doctest::Approx(ratio));
  CHECK_THROWS_AS(podolsky_pauling_chi(s21, -0.1), DomainError);
}

TEST_CASE("maximal-l distributions") {
  using F = DistributionFamily;
  CHECK(distribution_max_l(F::podolsky_pauling, 1, 0.0) == 1.0);
  CHECK(distribution_max_l(F::podolsky_pauling, 1, 1.0) == 1.0 / 16.0);
  CHECK(distribution_max_l(F::lombardi_ogilvie, 1, 1.0) == 0.25);
  CHECK(distribution_max_l(F::lombardi_ogilvie, 1, 0.0) == 1.0);
  for (int N = 2; N <= 4; ++N) CHECK(distribution_max_l(F::podolsky_pauling, N, 0.0) == 0.0);
  for (double p : {0.2, 1.5, 4.0}) {
    CHECK(distribution_max_l(F::podolsky_pauling, 1, p) == doctest::Approx(1.0 / std::pow(1.0 + p * p, 4)));
    CHECK(distribution_max_l(F::lombardi_ogilvie, 3, -p) == doctest::Approx(1.0 / std::pow(1.0 + p * p, 4)));
  }
  // The shapes are those of |G_{N,N-1}|^2 and |psi_{N,N-1}|^2.
  for (int N = 1; N <= 4; ++N) {
    const QuantumState s(N, N - 1, PhysicalScale::scaled(1.0));
    const double r_pp = std::pow(podolsky_pauling_G(s, 0.7), 2) / distribution_max_l(F::podolsky_pauling, N, 0.7);
    const double r_pp2 = std::pow(podolsky_pauling_G(s, 2.9), 2) / distribution_max_l(F::podolsky_pauling, N, 2.9);
    CHECK(r_pp == doctest::Approx(r_pp2).epsilon(1e-12));
    const double r_lo = std::norm(psi_trig(s, -1.1)) / distribution_max_l(F::lombardi_ogilvie, N, -1.1);
    const double r_lo2 = std::norm(psi_trig(s, 5.0)) / distribution_max_l(F::lombardi_ogilvie, N, 5.0);
    CHECK(r_lo == doctest::Approx(r_lo2).epsilon(1e-12));
  }
  CHECK_THROWS_AS(distribution_max_l(F::podolsky_pauling, 1, -1.0), DomainError);
  CHECK_THROWS_AS(distribution_max_l(F::lombardi_ogilvie, 0, 1.0), PreconditionError);
}

TEST_CASE("property: finite everywhere and decaying at large momentum") {
  const auto grid = EvaluationGrid::default_momentum().with_negatives();
  for (int N = 1; N <= 8; ++N) {
    for (int l = 0; l < N; ++l) {
      const QuantumState s(N, l, PhysicalScale::scaled(1.0));
      for (double p : grid.points) {
        for (auto form : {MomentumForm::trig, MomentumForm::gegenbauer, MomentumForm::lombardi_ogilvie}) {
          const auto v = evaluate_form(form, s, p).value;
          CHECK(std::isfinite(v.real()));
          CHECK(std::isfinite(v.imag()));
        }
      }
      // |psi| strictly decreasing beyond 10 hbar beta N
      double last = std::abs(psi_trig(s, 10.0 * N));
      for (double p = 10.0 * N * 1.1; p < 1e4; p *= 1.1) {
        const double now = std::abs(psi_trig(s, p));
        CHECK(now < last);
        last = now;
      }
      CHECK(last < 1e-6);
    }
  }
}

TEST_CASE("form names") {
  for (auto f : {MomentumForm::gegenbauer, MomentumForm::script_D, MomentumForm::ferrers, MomentumForm::trig,
                 MomentumForm::lombardi_ogilvie, MomentumForm::podolsky_pauling}) {
    CHECK(parse_momentum_form(to_string(f)) == f);
  }
  CHECK(parse_momentum_form("pp") == MomentumForm::podolsky_pauling);
  CHECK(parse_momentum_form("lo") == MomentumForm::lombardi_ogilvie);
  CHECK_THROWS_AS(parse_momentum_form("fourier"), PreconditionError);
}

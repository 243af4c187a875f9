#pragma once

// Globally adaptive Gauss-Kronrod quadrature on a finite interval.
//
// Each panel is estimated with a single 21-point Kronrod rule. The raw
// Kronrod/Gauss difference badly overstates the error of the Kronrod value, so
// it is rescaled the QUADPACK way, L1 * min(1, (200 |K - G| / L1)^{3/2}), and
// never taken below the rounding floor 50 eps L1 (L1 = int |f| on the panel).
// The panel with the largest error is bisected until the summed error meets
// max(abs_tol, rel_tol * |result|, 100 eps int|f|) or the budget runs out; the
// last term accepts a result whose panels are all at the rounding floor.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <string>
#include <tuple>
#include <type_traits>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hatom/errors.hpp"

namespace hatom {

struct QuadratureSpec {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  /// Truncation radius for half-line integrals; <= 0 means "derive it from the
  /// integrand's exponential tail" where the caller knows how.
  double max_radius = 0.0;
  int panel_budget = 20000;

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
      throw PreconditionError("QuadratureSpec: tolerances must be positive");
    }
    if (panel_budget < 1) {
      throw PreconditionError("QuadratureSpec: panel budget must be positive");
    }
  }
};

template <class T>
struct QuadratureResult {
  T value{};
  double error = 0.0;
  int panels = 0;
};

namespace detail {

template <class T>
double magnitude(const T& v) {
  return std::abs(v);
}

template <class T>
std::pair<double, double> parts(const T& v) {
  if constexpr (std::is_same_v<T, std::complex<double>>) {
    return {v.real(), v.imag()};
  } else {
    return {static_cast<double>(v), 0.0};
  }
}

}  // namespace detail

/// Integrate f over [a, b]. `initial_panels` seeds a uniform split, which
/// helps for oscillatory integrands whose period is known in advance.
template <class F>
auto integrate_adaptive(F&& f, double a, double b, const QuadratureSpec& spec,
                        int initial_panels = 1)
    -> QuadratureResult<std::decay_t<decltype(f(0.0))>> {
  using T = std::decay_t<decltype(f(0.0))>;
  using Rule = boost::math::quadrature::gauss_kronrod<double, 21>;
  spec.validate();

  struct Panel {
    double lo;
    double hi;
    T value;
    double error;
    double l1;
    bool operator<(const Panel& other) const { return error < other.error; }
  };
  constexpr double kRoundoff = 50.0 * std::numeric_limits<double>::epsilon();
  auto estimate = [&](double lo, double hi) {
    double diff = 0.0;
    double l1 = 0.0;
    T v = Rule::integrate(f, lo, hi, 0, 0.0, &diff, &l1);
    // Boost reports the difference on the reference interval [-1, 1] without
    // the half-width factor it applies to the value and to L1.
    diff *= 0.5 * (hi - lo);
    double err = diff;
    if (l1 > 0.0) err = l1 * std::min(1.0, std::pow(200.0 * diff / l1, 1.5));
    return Panel{lo, hi, v, std::max(err, kRoundoff * l1), l1};
  };

  QuadratureResult<T> out;
  if (a == b) return out;

  initial_panels = std::clamp(initial_panels, 1, spec.panel_budget);
  std::priority_queue<Panel> queue;
  const double width = (b - a) / initial_panels;
  for (int k = 0; k < initial_panels; ++k) {
    const double lo = a + k * width;
    const double hi = (k + 1 == initial_panels) ? b : a + (k + 1) * width;
    queue.push(estimate(lo, hi));
  }

  auto totals = [&queue]() {
    // Copying the heap is cheap relative to the integrand evaluations.
    auto copy = queue;
    T sum{};
    double err = 0.0;
    double l1 = 0.0;
    while (!copy.empty()) {
      sum += copy.top().value;
      err += copy.top().error;
      l1 += copy.top().l1;
      copy.pop();
    }
    return std::tuple<T, double, double>{sum, err, l1};
  };

  auto [sum, err, l1] = totals();
  int panels = initial_panels;
  while (err > std::max({spec.abs_tol, spec.rel_tol * detail::magnitude(sum), 2.0 * kRoundoff * l1})) {
    if (panels >= spec.panel_budget) {
      auto [re, im] = detail::parts(sum);
      throw ConvergenceError(
          "integrate_adaptive: tolerance not met within " +
              std::to_string(spec.panel_budget) + " panels",
          re, im, err);
    }
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    Panel left = estimate(worst.lo, mid);
    Panel right = estimate(mid, worst.hi);
    sum += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    queue.push(left);
    queue.push(right);
    ++panels;
    if (panels % 512 == 0) std::tie(sum, err, l1) = totals();
  }
  std::tie(sum, err, l1) = totals();
  out.value = sum;
  out.error = err;
  out.panels = panels;
  return out;
}

}  // namespace hatom

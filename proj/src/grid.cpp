#include "hatom/grid.hpp"

#include <algorithm>
#include <cmath>

#include "hatom/errors.hpp"

namespace hatom {

double EvaluationGrid::min() const {
  if (points.empty()) throw PreconditionError("EvaluationGrid: empty grid");
  return *std::min_element(points.begin(), points.end());
}

double EvaluationGrid::max() const {
  if (points.empty()) throw PreconditionError("EvaluationGrid: empty grid");
  return *std::max_element(points.begin(), points.end());
}

EvaluationGrid EvaluationGrid::linear(double lo, double hi, std::size_t count) {
  if (!(lo < hi)) throw PreconditionError("EvaluationGrid::linear: need min < max");
  if (count < 2) throw PreconditionError("EvaluationGrid::linear: need count >= 2");
  EvaluationGrid g;
  g.spacing = "linear";
  g.points.reserve(count);
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t k = 0; k < count; ++k) {
    g.points.push_back(k + 1 == count ? hi : lo + step * static_cast<double>(k));
  }
  return g;
}

EvaluationGrid EvaluationGrid::log_with_zero(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(lo < hi)) {
    throw PreconditionError("EvaluationGrid::log_with_zero: need 0 < min < max");
  }
  if (count < 2) throw PreconditionError("EvaluationGrid::log_with_zero: need count >= 2");
  EvaluationGrid g;
  g.spacing = "log+zero";
  g.points.reserve(count + 1);
  g.points.push_back(0.0);
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (std::size_t k = 0; k < count; ++k) {
    const double e = a + (b - a) * static_cast<double>(k) / static_cast<double>(count - 1);
    g.points.push_back(std::pow(10.0, e));
  }
  return g;
}

EvaluationGrid EvaluationGrid::default_momentum() {
  return log_with_zero(1e-3, 1e3, 60);
}

EvaluationGrid EvaluationGrid::with_negatives() const {
  EvaluationGrid g = *this;
  for (double p : points) {
    if (p > 0.0) g.points.push_back(-p);
  }
  std::sort(g.points.begin(), g.points.end());
  g.points.erase(std::unique(g.points.begin(), g.points.end()), g.points.end());
  g.mirrored = true;
  return g;
}

EvaluationGrid EvaluationGrid::nonnegative(bool strict) const {
  EvaluationGrid g = *this;
  g.points.clear();
  for (double p : points) {
    if (strict ? p > 0.0 : p >= 0.0) g.points.push_back(p);
  }
  g.mirrored = false;
  return g;
}

EvaluationGrid EvaluationGrid::clipped(double limit) const {
  EvaluationGrid g = *this;
  g.points.clear();
  for (double p : points) {
    if (std::abs(p) <= limit) g.points.push_back(p);
  }
  return g;
}

}  // namespace hatom

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hatom {

/// Ordered radial-momentum sample points, stored in units of hbar*beta.
struct EvaluationGrid {
  std::vector<double> points;
  std::string spacing = "custom";  // "linear", "log+zero", "custom"
  std::string units = "hbar*beta";
  bool mirrored = false;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  double min() const;
  double max() const;

  /// count >= 2 points from lo to hi inclusive; requires lo < hi.
  static EvaluationGrid linear(double lo, double hi, std::size_t count);
  /// 0 followed by `count` log-spaced points on [lo, hi], 0 < lo < hi.
  static EvaluationGrid log_with_zero(double lo, double hi, std::size_t count);
  /// 0 plus 60 log-spaced points over [1e-3, 1e3].
  static EvaluationGrid default_momentum();

  /// Adds -p for every p > 0 and keeps the result sorted.
  EvaluationGrid with_negatives() const;
  /// Only the points with p >= 0 (or p > 0 when `strict`).
  EvaluationGrid nonnegative(bool strict = false) const;
  /// Points with |p| <= limit.
  EvaluationGrid clipped(double limit) const;
};

}  // namespace hatom

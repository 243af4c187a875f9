#pragma once

// Cross-checks between the closed forms, the numerical transform and the
// analytic expectation values, bundled into a reproducible report.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hatom/grid.hpp"
#include "hatom/quadrature.hpp"
#include "hatom/radial_transform.hpp"

namespace hatom {

struct GridDescriptor {
  std::string spacing;
  std::string units = "hbar*beta";
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
  bool mirrored = false;

  static GridDescriptor of(const EvaluationGrid& grid);
  bool operator==(const GridDescriptor&) const = default;
};

struct CheckResult {
  std::string name;
  std::vector<std::pair<int, int>> states_covered;
  GridDescriptor grid;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string details;

  /// Sets passed from max_residual <= tolerance (NaN never passes).
  void settle();
  bool operator==(const CheckResult&) const = default;
};

struct VerificationConfig {
  /// Suite names to run; empty means all of them.
  std::vector<std::string> suites;
  /// Multiplies every tolerance; values > 1 loosen the checks.
  double tol_scale = 1.0;
  double hbar_beta = 1.0;
  /// Convention in which the complex forms are compared. The transform of
  /// the diagonalization identity uses it too.
  TransformConvention convention{KernelSign::incoming, PhasePrefactor::none};
  QuadratureSpec quadrature{};
  /// Copied into the report verbatim; run_all never reads the clock.
  std::string timestamp;

  void validate() const;
  bool operator==(const VerificationConfig&) const;
};

struct VerificationReport {
  std::vector<CheckResult> results;
  VerificationConfig config;
  std::string timestamp;
  bool overall_pass = false;

  bool operator==(const VerificationReport&) const;
};

/// Names accepted by VerificationConfig::suites, in execution order.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Individual suites. Grids are in units of hbar*beta.
CheckResult verify_form_equivalence(int max_n, const EvaluationGrid& grid,
                                    const VerificationConfig& config = {});
CheckResult verify_quadrature(int max_n, const EvaluationGrid& grid,
                              const VerificationConfig& config = {});
CheckResult verify_diagonalization(const EvaluationGrid& grid, const VerificationConfig& config = {});
CheckResult verify_parseval(int max_n, const VerificationConfig& config = {});
CheckResult verify_lo_proportionality(int max_n, const EvaluationGrid& grid,
                                      const VerificationConfig& config = {});
CheckResult verify_pp_vs_hankel(int max_n, const EvaluationGrid& grid,
                                const VerificationConfig& config = {});
CheckResult verify_pp_normalization(int max_n, const VerificationConfig& config = {});
CheckResult verify_pp_tail(const VerificationConfig& config = {});
CheckResult verify_uncertainty(int max_n, const VerificationConfig& config = {});
CheckResult verify_uncertainty_ground_state(const VerificationConfig& config = {});
CheckResult verify_trig_identities(const VerificationConfig& config = {});
CheckResult verify_laguerre(const VerificationConfig& config = {});
CheckResult verify_so4_constancy(int max_n, const EvaluationGrid& grid,
                                 const VerificationConfig& config = {});
CheckResult verify_figure_values(const VerificationConfig& config = {});

/// Runs the selected suites (concurrently) and assembles them in a fixed order.
VerificationReport run_all(const VerificationConfig& config);

void to_json(nlohmann::json& j, const GridDescriptor& g);
void from_json(const nlohmann::json& j, GridDescriptor& g);
void to_json(nlohmann::json& j, const CheckResult& r);
void from_json(const nlohmann::json& j, CheckResult& r);
void to_json(nlohmann::json& j, const VerificationConfig& c);
void from_json(const nlohmann::json& j, VerificationConfig& c);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

}  // namespace hatom

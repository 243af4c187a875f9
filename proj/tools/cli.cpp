#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hatom/errors.hpp"
#include "hatom/grid.hpp"
#include "hatom/hydrogenic.hpp"
#include "hatom/momentum_forms.hpp"
#include "hatom/verification.hpp"

namespace hatom::cli {

namespace {

struct ScaleFlags {
  double hbar_beta = 1.0;
  bool physical = false;
  int Z = 1;
  double mu = 1.0;
  double alpha_fs = 7.2973525693e-3;

  void attach(CLI::App* app) {
    app->add_option("--hbar-beta", hbar_beta, "momentum scale in scaled units (hbar = 1)")
        ->capture_default_str();
    app->add_flag("--physical", physical, "derive beta from Z, mu and alpha (atomic units)");
    app->add_option("--Z", Z, "nuclear charge (with --physical)")->capture_default_str();
    app->add_option("--mu", mu, "reduced mass (with --physical)")->capture_default_str();
    app->add_option("--alpha-fs", alpha_fs, "fine-structure constant (with --physical)")
        ->capture_default_str();
  }

  PhysicalScale scale(int N) const {
    if (physical) return PhysicalScale::physical(Z, mu, alpha_fs, N);
    return PhysicalScale::scaled(hbar_beta);
  }
};

struct ConventionFlags {
  std::string kernel;
  std::string prefactor;

  ConventionFlags(std::string k, std::string p) : kernel(std::move(k)), prefactor(std::move(p)) {}

  void attach(CLI::App* app) {
    app->add_option("--kernel", kernel, "transform kernel")
        ->check(CLI::IsMember({"outgoing", "incoming"}))
        ->capture_default_str();
    app->add_option("--prefactor", prefactor, "phase prefactor in front of the kernel")
        ->check(CLI::IsMember({"none", "spherical_hankel"}))
        ->capture_default_str();
  }

  TransformConvention convention() const {
    return {parse_kernel_sign(kernel), parse_phase_prefactor(prefactor)};
  }
};

struct StateArgs {
  std::string form;
  int N = 1;
  int l = 0;

  void attach(CLI::App* app) {
    app->add_option("form", form,
                    "trig | gegenbauer | script_D | ferrers | lombardi_ogilvie (lo) | "
                    "podolsky_pauling (pp)")
        ->required();
    app->add_option("N", N, "principal quantum number")->required();
    app->add_option("l", l, "orbital quantum number")->required();
  }
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_record(std::ostream& os, double p, std::complex<double> v) {
  os << format_number(p) << ',' << format_number(v.real()) << ',' << format_number(v.imag())
     << ',' << format_number(std::norm(v)) << '\n';
}

// Writes to the named file, or to `fallback` when the name is empty.
template <class Body>
void emit(const std::string& path, std::ostream& fallback, Body&& body) {
  if (path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  body(file);
  file.flush();
  if (!file) throw IoError("write to '" + path + "' failed");
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radial momentum wave functions of the hydrogen atom", "hatom"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate one form at one momentum");
  StateArgs eval_state;
  ScaleFlags eval_scale;
  ConventionFlags eval_conv("outgoing", "none");
  double eval_p = 0.0;
  eval_state.attach(eval);
  eval->add_option("--p", eval_p, "radial momentum")->required();
  eval_scale.attach(eval);
  eval_conv.attach(eval);

  // table
  auto* table = app.add_subcommand("table", "CSV of a form over a linear momentum grid");
  StateArgs table_state;
  ScaleFlags table_scale;
  ConventionFlags table_conv("outgoing", "none");
  double table_min = 0.0;
  double table_max = 10.0;
  std::size_t table_count = 101;
  std::string table_out;
  table_state.attach(table);
  table->add_option("--min", table_min)->capture_default_str();
  table->add_option("--max", table_max)->capture_default_str();
  table->add_option("--count", table_count)->capture_default_str();
  table->add_option("-o,--output", table_out, "output file (default stdout)");
  table_scale.attach(table);
  table_conv.attach(table);

  // plot
  auto* plot = app.add_subcommand("plot", "l = N-1 momentum densities (PP on p >= 0, LO on the line)");
  std::string plot_family;
  int plot_N = 1;
  double plot_max = 5.0;
  std::size_t plot_count = 201;
  double plot_hbar_beta = 1.0;
  std::string plot_out;
  plot->add_option("family", plot_family, "pp | lo")
      ->required()
      ->check(CLI::IsMember({"pp", "lo", "PP", "LO"}));
  plot->add_option("N", plot_N)->required();
  plot->add_option("--max", plot_max, "largest |p|")->capture_default_str();
  plot->add_option("--count", plot_count)->capture_default_str();
  plot->add_option("--hbar-beta", plot_hbar_beta)->capture_default_str();
  plot->add_option("-o,--output", plot_out, "output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "run the verification suites, JSON report");
  std::vector<std::string> verify_suites;
  double tol_scale = 1.0;
  double verify_hbar_beta = 1.0;
  ConventionFlags verify_conv("incoming", "none");
  std::string verify_out;
  std::optional<std::string> verify_timestamp;
  bool list_suites = false;
  verify->add_option("--suite", verify_suites, "suite name (repeatable; default all)");
  verify->add_option("--tol-scale", tol_scale, "multiplies every tolerance")->capture_default_str();
  verify->add_option("--hbar-beta", verify_hbar_beta)->capture_default_str();
  verify->add_option("-o,--output", verify_out, "output file (default stdout)");
  verify->add_option("--timestamp", verify_timestamp, "report timestamp (default: now, UTC)");
  verify->add_flag("--list", list_suites, "print the suite names and exit");
  verify_conv.attach(verify);

  std::vector<const char*> argv{"hatom"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (eval->parsed()) {
      const QuantumState state(eval_state.N, eval_state.l, eval_scale.scale(eval_state.N));
      const auto form = parse_momentum_form(eval_state.form);
      const auto amp = evaluate_form(form, state, eval_p, eval_conv.convention());
      write_record(out, eval_p, amp.value);
      return kOk;
    }

    if (table->parsed()) {
      const QuantumState state(table_state.N, table_state.l, table_scale.scale(table_state.N));
      const auto form = parse_momentum_form(table_state.form);
      const auto grid = EvaluationGrid::linear(table_min, table_max, table_count);
      const auto conv = table_conv.convention();
      // Evaluate everything first so a domain error leaves no partial file.
      std::vector<MomentumAmplitude> rows;
      for (double p : grid.points) rows.push_back(evaluate_form(form, state, p, conv));
      emit(table_out, out, [&](std::ostream& os) {
        os << "p,re,im,abs2\n";
        for (const auto& r : rows) write_record(os, r.p, r.value);
      });
      return kOk;
    }

    if (plot->parsed()) {
      if (plot_N < 1) throw PreconditionError("plot: N must be >= 1");
      const bool pp = plot_family == "pp" || plot_family == "PP";
      const auto grid = pp ? EvaluationGrid::linear(0.0, plot_max, plot_count)
                           : EvaluationGrid::linear(-plot_max, plot_max, plot_count);
      const auto scale = PhysicalScale::scaled(plot_hbar_beta);
      const auto family = pp ? DistributionFamily::podolsky_pauling
                             : DistributionFamily::lombardi_ogilvie;
      std::vector<double> density;
      for (double p : grid.points) density.push_back(distribution_max_l(family, plot_N, p, scale));
      emit(plot_out, out, [&](std::ostream& os) {
        os << "p,density\n";
        for (std::size_t i = 0; i < grid.size(); ++i) {
          os << format_number(grid.points[i]) << ',' << format_number(density[i]) << '\n';
        }
      });
      return kOk;
    }

    if (verify->parsed()) {
      if (list_suites) {
        for (const auto& s : suite_names()) out << s << '\n';
        return kOk;
      }
      VerificationConfig config;
      config.suites = verify_suites;
      config.tol_scale = tol_scale;
      config.hbar_beta = verify_hbar_beta;
      config.convention = verify_conv.convention();
      config.timestamp = verify_timestamp.value_or(utc_now());
      config.validate();
      const auto report = run_all(config);
      const nlohmann::json j = report;
      emit(verify_out, out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
      for (const auto& r : report.results) {
        if (!r.passed) err << "FAILED " << r.name << ": residual " << format_number(r.max_residual)
                           << " > " << format_number(r.tolerance) << '\n';
      }
      return report.overall_pass ? kOk : kVerifyFailed;
    }
  } catch (const IoError& e) {
    err << "hatom: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "hatom: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hatom::cli

#include "cli/app.hpp"

#include <CLI11.hpp>
#include <memory>
#include <ostream>

#include "cli/commands.hpp"
#include "cli/json_config.hpp"
#include "nlsenergy/energy/energy.hpp"
#include "nlsenergy/spectral/solver.hpp"

namespace nlsenergy::cli {
namespace {

void add_run_options(CLI::App* sub, RunConfig& c, bool tolerances) {
  sub->add_option("--k", c.k, "Sobolev index (>= 2); optional with --energy");
  sub->add_option("--p", c.p, "Nonlinearity power (>= 2); optional with --energy");
  sub->add_option("--n-modes", c.n_modes, "Fourier mode count, a power of two")->capture_default_str();
  sub->add_option("--dt", c.dt, "Time step")->capture_default_str();
  sub->add_option("--t-end", c.t_end, "Final time")->capture_default_str();
  sub->add_option("--seed", c.seed, "Random initial data seed")->capture_default_str();
  sub->add_option("--r-h1", c.r_h1, "H^1 norm of random initial data")->capture_default_str();
  sub->add_option("--decay", c.decay, "Spectral decay exponent of random initial data")->capture_default_str();
  sub->add_option("--preset", c.preset, "Initial data: random or planewave")
      ->check(CLI::IsMember({"random", "planewave"}))
      ->capture_default_str();
  sub->add_option("--amplitude", c.amplitude, "Plane-wave amplitude")->capture_default_str();
  sub->add_option("--wavenumber", c.wavenumber, "Plane-wave wavenumber")->capture_default_str();
  sub->add_option("--record-stride", c.record_stride, "Steps between recorded rows")->capture_default_str();
  sub->add_option("--fd-steps", c.fd_steps, "Half-width of the central difference, in steps")->capture_default_str();
  sub->add_option("--fd-dt", c.fd_dt, "Solver step inside the central difference")->capture_default_str();
  sub->add_option("--nonlinearity", c.nonlinearity, "Sign of the nonlinearity (only defocusing is supported)")
      ->capture_default_str();
  sub->add_option("--energy", c.energy, "Energy document from 'build'; built on the fly when absent");
  sub->add_option("--out", c.out, "Output CSV path; metadata goes next to it as .meta.json");
  if (tolerances) {
    sub->add_option("--tol-fd", c.tol_fd, "Tolerance, finite difference vs exact derivative")->capture_default_str();
    sub->add_option("--tol-decomposition", c.tol_decomposition, "Tolerance, decomposition vs exact derivative")
        ->capture_default_str();
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modified energies for the periodic defocusing NLS: exact construction and numerical cross-checks",
               "nlsenergy"};
  app.require_subcommand(1);
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON config document; run metadata files are accepted");
  app.allow_config_extras(CLI::config_extras_mode::ignore);

  BuildConfig build;
  auto* sub_build = app.add_subcommand("build", "Solve for the energy E_k and write its document")->configurable();
  sub_build->add_option("--k", build.k, "Sobolev index (>= 2)")->required();
  sub_build->add_option("--p", build.p, "Nonlinearity power (>= 2)")->required();
  sub_build->add_option("--out", build.out, "Document path (default energy_k<k>_p<p>.json)");
  sub_build->add_option("--pin", build.pinned, "Catalogue entry to force to zero (repeatable)");

  VerifyConfig verify;
  auto* sub_verify = app.add_subcommand("verify", "Check every star identity and solve each (k, p) cell")->configurable();
  sub_verify->add_option("--k", verify.k_range, "k values: a..b, a,b,c or a")->capture_default_str();
  sub_verify->add_option("--p", verify.p_range, "p values: a..b, a,b,c or a")->capture_default_str();
  sub_verify->add_option("--jobs", verify.jobs, "Cells processed concurrently")->capture_default_str();
  sub_verify->add_flag("--corrupt-catalogue", verify.corrupt_catalogue)->group("");

  RunConfig simulate;
  auto* sub_simulate = app.add_subcommand("simulate", "Integrate and record norms, energies and monitors")->configurable();
  add_run_options(sub_simulate, simulate, false);

  RunConfig crosscheck;
  crosscheck.n_modes = 32;
  crosscheck.dt = 1e-5;
  crosscheck.fd_dt = 1e-5;
  crosscheck.t_end = 0.01;
  crosscheck.record_stride = 250;
  auto* sub_crosscheck =
      app.add_subcommand("crosscheck", "Compare dE_k/dt: finite differences, exact derivative, decomposition")
          ->configurable();
  add_run_options(sub_crosscheck, crosscheck, true);

  RunConfig monitor;
  monitor.t_end = 10.0;
  auto* sub_monitor = app.add_subcommand("monitor", "Track |F_k| against ||u||_{H^k} and the cubic remainder")
                          ->configurable();
  add_run_options(sub_monitor, monitor, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (sub_build->parsed()) return cmd_build(build, out, err);
    if (sub_verify->parsed()) return cmd_verify(verify, out, err);
    if (sub_simulate->parsed()) return cmd_simulate(simulate, out, err);
    if (sub_crosscheck->parsed()) return cmd_crosscheck(crosscheck, out, err);
    if (sub_monitor->parsed()) return cmd_monitor(monitor, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const energy::InfeasibleSystem& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const energy::NoGammaRepresentative& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const spectral::NonFiniteState& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace nlsenergy::cli

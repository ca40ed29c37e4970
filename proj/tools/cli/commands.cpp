#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <future>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "cli/app.hpp"
#include "cli/provenance.hpp"
#include "nlsenergy/algebra/text_format.hpp"
#include "nlsenergy/energy/energy.hpp"
#include "nlsenergy/energy/energy_document.hpp"
#include "nlsenergy/energy/lemmas.hpp"
#include "nlsenergy/spectral/evaluate.hpp"
#include "nlsenergy/spectral/monitors.hpp"
#include "nlsenergy/spectral/report.hpp"

namespace nlsenergy::cli {
namespace {

using json = nlohmann::ordered_json;
using energy::EnergyDefinition;
using spectral::format_double;
using spectral::SpectralState;

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void validate_kp(int k, int p) {
  require(k >= 2, "k must be at least 2 (got " + std::to_string(k) + ")");
  require(p >= 2, "p must be at least 2 (got " + std::to_string(p) + ")");
}

void validate_run(const RunConfig& c) {
  require(c.nonlinearity == "defocusing", "only the defocusing equation is supported");
  require(c.energy.empty() ? c.k != 0 && c.p != 0 : true, "--k and --p are required without --energy");
  if (c.k != 0 || c.p != 0) validate_kp(c.k, c.p);
  require(c.n_modes >= 4 && (c.n_modes & (c.n_modes - 1)) == 0, "--n-modes must be a power of two >= 4");
  require(c.dt > 0.0 && std::isfinite(c.dt), "--dt must be positive");
  require(c.t_end >= 0.0 && std::isfinite(c.t_end), "--t-end must be non-negative");
  require(c.r_h1 > 0.0 && std::isfinite(c.r_h1), "--r-h1 must be positive");
  require(c.decay >= 0.0 && std::isfinite(c.decay), "--decay must be non-negative");
  require(c.record_stride >= 1, "--record-stride must be positive");
  require(c.fd_steps >= 1, "--fd-steps must be positive");
  require(c.fd_dt > 0.0 && std::isfinite(c.fd_dt), "--fd-dt must be positive");
  require(c.preset == "random" || c.preset == "planewave", "--preset must be random or planewave");
  if (c.preset == "planewave")
    require(c.wavenumber >= -c.n_modes / 2 && c.wavenumber < c.n_modes / 2, "--wavenumber lies outside the band");
}

// Loads and validates before any heavy computation; k/p from the flags must agree.
EnergyDefinition obtain_energy(const RunConfig& c) {
  if (c.energy.empty()) return energy::build_energy(c.k, c.p);
  EnergyDefinition e;
  try {
    e = energy::import_energy(read_file(c.energy));
  } catch (const std::exception& ex) {
    throw UsageError("energy document " + c.energy + ": " + ex.what());
  }
  require(c.k == 0 || c.k == e.k,
          "energy document has k=" + std::to_string(e.k) + " but --k " + std::to_string(c.k) + " was given");
  require(c.p == 0 || c.p == e.p,
          "energy document has p=" + std::to_string(e.p) + " but --p " + std::to_string(c.p) + " was given");
  return e;
}

SpectralState initial_state(const RunConfig& c) {
  if (c.preset == "planewave") return spectral::plane_wave(c.n_modes, c.amplitude, c.wavenumber);
  return spectral::random_state(c.seed, c.n_modes, c.decay, c.r_h1);
}

spectral::SolverConfig solver_config(const RunConfig& c) {
  spectral::SolverConfig s;
  s.dt = c.dt;
  s.t_end = c.t_end;
  s.record_stride = c.record_stride;
  return s;
}

std::string default_out(const std::string& given, const std::string& fallback) { return given.empty() ? fallback : given; }

json run_flags(const RunConfig& c, const EnergyDefinition& e, const std::string& out, bool tolerances) {
  json j;
  j["k"] = e.k;
  j["p"] = e.p;
  j["n-modes"] = c.n_modes;
  j["dt"] = format_double(c.dt);
  j["t-end"] = format_double(c.t_end);
  j["seed"] = c.seed;
  j["r-h1"] = format_double(c.r_h1);
  j["decay"] = format_double(c.decay);
  j["preset"] = c.preset;
  j["amplitude"] = format_double(c.amplitude);
  j["wavenumber"] = c.wavenumber;
  j["record-stride"] = c.record_stride;
  j["fd-steps"] = c.fd_steps;
  j["fd-dt"] = format_double(c.fd_dt);
  j["nonlinearity"] = c.nonlinearity;
  if (!c.energy.empty()) j["energy"] = c.energy;
  j["out"] = out;
  if (tolerances) {
    j["tol-fd"] = format_double(c.tol_fd);
    j["tol-decomposition"] = format_double(c.tol_decomposition);
  }
  return j;
}

void write_metadata(const std::string& command, const json& flags, const EnergyDefinition& e, const std::string& out,
                    json results) {
  json meta;
  meta["schema"] = "nlsenergy.run";
  meta["version"] = 1;
  meta["command"] = command;
  meta[command] = flags;
  meta["software"] = software_versions();
  meta["energy_sha256"] = sha256_hex(energy::export_energy(e));
  meta["results"] = std::move(results);
  write_file_atomically(metadata_path(out), meta.dump(2) + "\n");
}

std::string csv_text(const std::vector<spectral::ReportRow>& rows) {
  std::ostringstream os;
  spectral::write_csv(os, rows);
  return os.str();
}

void print_coefficients(const EnergyDefinition& e, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& [name, v] : e.coefficients) width = std::max(width, name.size());
  for (const auto& [name, v] : e.coefficients)
    out << "  " << std::left << std::setw(static_cast<int>(width)) << name << "  " << algebra::rational_to_string(v)
        << '\n';
  out << "  " << std::left << std::setw(static_cast<int>(width)) << "cubic_coeff" << "  "
      << algebra::rational_to_string(e.cubic_coeff) << '\n';
}

}  // namespace

std::vector<int> parse_int_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw UsageError("bad integer '" + s + "' in range '" + text + "'");
    return v;
  };
  std::vector<int> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = to_int(text.substr(0, dots));
    const int hi = to_int(text.substr(dots + 2));
    require(lo <= hi, "empty range '" + text + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) out.push_back(to_int(part));
  require(!out.empty(), "empty range");
  return out;
}

int cmd_build(const BuildConfig& cfg, std::ostream& out, std::ostream& err) {
  validate_kp(cfg.k, cfg.p);
  energy::SolveOptions options;
  options.pinned = cfg.pinned;
  EnergyDefinition e;
  try {
    e = energy::build_energy(cfg.k, cfg.p, options);
  } catch (const energy::InfeasibleSystem& ex) {
    err << "error: " << ex.what() << "\nirreducible residual:\n" << algebra::to_text(ex.residual()) << '\n';
    return kInfeasible;
  } catch (const energy::NoGammaRepresentative& ex) {
    err << "error: " << ex.what() << '\n';
    return kInfeasible;
  }
  const std::string path =
      default_out(cfg.out, "energy_k" + std::to_string(cfg.k) + "_p" + std::to_string(cfg.p) + ".json");
  write_file_atomically(path, energy::export_energy(e));

  const auto nonzero = std::count_if(e.coefficients.begin(), e.coefficients.end(),
                                     [](const auto& c) { return sgn(c.second) != 0; });
  out << "energy k=" << e.k << " p=" << e.p << ": " << nonzero << " nonzero of " << e.coefficients.size()
      << " correction coefficients\n";
  print_coefficients(e, out);
  out << "F_k terms " << e.F_k.size() << ", Omega terms " << e.residual_omega.size() << ", Theta terms "
      << e.residual_theta.size() << '\n';
  out << "wrote " << path << '\n';
  return kOk;
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream&) {
  const auto ks = parse_int_range(cfg.k_range);
  const auto ps = parse_int_range(cfg.p_range);
  for (int k : ks)
    for (int p : ps) validate_kp(k, p);
  require(cfg.jobs >= 1, "--jobs must be positive");

  struct Cell {
    int k, p;
    std::size_t identities = 0, passed = 0;
    std::string solve = "ok";
    bool ok() const { return passed == identities && solve == "ok"; }
  };
  auto run_cell = [&cfg](int k, int p) {
    Cell c{k, p};
    energy::CatalogueOptions cat{cfg.corrupt_catalogue};
    const auto report = energy::verify_lemmas(k, p, cat);
    c.identities = report.checks.size();
    c.passed = static_cast<std::size_t>(
        std::count_if(report.checks.begin(), report.checks.end(), [](const auto& x) { return x.passed; }));
    try {
      energy::SolveOptions options;
      options.catalogue = cat;
      const auto e = energy::build_energy(k, p, options);
      if (!energy::check_invariants(e).empty()) c.solve = "invariants";
    } catch (const energy::InfeasibleSystem&) {
      c.solve = "infeasible";
    } catch (const energy::NoGammaRepresentative&) {
      c.solve = "no-gamma";
    }
    return c;
  };

  std::vector<std::pair<int, int>> grid;
  for (int k : ks)
    for (int p : ps) grid.emplace_back(k, p);
  std::vector<Cell> cells;
  for (std::size_t begin = 0; begin < grid.size(); begin += static_cast<std::size_t>(cfg.jobs)) {
    std::vector<std::future<Cell>> batch;
    const std::size_t end = std::min(grid.size(), begin + static_cast<std::size_t>(cfg.jobs));
    for (std::size_t i = begin; i < end; ++i)
      batch.push_back(std::async(cfg.jobs > 1 ? std::launch::async : std::launch::deferred, run_cell, grid[i].first,
                                 grid[i].second));
    for (auto& f : batch) cells.push_back(f.get());
  }

  bool all_ok = true;
  out << "   k   p  identities  solve       status\n";
  for (const auto& c : cells) {
    std::ostringstream ids;
    ids << c.passed << '/' << c.identities;
    out << std::right << std::setw(4) << c.k << std::setw(4) << c.p << "  " << std::setw(10) << ids.str() << "  "
        << std::left << std::setw(10) << c.solve << "  " << (c.ok() ? "PASS" : "FAIL") << '\n';
    all_ok = all_ok && c.ok();
  }
  out << (all_ok ? "all cells pass\n" : "verification FAILED\n");
  return all_ok ? kOk : kVerificationFailed;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  validate_run(cfg);
  const EnergyDefinition e = obtain_energy(cfg);
  const std::string path = default_out(cfg.out, "simulate.csv");

  const bool planewave = cfg.preset == "planewave";
  const double omega = static_cast<double>(cfg.wavenumber) * cfg.wavenumber + std::pow(std::abs(cfg.amplitude), 2 * e.p);
  double wave_error = 0.0;
  spectral::TrajectoryOptions options;
  options.fd_steps = cfg.fd_steps;
  options.fd_dt = cfg.fd_dt;
  if (planewave)
    options.on_record = [&](const SpectralState& s, const spectral::BoundSample&) {
      for (int n = -s.n_modes / 2; n < s.n_modes / 2; ++n) {
        const spectral::cplx exact = n == cfg.wavenumber ? std::polar(cfg.amplitude, -omega * s.t) : 0.0;
        wave_error = std::max(wave_error, std::abs(s.at(n) - exact));
      }
    };
  const auto rows = spectral::run_trajectory(e, initial_state(cfg), solver_config(cfg), options);
  write_file_atomically(path, csv_text(rows));

  double max_ratio = 0.0;
  for (const auto& r : rows) max_ratio = std::max(max_ratio, r.bound_ratio);
  json results;
  results["rows"] = rows.size();
  results["max_bound_ratio"] = max_ratio;
  if (planewave) results["planewave_error"] = wave_error;
  write_metadata("simulate", run_flags(cfg, e, path, false), e, path, results);

  out << "simulated k=" << e.k << " p=" << e.p << " to t=" << format_double(rows.back().t) << ", " << rows.size()
      << " rows -> " << path << '\n';
  out << "mass drift " << format_double(std::abs(rows.back().l2 * rows.back().l2 - rows.front().l2 * rows.front().l2) /
                                         (rows.front().l2 * rows.front().l2))
      << ", max bound ratio " << format_double(max_ratio) << '\n';
  if (planewave) {
    out << "plane-wave error " << format_double(wave_error) << '\n';
    if (wave_error > 1e-8) {
      out << "plane-wave error exceeds 1e-8\n";
      return kVerificationFailed;
    }
  }
  return kOk;
}

int cmd_crosscheck(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  validate_run(cfg);
  require(cfg.tol_fd > 0.0 && cfg.tol_decomposition > 0.0, "tolerances must be positive");
  const EnergyDefinition e = obtain_energy(cfg);
  const std::string path = default_out(cfg.out, "crosscheck.csv");

  const auto scfg = solver_config(cfg);
  const spectral::Solver solver(cfg.n_modes, e.p, scfg);
  auto fd_cfg = scfg;
  fd_cfg.dt = cfg.fd_dt;
  SpectralState state = initial_state(cfg);
  const long total = std::lround(cfg.t_end / cfg.dt);
  std::vector<spectral::CrosscheckEntry> entries;
  for (long i = 0;; ++i) {
    if (i % cfg.record_stride == 0 || i == total) {
      state.t = static_cast<double>(i) * cfg.dt;
      entries.push_back(spectral::derivative_crosscheck(e, state, fd_cfg, cfg.fd_steps));
    }
    if (i == total) break;
    solver.step(state);
  }

  std::ostringstream csv;
  csv << "t,E_k,dEk_fd,dEk_exact,dEk_decomposition,rel_fd,rel_decomposition\n";
  double worst_fd = 0.0, worst_dec = 0.0;
  for (const auto& x : entries) {
    csv << format_double(x.t) << ',' << format_double(x.energy) << ',' << format_double(x.fd) << ','
        << format_double(x.exact) << ',' << format_double(x.decomposition) << ',' << format_double(x.rel_fd) << ','
        << format_double(x.rel_decomposition) << '\n';
    worst_fd = std::max(worst_fd, x.rel_fd);
    worst_dec = std::max(worst_dec, x.rel_decomposition);
  }
  write_file_atomically(path, csv.str());
  const bool pass = worst_fd <= cfg.tol_fd && worst_dec <= cfg.tol_decomposition;
  json results;
  results["entries"] = entries.size();
  results["max_rel_fd"] = worst_fd;
  results["max_rel_decomposition"] = worst_dec;
  results["passed"] = pass;
  write_metadata("crosscheck", run_flags(cfg, e, path, true), e, path, results);

  out << "crosscheck k=" << e.k << " p=" << e.p << " over " << entries.size() << " states -> " << path << '\n';
  out << "  max relative error, finite difference vs exact:   " << format_double(worst_fd) << " (tol "
      << format_double(cfg.tol_fd) << ")\n";
  out << "  max relative error, decomposition vs exact:       " << format_double(worst_dec) << " (tol "
      << format_double(cfg.tol_decomposition) << ")\n";
  out << (pass ? "PASS\n" : "FAIL\n");
  return pass ? kOk : kVerificationFailed;
}

int cmd_monitor(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  validate_run(cfg);
  const EnergyDefinition e = obtain_energy(cfg);
  const std::string path = default_out(cfg.out, "monitor.csv");

  std::ostringstream densities;
  densities << 't';
  for (std::size_t i = 0; i < e.F_k.size(); ++i) densities << ",d" << i;
  densities << '\n';
  double max_ratio = 0.0;
  spectral::TrajectoryOptions options;
  options.fd_steps = cfg.fd_steps;
  options.fd_dt = cfg.fd_dt;
  options.on_record = [&](const SpectralState&, const spectral::BoundSample& b) {
    densities << format_double(b.t);
    for (double r : b.density_ratios) densities << ',' << format_double(r);
    densities << '\n';
    max_ratio = std::max(max_ratio, b.ratio);
  };
  const auto rows = spectral::run_trajectory(e, initial_state(cfg), solver_config(cfg), options);
  write_file_atomically(path, csv_text(rows));
  auto dens_path = std::filesystem::path(path);
  dens_path.replace_extension(".densities.csv");
  write_file_atomically(dens_path, densities.str());

  json legend = json::array();
  for (const auto& [m, c] : e.F_k.terms()) legend.push_back(algebra::term_to_text(m, c));
  json results;
  results["rows"] = rows.size();
  results["bound_exponent"] = spectral::bound_exponent(e.k);
  results["max_bound_ratio"] = max_ratio;
  results["final_cubic_remainder"] = rows.back().cubic_remainder;
  results["densities"] = std::move(legend);
  write_metadata("monitor", run_flags(cfg, e, path, false), e, path, results);

  out << "monitored k=" << e.k << " p=" << e.p << " to t=" << format_double(rows.back().t) << " -> " << path << '\n';
  out << "  max |F_k| / ||u||_{H^k}^" << format_double(spectral::bound_exponent(e.k)) << " = "
      << format_double(max_ratio) << '\n';
  if (e.k % 3 == 0) out << "  cubic remainder integral " << format_double(rows.back().cubic_remainder) << '\n';
  return kOk;
}

}  // namespace nlsenergy::cli

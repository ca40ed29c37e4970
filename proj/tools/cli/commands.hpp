#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace nlsenergy::cli {

/// Invalid or inconsistent user input; maps to the usage exit code.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BuildConfig {
  int k = 0;
  int p = 0;
  std::string out;                  // empty: energy_k<k>_p<p>.json
  std::vector<std::string> pinned;  // catalogue entries forced to zero
};

struct VerifyConfig {
  std::string k_range = "2..8";
  std::string p_range = "2..3";
  int jobs = 1;
  bool corrupt_catalogue = false;  // test hook
};

/// Parameters shared by simulate, crosscheck and monitor. Every field is
/// recorded in the run metadata under the command's name, keyed by flag.
struct RunConfig {
  int k = 0;  // 0: taken from the energy document
  int p = 0;
  int n_modes = 64;
  double dt = 1e-3;
  double t_end = 1.0;
  std::uint64_t seed = 0;
  double r_h1 = 1.0;
  double decay = 3.0;
  std::string preset = "random";
  double amplitude = 0.5;  // planewave
  int wavenumber = 1;      // planewave
  int record_stride = 100;
  int fd_steps = 10;
  double fd_dt = 4e-7;  // solver step inside central differences
  std::string nonlinearity = "defocusing";
  std::string energy;
  std::string out;
  double tol_fd = 1e-4;             // crosscheck
  double tol_decomposition = 1e-9;  // crosscheck
};

/// Parses "a..b", "a,b,c" or "a".
std::vector<int> parse_int_range(const std::string& text);

int cmd_build(const BuildConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_crosscheck(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_monitor(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace nlsenergy::cli

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

namespace eigenbath {

enum class Family {
  gue,
  structured_degenerate,
  structured_equidistant,
  spin_star,
  spin_ring,
  spin_inhomogeneous,
};

enum class Task { lambda_dist, evolve, sweep, gue_pdf, report };

Family family_from_string(const std::string& name);   // throws ConfigError
std::string to_string(Family family);
Task task_from_string(const std::string& name);       // throws ConfigError
std::string to_string(Task task);

bool is_spin_family(Family family);

// One resolved run.  Defaults are overridden by config-file keys, which are
// overridden by command-line flags; the seed additionally falls back to the
// EIGENBATH_SEED environment variable before its built-in default.
struct RunConfig {
  Family family = Family::gue;
  Task task = Task::report;

  // Band parameters: abstract families take (g, g'); spin families take
  // (n_env, band_k) and derive (g, g') from the band pair.
  int g = 0;
  int g_prime = 0;
  int n_env = 0;
  int band_k = 0;

  // Spectrum parameters.
  double delta_eps = 0.0;      // band width (equidistant)
  double detuning = 0.0;       // delta_S - delta_C (structured)
  double zeeman_center = 1.0;
  double zeeman_spread = 0.0;  // spin_inhomogeneous

  // Coupling parameters.
  double scale = 1.0;              // GUE/interaction scale, or lambda_int
  std::string coupling_kind = "random";  // spin families: random | xx_plus_yy
  std::string intra_kind = "xx";   // spin_ring: xx | xx_plus_yy | heisenberg
  double intra_strength = 1.0;

  // When > 0, every instance's environment spectrum is rescaled so its
  // relative strength V_R equals this value; the standard way to pin the
  // otherwise free coupling magnitude of the spin families.
  double vr_norm = 0.0;

  int samples = 1;
  std::uint64_t seed = 1;
  int bins = 50;
  int jobs = 1;

  // Dynamics grid; t_max = 0 derives the horizon from the spectrum.
  int time_samples = 2000;
  double t_max = 0.0;

  // Sweep grid over the spectrum-strength axis.
  double sweep_max = 5.0;
  int sweep_points = 21;
  std::string sweep_axis = "vr";  // "vr" | "scale"

  // Analytic-density table resolution (gue-pdf task).
  int pdf_points = 1001;

  std::string out;  // CSV/record path; the SVG derives from it unless set
  std::string svg;
  // When set, the first ensemble member's Hamiltonian is also written to
  // this path (row-major re,im pairs).
  std::string dump_matrix;
};

using KeyValues = std::map<std::string, std::string>;

// `key = value` lines, '#' comments, optional [section] headers flattened
// to "section.key".  Throws ConfigError on syntax errors, IoError on
// unreadable files.
KeyValues parse_config_file(const std::filesystem::path& path);

// Applies file values then flag values onto the defaults and validates.
// `env_seed` is the raw EIGENBATH_SEED value, empty when unset.  Throws
// ConfigError naming the offending field, or ResourceError for n_env > 16.
RunConfig make_run_config(Task task, const KeyValues& file_values,
                          const KeyValues& flag_values,
                          const std::string& env_seed = {});

}  // namespace eigenbath

#include "eigenbath/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>

#include "eigenbath/errors.hpp"
#include "eigenbath/spinbath.hpp"

namespace eigenbath {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

long long parse_int(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const long long v = std::strtoll(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0')
    throw ConfigError("field '" + key + "': expected an integer, got '" +
                      value + "'");
  return v;
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0' || value.find('-') != std::string::npos)
    throw ConfigError("field '" + key + "': expected an unsigned integer, got '" +
                      value + "'");
  return v;
}

double parse_real(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0')
    throw ConfigError("field '" + key + "': expected a number, got '" + value +
                      "'");
  return v;
}

void apply_values(RunConfig& cfg, const KeyValues& values) {
  for (const auto& [key, value] : values) {
    if (key == "family") cfg.family = family_from_string(value);
    else if (key == "task") cfg.task = task_from_string(value);
    else if (key == "g") cfg.g = static_cast<int>(parse_int(key, value));
    else if (key == "g_prime") cfg.g_prime = static_cast<int>(parse_int(key, value));
    else if (key == "n_env") cfg.n_env = static_cast<int>(parse_int(key, value));
    else if (key == "band_k") cfg.band_k = static_cast<int>(parse_int(key, value));
    else if (key == "delta_eps") cfg.delta_eps = parse_real(key, value);
    else if (key == "detuning") cfg.detuning = parse_real(key, value);
    else if (key == "zeeman_center") cfg.zeeman_center = parse_real(key, value);
    else if (key == "zeeman_spread") cfg.zeeman_spread = parse_real(key, value);
    else if (key == "scale") cfg.scale = parse_real(key, value);
    else if (key == "coupling_kind") cfg.coupling_kind = value;
    else if (key == "intra_kind") cfg.intra_kind = value;
    else if (key == "intra_strength") cfg.intra_strength = parse_real(key, value);
    else if (key == "vr_norm") cfg.vr_norm = parse_real(key, value);
    else if (key == "samples") cfg.samples = static_cast<int>(parse_int(key, value));
    else if (key == "seed") cfg.seed = parse_uint(key, value);
    else if (key == "bins") cfg.bins = static_cast<int>(parse_int(key, value));
    else if (key == "jobs") cfg.jobs = static_cast<int>(parse_int(key, value));
    else if (key == "time_samples") cfg.time_samples = static_cast<int>(parse_int(key, value));
    else if (key == "t_max") cfg.t_max = parse_real(key, value);
    else if (key == "sweep_max") cfg.sweep_max = parse_real(key, value);
    else if (key == "sweep_points") cfg.sweep_points = static_cast<int>(parse_int(key, value));
    else if (key == "sweep_axis") cfg.sweep_axis = value;
    else if (key == "pdf_points") cfg.pdf_points = static_cast<int>(parse_int(key, value));
    else if (key == "out") cfg.out = value;
    else if (key == "svg") cfg.svg = value;
    else if (key == "dump_matrix") cfg.dump_matrix = value;
    else throw ConfigError("unknown field '" + key + "'");
  }
}

void require(bool condition, const std::string& message) {
  if (!condition) throw ConfigError(message);
}

}  // namespace

Family family_from_string(const std::string& name) {
  if (name == "gue") return Family::gue;
  if (name == "structured_degenerate") return Family::structured_degenerate;
  if (name == "structured_equidistant") return Family::structured_equidistant;
  if (name == "spin_star") return Family::spin_star;
  if (name == "spin_ring") return Family::spin_ring;
  if (name == "spin_inhomogeneous") return Family::spin_inhomogeneous;
  throw ConfigError("field 'family': unknown family '" + name + "'");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::gue: return "gue";
    case Family::structured_degenerate: return "structured_degenerate";
    case Family::structured_equidistant: return "structured_equidistant";
    case Family::spin_star: return "spin_star";
    case Family::spin_ring: return "spin_ring";
    case Family::spin_inhomogeneous: return "spin_inhomogeneous";
  }
  return "?";
}

Task task_from_string(const std::string& name) {
  if (name == "lambda-dist" || name == "lambda_dist") return Task::lambda_dist;
  if (name == "evolve") return Task::evolve;
  if (name == "sweep") return Task::sweep;
  if (name == "gue-pdf" || name == "gue_pdf") return Task::gue_pdf;
  if (name == "report") return Task::report;
  throw ConfigError("field 'task': unknown task '" + name + "'");
}

std::string to_string(Task task) {
  switch (task) {
    case Task::lambda_dist: return "lambda-dist";
    case Task::evolve: return "evolve";
    case Task::sweep: return "sweep";
    case Task::gue_pdf: return "gue-pdf";
    case Task::report: return "report";
  }
  return "?";
}

bool is_spin_family(Family family) {
  return family == Family::spin_star || family == Family::spin_ring ||
         family == Family::spin_inhomogeneous;
}

KeyValues parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path.string());
  KeyValues values;
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                          ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                        ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                        ": empty key");
    if (!section.empty()) key = section + "." + key;
    values[key] = value;
  }
  return values;
}

RunConfig make_run_config(Task task, const KeyValues& file_values,
                          const KeyValues& flag_values,
                          const std::string& env_seed) {
  RunConfig cfg;
  cfg.task = task;

  // Sections exist for readability only; strip them to canonical keys.
  KeyValues flattened;
  for (const auto& [key, value] : file_values) {
    const auto dot = key.rfind('.');
    flattened[dot == std::string::npos ? key : key.substr(dot + 1)] = value;
  }
  const bool seed_given =
      flattened.count("seed") > 0 || flag_values.count("seed") > 0;
  apply_values(cfg, flattened);
  apply_values(cfg, flag_values);
  cfg.task = task;  // the subcommand is authoritative
  if (!seed_given && !env_seed.empty())
    cfg.seed = parse_uint("EIGENBATH_SEED", env_seed);

  // Family-specific required fields.
  if (is_spin_family(cfg.family)) {
    require(cfg.n_env > 0, "field 'n_env' is required for spin families");
    if (cfg.n_env > 16)
      throw ResourceError("field 'n_env': baths beyond 16 spins are not supported");
    require(cfg.band_k >= 0 && cfg.band_k <= cfg.n_env - 1,
            "field 'band_k' must lie in [0, n_env-1]");
    if (cfg.family == Family::spin_inhomogeneous)
      require(cfg.zeeman_spread > 0.0,
              "field 'zeeman_spread' must be > 0 for spin_inhomogeneous");
    require(cfg.zeeman_center > 0.0, "field 'zeeman_center' must be > 0");
    require(cfg.coupling_kind == "random" || cfg.coupling_kind == "xx_plus_yy",
            "field 'coupling_kind' must be random or xx_plus_yy");
    if (cfg.family == Family::spin_ring) {
      require(cfg.n_env >= 2, "field 'n_env': a ring needs at least 2 spins");
      require(cfg.intra_kind == "xx" || cfg.intra_kind == "xx_plus_yy" ||
                  cfg.intra_kind == "heisenberg",
              "field 'intra_kind' must be xx, xx_plus_yy or heisenberg");
      require(cfg.intra_strength >= 0.0,
              "field 'intra_strength' must be >= 0");
    }
  } else {
    require(cfg.g > 0, "field 'g' is required for abstract families");
    require(cfg.g_prime > 0, "field 'g_prime' is required for abstract families");
    if (cfg.family == Family::structured_equidistant)
      require(cfg.delta_eps > 0.0,
              "field 'delta_eps' must be > 0 for structured_equidistant");
  }
  require(cfg.scale > 0.0, "field 'scale' must be > 0");
  require(cfg.vr_norm >= 0.0, "field 'vr_norm' must be >= 0");
  require(cfg.samples >= 1, "field 'samples' must be >= 1");
  require(cfg.bins >= 1, "field 'bins' must be >= 1");
  require(cfg.jobs >= 1, "field 'jobs' must be >= 1");
  require(cfg.time_samples >= 2, "field 'time_samples' must be >= 2");
  require(cfg.t_max >= 0.0, "field 't_max' must be >= 0");
  require(cfg.sweep_max > 0.0, "field 'sweep_max' must be > 0");
  require(cfg.sweep_points >= 2, "field 'sweep_points' must be >= 2");
  require(cfg.sweep_axis == "vr" || cfg.sweep_axis == "scale",
          "field 'sweep_axis' must be vr or scale");
  require(cfg.pdf_points >= 2, "field 'pdf_points' must be >= 2");
  if (cfg.task != Task::report)
    require(!cfg.out.empty(), "field 'out' is required for this task");
  if (cfg.task == Task::gue_pdf)
    require(cfg.family == Family::gue,
            "field 'family': gue-pdf only applies to the gue family");
  return cfg;
}

}  // namespace eigenbath

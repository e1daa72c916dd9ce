// eigenbath: builds band-pair Hamiltonians for a two-level system coupled to
// a banded environment, computes eigenvector-inversion statistics, predicts
// the quasi-equilibrium state, and evolves the exact dynamics.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "eigenbath/config.hpp"
#include "eigenbath/errors.hpp"
#include "eigenbath/run.hpp"

namespace {

struct TaskCommand {
  CLI::App* app = nullptr;
  eigenbath::Task task;
  std::map<std::string, std::string> storage;
  std::vector<std::pair<std::string, CLI::Option*>> options;
};

void add_common_options(TaskCommand& cmd) {
  auto opt = [&](const std::string& flag, const std::string& key,
                 const std::string& help) {
    cmd.options.emplace_back(key,
                             cmd.app->add_option(flag, cmd.storage[key], help));
  };
  cmd.app->add_option("--config", cmd.storage["__config"],
                      "configuration file (key = value lines)");
  opt("--family", "family",
      "gue | structured_degenerate | structured_equidistant | spin_star | "
      "spin_ring | spin_inhomogeneous");
  opt("--g", "g", "lower-band degeneracy (abstract families)");
  opt("--g-prime", "g_prime", "upper-band degeneracy (abstract families)");
  opt("--n-env", "n_env", "environment spin count (spin families)");
  opt("--band-k", "band_k", "lower band index of the pair (k, k+1)");
  opt("--samples", "samples", "ensemble size");
  opt("--seed", "seed", "base seed (EIGENBATH_SEED supplies the default)");
  opt("--scale", "scale", "interaction/ensemble scale");
  opt("--delta-eps", "delta_eps", "band width (structured_equidistant)");
  opt("--detuning", "detuning", "system-environment detuning");
  opt("--zeeman-center", "zeeman_center", "mean environment splitting");
  opt("--zeeman-spread", "zeeman_spread",
      "splitting spread (spin_inhomogeneous)");
  opt("--coupling-kind", "coupling_kind",
      "central-spin coupling: random | xx_plus_yy");
  opt("--intra-kind", "intra_kind", "ring coupling: xx | xx_plus_yy | heisenberg");
  opt("--intra-strength", "intra_strength", "ring coupling strength");
  opt("--vr-norm", "vr_norm",
      "rescale each instance's environment spectrum to this V_R (0 = off)");
  opt("--bins", "bins", "histogram bins");
  opt("--time-samples", "time_samples", "trajectory sample count");
  opt("--t-max", "t_max", "trajectory horizon (0 = derive from spectrum)");
  opt("--sweep-max", "sweep_max", "upper end of the sweep grid");
  opt("--sweep-points", "sweep_points", "sweep grid size");
  opt("--sweep-axis", "sweep_axis", "sweep grid meaning: vr | scale");
  opt("--pdf-points", "pdf_points", "analytic table resolution");
  opt("--jobs", "jobs", "worker threads for ensembles and sweeps");
  opt("--out", "out", "output CSV/record path");
  opt("--svg", "svg", "output SVG path (default: out with .svg)");
  opt("--dump-matrix", "dump_matrix",
      "also write the first instance's Hamiltonian (row-major re,im pairs)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Eigenvector-inversion statistics and relaxation dynamics of a "
      "two-level system coupled to a banded environment"};
  app.require_subcommand(1);

  std::vector<TaskCommand> commands;
  commands.reserve(5);
  const std::pair<const char*, eigenbath::Task> tasks[] = {
      {"lambda-dist", eigenbath::Task::lambda_dist},
      {"evolve", eigenbath::Task::evolve},
      {"sweep", eigenbath::Task::sweep},
      {"gue-pdf", eigenbath::Task::gue_pdf},
      {"report", eigenbath::Task::report},
  };
  const char* descriptions[] = {
      "histogram of eigenvector inversions with the analytic reference curve",
      "Bloch-z trajectory of the central system",
      "inversion variance against the relative environment-spectrum strength",
      "analytic inversion density table",
      "summary record: mean, variance, canonical and predicted inversion, V_R",
  };
  for (std::size_t i = 0; i < 5; ++i) {
    TaskCommand cmd;
    cmd.app = app.add_subcommand(tasks[i].first, descriptions[i]);
    cmd.task = tasks[i].second;
    commands.push_back(std::move(cmd));
    add_common_options(commands.back());
  }

  CLI11_PARSE(app, argc, argv);

  const TaskCommand* active = nullptr;
  for (const TaskCommand& cmd : commands)
    if (cmd.app->parsed()) active = &cmd;
  if (!active) {
    std::cerr << "config error: no task selected\n";
    return 2;
  }

  try {
    eigenbath::KeyValues file_values;
    const auto config_it = active->storage.find("__config");
    if (config_it != active->storage.end() && !config_it->second.empty())
      file_values = eigenbath::parse_config_file(config_it->second);

    eigenbath::KeyValues flag_values;
    for (const auto& [key, option] : active->options)
      if (option->count() > 0) flag_values[key] = active->storage.at(key);

    const char* env_seed = std::getenv("EIGENBATH_SEED");
    const eigenbath::RunConfig cfg = eigenbath::make_run_config(
        active->task, file_values, flag_values, env_seed ? env_seed : "");
    eigenbath::run(cfg);
    return 0;
  } catch (const eigenbath::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const eigenbath::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return 3;
  } catch (const eigenbath::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

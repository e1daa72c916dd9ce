#include "eigenbath/run.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <vector>

#include "eigenbath/analysis.hpp"
#include "eigenbath/csv.hpp"
#include "eigenbath/dynamics.hpp"
#include "eigenbath/ensembles.hpp"
#include "eigenbath/errors.hpp"
#include "eigenbath/parallel.hpp"
#include "eigenbath/rng.hpp"
#include "eigenbath/spinbath.hpp"
#include "eigenbath/svg.hpp"

namespace eigenbath {

namespace {

IntraKind intra_kind_from_string(const std::string& name) {
  if (name == "xx") return IntraKind::xx;
  if (name == "xx_plus_yy") return IntraKind::xx_plus_yy;
  if (name == "heisenberg") return IntraKind::heisenberg;
  throw ConfigError("field 'intra_kind': unknown kind '" + name + "'");
}

SpinBathSpec spin_spec_for(const RunConfig& cfg, std::uint64_t member_seed) {
  SpinBathSpec spec;
  spec.n_env = cfg.n_env;
  spec.central_splitting = cfg.zeeman_center + cfg.detuning;
  if (cfg.coupling_kind == "xx_plus_yy") {
    Eigen::Matrix3d gamma = Eigen::Matrix3d::Zero();
    gamma(0, 0) = 1.0;
    gamma(1, 1) = 1.0;
    spec.coupling_tensors.assign(static_cast<std::size_t>(cfg.n_env), gamma);
  } else {
    spec.coupling_tensors =
        sample_star_couplings(cfg.n_env, 1.0, derive_seed(member_seed, 1));
  }
  spec.coupling_strength = cfg.scale;
  spec.band_k = cfg.band_k;
  if (cfg.family == Family::spin_inhomogeneous)
    spec.zeeman = inhomogeneous_zeeman(cfg.n_env, cfg.zeeman_center,
                                       cfg.zeeman_spread,
                                       derive_seed(member_seed, 2));
  else
    spec.zeeman.assign(static_cast<std::size_t>(cfg.n_env), cfg.zeeman_center);
  if (cfg.family == Family::spin_ring) {
    spec.topology = Topology::ring;
    spec.intra_kind = intra_kind_from_string(cfg.intra_kind);
    spec.intra_strength = cfg.intra_strength;
  }
  return spec;
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of nothing");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 ? values[n / 2]
               : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    xs[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return xs;
}

std::vector<std::string> run_metadata(const RunConfig& cfg,
                                      const BandPair& pair) {
  std::vector<std::string> meta;
  meta.push_back("task=" + to_string(cfg.task));
  meta.push_back("family=" + to_string(cfg.family));
  meta.push_back("g=" + std::to_string(pair.g));
  meta.push_back("g_prime=" + std::to_string(pair.g_prime));
  if (is_spin_family(cfg.family)) {
    meta.push_back("n_env=" + std::to_string(cfg.n_env));
    meta.push_back("band_k=" + std::to_string(cfg.band_k));
    meta.push_back("coupling_kind=" + cfg.coupling_kind);
    meta.push_back("zeeman_center=" + format_double(cfg.zeeman_center));
    if (cfg.family == Family::spin_inhomogeneous)
      meta.push_back("zeeman_spread=" + format_double(cfg.zeeman_spread));
    if (cfg.family == Family::spin_ring) {
      meta.push_back("intra_kind=" + cfg.intra_kind);
      meta.push_back("intra_strength=" + format_double(cfg.intra_strength));
    }
  }
  if (cfg.family == Family::structured_equidistant)
    meta.push_back("delta_eps=" + format_double(cfg.delta_eps));
  if (cfg.family == Family::structured_degenerate ||
      cfg.family == Family::structured_equidistant ||
      is_spin_family(cfg.family))
    meta.push_back("detuning=" + format_double(cfg.detuning));
  meta.push_back("scale=" + format_double(cfg.scale));
  if (cfg.vr_norm > 0.0)
    meta.push_back("vr_norm=" + format_double(cfg.vr_norm));
  meta.push_back("samples=" + std::to_string(cfg.samples));
  meta.push_back("seed=" + std::to_string(cfg.seed));
  return meta;
}

std::filesystem::path svg_path(const RunConfig& cfg) {
  if (!cfg.svg.empty()) return cfg.svg;
  std::filesystem::path p(cfg.out);
  p.replace_extension(".svg");
  return p;
}

std::vector<EigenSystem> decompose_ensemble(const RunConfig& cfg) {
  std::vector<EigenSystem> systems(static_cast<std::size_t>(cfg.samples));
  parallel_for(systems.size(), cfg.jobs, [&](std::size_t i) {
    const ModelInstance inst = build_instance(cfg, derive_seed(cfg.seed, i));
    systems[i] = eigendecompose(inst.hamiltonian, inst.basis);
  });
  return systems;
}

void run_lambda_dist(const RunConfig& cfg) {
  const auto systems = decompose_ensemble(cfg);
  const LambdaDistribution dist = lambda_distribution(systems, cfg.bins);
  const BandPair& pair = dist.pair;
  const double bin_width = 2.0 / cfg.bins;
  const double n_samples = static_cast<double>(dist.samples.size());

  CsvTable table;
  table.metadata = run_metadata(cfg, pair);
  table.metadata.push_back("bins=" + std::to_string(cfg.bins));
  table.metadata.push_back("mean=" + format_double(dist.mean));
  table.metadata.push_back("variance=" + format_double(dist.variance));
  table.columns = {"bin_center", "count", "analytic_pdf"};
  for (int b = 0; b < cfg.bins; ++b) {
    const double center = 0.5 * (dist.bin_edges[b] + dist.bin_edges[b + 1]);
    table.rows.push_back({center,
                          static_cast<double>(dist.counts[b]),
                          gue_lambda_pdf(center, pair.g, pair.g_prime)});
  }
  write_csv(cfg.out, table);

  Plot plot;
  plot.title = to_string(cfg.family) + " inversion distribution (g=" +
               std::to_string(pair.g) + ", g'=" + std::to_string(pair.g_prime) +
               ")";
  plot.x_label = "lambda";
  plot.y_label = "density";
  PlotSeries bars;
  bars.kind = PlotSeries::Kind::bars;
  bars.bar_width = bin_width;
  PlotSeries reference;
  reference.color = "#c23b22";
  for (int b = 0; b < cfg.bins; ++b) {
    bars.x.push_back(table.rows[b][0]);
    bars.y.push_back(table.rows[b][1] / (n_samples * bin_width));
  }
  for (double x : linspace(-1.0, 1.0, 401)) {
    reference.x.push_back(x);
    reference.y.push_back(gue_lambda_pdf(x, pair.g, pair.g_prime));
  }
  plot.series = {bars, reference};
  write_svg(svg_path(cfg), plot);
}

void run_evolve(const RunConfig& cfg) {
  const ModelInstance inst = build_instance(cfg, derive_seed(cfg.seed, 0));
  const EigenSystem eig = eigendecompose(inst.hamiltonian, inst.basis);
  const Eigen::MatrixXcd rho0 = initial_mixed_band_state(inst.basis);
  const std::vector<double> times =
      cfg.t_max > 0.0 ? linspace(0.0, cfg.t_max, cfg.time_samples)
                      : default_time_grid(eig, cfg.time_samples);
  const Trajectory traj = evolve_bloch_z(eig, rho0, times);

  const BandPair& pair = inst.basis.pair;
  CsvTable table;
  table.metadata = run_metadata(cfg, pair);
  table.metadata.push_back(
      "canonical_inversion=" +
      format_double(canonical_inversion(pair.g, pair.g_prime)));
  table.columns = {"t", "bloch_z", "running_average"};
  for (std::size_t i = 0; i < traj.times.size(); ++i)
    table.rows.push_back(
        {traj.times[i], traj.bloch_z[i], traj.running_average[i]});
  write_csv(cfg.out, table);

  Plot plot;
  plot.title = to_string(cfg.family) + " relaxation (g=" +
               std::to_string(pair.g) + ", g'=" + std::to_string(pair.g_prime) +
               ")";
  plot.x_label = "t";
  plot.y_label = "<sigma_z>";
  PlotSeries signal;
  signal.x = traj.times;
  signal.y = traj.bloch_z;
  PlotSeries average;
  average.x = traj.times;
  average.y = traj.running_average;
  average.color = "#2c8a4b";
  PlotSeries canonical;
  canonical.x = {traj.times.front(), traj.times.back()};
  const double can = canonical_inversion(pair.g, pair.g_prime);
  canonical.y = {can, can};
  canonical.color = "#000000";
  plot.series = {signal, average, canonical};
  write_svg(svg_path(cfg), plot);
}

void run_sweep(const RunConfig& cfg) {
  const std::vector<double> grid = linspace(0.0, cfg.sweep_max, cfg.sweep_points);
  std::vector<std::vector<SweepPoint>> curves(
      static_cast<std::size_t>(cfg.samples));
  std::vector<BandPair> pairs(curves.size());
  parallel_for(curves.size(), cfg.jobs, [&](std::size_t i) {
    const ModelInstance inst = build_instance(cfg, derive_seed(cfg.seed, i));
    pairs[i] = inst.basis.pair;
    std::vector<double> scales = grid;
    if (cfg.sweep_axis == "vr") {
      // Normalize so the grid addresses the relative strength directly.
      const double base =
          relative_strength(inst.hamiltonian, inst.basis.split());
      if (base <= 0.0)
        throw std::domain_error(
            "sweep: base instance has no environment spectrum; "
            "use sweep_axis=scale");
      for (double& s : scales) s /= base;
    }
    curves[i] = sweep_variance_vs_vr(inst.hamiltonian, inst.basis,
                                     std::move(scales));
  });

  const BandPair& pair = pairs.front();
  CsvTable table;
  table.metadata = run_metadata(cfg, pair);
  table.metadata.push_back("sweep_axis=" + cfg.sweep_axis);
  table.columns = {"s", "v_r", "variance"};
  for (int p = 0; p < cfg.sweep_points; ++p) {
    std::vector<double> ss, vrs, vars;
    for (const auto& curve : curves) {
      ss.push_back(curve[static_cast<std::size_t>(p)].scale);
      vrs.push_back(curve[static_cast<std::size_t>(p)].relative_strength);
      vars.push_back(curve[static_cast<std::size_t>(p)].variance);
    }
    table.rows.push_back({median(ss), median(vrs), median(vars)});
  }
  write_csv(cfg.out, table);

  Plot plot;
  plot.title = to_string(cfg.family) + " variance vs relative strength";
  plot.x_label = "V_R";
  plot.y_label = "var(lambda)";
  PlotSeries curve;
  for (const auto& row : table.rows) {
    curve.x.push_back(row[1]);
    curve.y.push_back(row[2]);
  }
  plot.series = {curve};
  write_svg(svg_path(cfg), plot);
}

void run_gue_pdf(const RunConfig& cfg) {
  CsvTable table;
  const BandPair pair(cfg.g, cfg.g_prime);
  table.metadata = run_metadata(cfg, pair);
  table.columns = {"lambda", "pdf"};
  for (double x : linspace(-1.0, 1.0, cfg.pdf_points))
    table.rows.push_back({x, gue_lambda_pdf(x, cfg.g, cfg.g_prime)});
  write_csv(cfg.out, table);
}

void run_report(const RunConfig& cfg) {
  std::vector<EigenSystem> systems(static_cast<std::size_t>(cfg.samples));
  std::vector<double> strengths(systems.size());
  parallel_for(systems.size(), cfg.jobs, [&](std::size_t i) {
    const ModelInstance inst = build_instance(cfg, derive_seed(cfg.seed, i));
    systems[i] = eigendecompose(inst.hamiltonian, inst.basis);
    try {
      strengths[i] = relative_strength(inst.hamiltonian, inst.basis.split());
    } catch (const std::domain_error&) {
      strengths[i] = std::numeric_limits<double>::quiet_NaN();
    }
  });
  const LambdaDistribution dist = lambda_distribution(systems, cfg.bins);
  const BandPair& pair = dist.pair;

  std::vector<std::string> lines = run_metadata(cfg, pair);
  lines.push_back("mean=" + format_double(dist.mean));
  lines.push_back("variance=" + format_double(dist.variance));
  lines.push_back("canonical_inversion=" +
                  format_double(canonical_inversion(pair.g, pair.g_prime)));
  lines.push_back("predicted_inversion=" +
                  format_double(predicted_equilibrium_inversion(
                      pair.g, pair.g_prime, dist.variance)));
  std::vector<double> valid_strengths;
  for (double v : strengths)
    if (!std::isnan(v)) valid_strengths.push_back(v);
  if (!valid_strengths.empty())
    lines.push_back("v_r=" + format_double(median(valid_strengths)));

  for (const auto& line : lines) std::cout << line << '\n';
  if (!cfg.out.empty()) {
    const std::filesystem::path path(cfg.out);
    if (path.has_parent_path())
      std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + cfg.out);
    for (const auto& line : lines) out << line << '\n';
    if (!out) throw IoError("write failed: " + cfg.out);
  }
}

}  // namespace

namespace {

ModelInstance build_raw_instance(const RunConfig& cfg,
                                 std::uint64_t member_seed) {
  switch (cfg.family) {
    case Family::gue: {
      const BandPair pair(cfg.g, cfg.g_prime);
      ModelInstance inst;
      inst.basis = build_cross_basis(pair);
      inst.hamiltonian = sample_gue(pair.dim(), cfg.scale, member_seed);
      return inst;
    }
    case Family::structured_degenerate:
    case Family::structured_equidistant: {
      const bool equidistant = cfg.family == Family::structured_equidistant;
      const BandPair pair(cfg.g, cfg.g_prime, 1.0 + cfg.detuning, 1.0,
                          equidistant ? cfg.delta_eps : 0.0);
      const EnvSpectrum spectrum = equidistant
                                       ? EnvSpectrum::equidistant(cfg.delta_eps)
                                       : EnvSpectrum::degenerate();
      ModelInstance inst;
      inst.basis = build_cross_basis(pair);
      inst.hamiltonian = build_structured(
          pair, spectrum,
          sample_interaction_block(cfg.g, cfg.g_prime, cfg.scale, member_seed));
      return inst;
    }
    case Family::spin_star:
    case Family::spin_ring:
    case Family::spin_inhomogeneous: {
      const SpinBathSpec spec = spin_spec_for(cfg, member_seed);
      ProjectedHamiltonian proj = project_to_cross_subspace(spec, cfg.band_k);
      return ModelInstance{std::move(proj.matrix), std::move(proj.basis)};
    }
  }
  throw std::logic_error("build_instance: unknown family");
}

}  // namespace

ModelInstance build_instance(const RunConfig& cfg, std::uint64_t member_seed) {
  ModelInstance inst = build_raw_instance(cfg, member_seed);
  if (cfg.vr_norm > 0.0) {
    const double base = relative_strength(inst.hamiltonian, inst.basis.split());
    if (base <= 0.0)
      throw std::domain_error(
          "vr_norm: instance has no environment spectrum to rescale");
    inst.hamiltonian = scale_env_spectrum(inst.hamiltonian, cfg.vr_norm / base,
                                          inst.basis.split());
  }
  return inst;
}

void run(const RunConfig& cfg) {
  if (!cfg.dump_matrix.empty())
    write_matrix_csv(cfg.dump_matrix,
                     build_instance(cfg, derive_seed(cfg.seed, 0)).hamiltonian);
  switch (cfg.task) {
    case Task::lambda_dist: run_lambda_dist(cfg); return;
    case Task::evolve: run_evolve(cfg); return;
    case Task::sweep: run_sweep(cfg); return;
    case Task::gue_pdf: run_gue_pdf(cfg); return;
    case Task::report: run_report(cfg); return;
  }
  throw std::logic_error("run: unknown task");
}

}  // namespace eigenbath

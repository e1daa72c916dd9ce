#include <doctest.h>

#include <cmath>
#include <vector>

#include "eigenbath/analysis.hpp"
#include "eigenbath/dynamics.hpp"
#include "eigenbath/ensembles.hpp"
#include "eigenbath/rng.hpp"
#include "eigenbath/run.hpp"
#include "eigenbath/spinbath.hpp"

using namespace eigenbath;

namespace {

double spectrum_variance(const EigenSystem& sys) {
  const double mean = sys.lambdas.mean();
  return (sys.lambdas.array() - mean).square().mean();
}

}  // namespace

TEST_CASE("initial_mixed_band_state") {
  const CrossStateBasis minimal = build_cross_basis(BandPair(1, 2));
  const Eigen::MatrixXcd rho = initial_mixed_band_state(minimal);
  CHECK(rho(0, 0) == std::complex<double>(0.0));
  CHECK(rho(1, 1) == std::complex<double>(0.0));
  CHECK(rho(2, 2) == std::complex<double>(1.0));

  const CrossStateBasis big = build_cross_basis(BandPair(91, 364));
  const Eigen::MatrixXcd rho_big = initial_mixed_band_state(big);
  for (int i = 364; i < 455; ++i)
    CHECK(rho_big(i, i).real() == doctest::Approx(1.0 / 91.0).epsilon(1e-15));
  CHECK(std::abs(rho_big.trace() - std::complex<double>(1.0)) < 1e-12);
}

TEST_CASE("evolve_bloch_z") {
  const CrossStateBasis basis = build_cross_basis(BandPair(4, 9));
  const Eigen::MatrixXcd rho0 = initial_mixed_band_state(basis);

  SUBCASE("starts fully inverted") {
    const EigenSystem sys = eigendecompose(sample_gue(13, 1.0, 3), basis);
    const std::vector<double> times{0.0, 0.5, 1.0};
    const Trajectory traj = evolve_bloch_z(sys, rho0, times);
    CHECK(std::abs(traj.bloch_z[0] - 1.0) < 1e-12);
    for (double b : traj.bloch_z) {
      CHECK(b <= 1.0 + 1e-12);
      CHECK(b >= -1.0 - 1e-12);
    }
  }

  SUBCASE("zero Hamiltonian is stationary") {
    const EigenSystem sys =
        eigendecompose(Eigen::MatrixXcd::Zero(13, 13), basis);
    const std::vector<double> times{0.0, 2.0, 17.0, 123.0};
    const Trajectory traj = evolve_bloch_z(sys, rho0, times);
    for (double b : traj.bloch_z) CHECK(b == doctest::Approx(1.0).epsilon(1e-12));
    for (double a : traj.running_average)
      CHECK(a == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("rejects disordered times and bad states") {
    const EigenSystem sys = eigendecompose(sample_gue(13, 1.0, 3), basis);
    const std::vector<double> backwards{1.0, 0.5};
    CHECK_THROWS_AS(evolve_bloch_z(sys, rho0, backwards),
                    std::invalid_argument);
    CHECK_THROWS_AS(evolve_bloch_z(sys, 2.0 * rho0, std::vector<double>{0.0, 1.0}),
                    std::invalid_argument);
  }
}

TEST_CASE("unitary invariants of the evolved state") {
  const CrossStateBasis basis = build_cross_basis(BandPair(3, 8));
  const EigenSystem sys = eigendecompose(sample_gue(11, 1.0, 9), basis);
  const Eigen::MatrixXcd rho0 = initial_mixed_band_state(basis);
  const double purity0 = (rho0 * rho0).trace().real();
  for (double t : {0.0, 0.7, 3.1, 42.0}) {
    const Eigen::MatrixXcd rho_t = evolve_density(sys, rho0, t);
    CHECK(std::abs(rho_t.trace() - std::complex<double>(1.0)) < 1e-10);
    CHECK(hermiticity_residual(rho_t) < 1e-10);
    CHECK(std::abs((rho_t * rho_t).trace().real() - purity0) < 1e-10);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho_t);
    CHECK(solver.eigenvalues().minCoeff() > -1e-10);
  }
}

TEST_CASE("diagonal_ensemble_inversion") {
  SUBCASE("pure eigenstate returns its own inversion") {
    const CrossStateBasis basis = build_cross_basis(BandPair(4, 9));
    const EigenSystem sys = eigendecompose(sample_gue(13, 1.0, 21), basis);
    for (int e : {0, 5, 12}) {
      const Eigen::MatrixXcd rho =
          sys.vectors.col(e) * sys.vectors.col(e).adjoint();
      CHECK(std::abs(diagonal_ensemble_inversion(sys, rho) - sys.lambdas(e)) <
            1e-12);
    }
  }

  SUBCASE("fully degenerate spectrum keeps the initial inversion") {
    const CrossStateBasis basis = build_cross_basis(BandPair(4, 9));
    const EigenSystem sys =
        eigendecompose(Eigen::MatrixXcd::Zero(13, 13), basis);
    const Eigen::MatrixXcd rho0 = initial_mixed_band_state(basis);
    CHECK(std::abs(diagonal_ensemble_inversion(sys, rho0) - 1.0) < 1e-12);
  }

  SUBCASE("agrees with the variance prediction for nondegenerate spectra") {
    // GUE
    {
      const CrossStateBasis basis = build_cross_basis(BandPair(10, 25));
      const EigenSystem sys = eigendecompose(sample_gue(35, 1.0, 4), basis);
      const double direct =
          diagonal_ensemble_inversion(sys, initial_mixed_band_state(basis));
      const double predicted = predicted_equilibrium_inversion(
          10, 25, spectrum_variance(sys));
      CHECK(std::abs(direct - predicted) < 1e-10);
    }
    // Equidistant structured
    {
      const BandPair pair(4, 9, 1.0, 1.0, 1.5);
      const CrossStateBasis basis = build_cross_basis(pair);
      const EigenSystem sys = eigendecompose(
          build_structured(pair, EnvSpectrum::equidistant(1.5),
                           sample_interaction_block(4, 9, 0.4, 8)),
          basis);
      const double direct =
          diagonal_ensemble_inversion(sys, initial_mixed_band_state(basis));
      const double predicted =
          predicted_equilibrium_inversion(4, 9, spectrum_variance(sys));
      CHECK(std::abs(direct - predicted) < 1e-10);
    }
    // Spin ring
    {
      SpinBathSpec spec;
      spec.n_env = 5;
      spec.zeeman.assign(5, 1.0);
      spec.coupling_tensors = sample_star_couplings(5, 1.0, 61);
      spec.coupling_strength = 0.5;
      spec.topology = Topology::ring;
      spec.intra_kind = IntraKind::xx_plus_yy;
      spec.intra_strength = 0.3;
      spec.band_k = 1;
      const ProjectedHamiltonian proj = project_to_cross_subspace(spec, 1);
      const EigenSystem sys = eigendecompose(proj.matrix, proj.basis);
      const double direct = diagonal_ensemble_inversion(
          sys, initial_mixed_band_state(proj.basis));
      const double predicted = predicted_equilibrium_inversion(
          proj.basis.pair.g, proj.basis.pair.g_prime, spectrum_variance(sys));
      CHECK(std::abs(direct - predicted) < 1e-10);
    }
  }
}

TEST_CASE("finite_window_average") {
  SUBCASE("constant trajectory") {
    Trajectory traj;
    for (int i = 0; i <= 100; ++i) {
      traj.times.push_back(0.1 * i);
      traj.bloch_z.push_back(0.42);
    }
    CHECK(finite_window_average(traj, 2.0, 8.0) == doctest::Approx(0.42).epsilon(1e-15));
  }

  SUBCASE("empty window is rejected") {
    Trajectory traj;
    traj.times = {0.0, 1.0, 2.0};
    traj.bloch_z = {1.0, 1.0, 1.0};
    CHECK_THROWS_AS(finite_window_average(traj, 5.0, 6.0), std::domain_error);
    CHECK_THROWS_AS(finite_window_average(traj, 2.0, 1.0), std::domain_error);
  }

  SUBCASE("long-window average approaches the diagonal ensemble") {
    const CrossStateBasis basis = build_cross_basis(BandPair(3, 7));
    const EigenSystem sys = eigendecompose(sample_gue(10, 1.0, 12), basis);
    const Eigen::MatrixXcd rho0 = initial_mixed_band_state(basis);
    const double target = diagonal_ensemble_inversion(sys, rho0);

    double min_gap = 1e300;
    for (int i = 1; i < 10; ++i)
      min_gap = std::min(min_gap, sys.energies(i) - sys.energies(i - 1));
    const double t_max = 4000.0 / min_gap;
    std::vector<double> times(200001);
    for (std::size_t i = 0; i < times.size(); ++i)
      times[i] = t_max * static_cast<double>(i) / (times.size() - 1);
    const Trajectory traj = evolve_bloch_z(sys, rho0, times);
    CHECK(std::abs(finite_window_average(traj, 0.5 * t_max, t_max) - target) <
          1e-3);
  }
}

TEST_CASE("quasi-equilibrium plateaus separate by coupling type") {
  // One instance per family at the working bath size; the GUE plateau must
  // sit closest to the canonical inversion.
  auto plateau = [](Family family, auto&& tweak) {
    RunConfig cfg;
    cfg.family = family;
    cfg.n_env = 14;
    cfg.band_k = 2;
    cfg.g = 91;
    cfg.g_prime = 364;
    cfg.seed = 77;
    tweak(cfg);
    const ModelInstance inst = build_instance(cfg, derive_seed(cfg.seed, 0));
    const EigenSystem sys = eigendecompose(inst.hamiltonian, inst.basis);
    return diagonal_ensemble_inversion(sys, initial_mixed_band_state(inst.basis));
  };
  const double gue = plateau(Family::gue, [](RunConfig&) {});
  const double ring = plateau(Family::spin_ring, [](RunConfig& c) {
    c.intra_kind = "xx";
    c.intra_strength = 2.0;
    c.vr_norm = 1.6;
  });
  const double inhom = plateau(Family::spin_inhomogeneous, [](RunConfig& c) {
    c.zeeman_spread = 1.0;
    c.scale = 0.02;
    c.vr_norm = 1.4;
  });
  const double star = plateau(Family::spin_star, [](RunConfig&) {});
  const double degenerate =
      plateau(Family::structured_degenerate, [](RunConfig&) {});

  const double canonical = -0.6;
  CHECK(std::abs(gue - canonical) < std::abs(ring - canonical));
  CHECK(std::abs(ring - canonical) < std::abs(inhom - canonical));
  CHECK(std::abs(inhom - canonical) < std::abs(star - canonical));
  CHECK(std::abs(star - canonical) < std::abs(degenerate - canonical));
  // Distinct plateaus, not just ordered.
  CHECK(std::abs(gue - ring) > 0.02);
  CHECK(std::abs(ring - inhom) > 0.02);
  CHECK(std::abs(inhom - star) > 0.02);
}

TEST_CASE("default_time_grid") {
  const CrossStateBasis basis = build_cross_basis(BandPair(4, 9));
  const EigenSystem sys = eigendecompose(sample_gue(13, 1.0, 2), basis);
  const auto times = default_time_grid(sys, 501);
  REQUIRE(times.size() == 501);
  CHECK(times.front() == 0.0);
  CHECK(times.back() > 0.0);
  for (std::size_t i = 1; i < times.size(); ++i) CHECK(times[i] > times[i - 1]);

  // Gap-free spectra fall back to the bare horizon.
  const EigenSystem flat = eigendecompose(Eigen::MatrixXcd::Zero(13, 13), basis);
  const auto fallback = default_time_grid(flat, 11, 50.0);
  CHECK(fallback.back() == doctest::Approx(50.0));
}

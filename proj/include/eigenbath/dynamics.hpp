#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "eigenbath/analysis.hpp"
#include "eigenbath/subspace.hpp"

namespace eigenbath {

// Time series of the central system's Bloch-z component together with its
// running (trapezoidal) time average.
struct Trajectory {
  std::vector<double> times;
  std::vector<double> bloch_z;
  std::vector<double> running_average;
};

// rho_0 = |1><1| (x) 1_k/g: the excited central system against an
// environment completely mixed within the lower band.  Diagonal in the
// cross basis with weight 1/g on each excited-type state.
Eigen::MatrixXcd initial_mixed_band_state(const CrossStateBasis& basis);

// Uniform grid of n_samples times on [0, T] with T = horizon/(median
// positive nearest-level gap); T falls back to `horizon` when the spectrum
// has no resolved gaps.
std::vector<double> default_time_grid(const EigenSystem& eig,
                                      int n_samples = 2000,
                                      double horizon = 50.0);

// <sigma_z>(t) of the central system under the spectral propagator; exact
// at every sample time, no integrator error.  `times` must be ascending.
Trajectory evolve_bloch_z(const EigenSystem& eig, const Eigen::MatrixXcd& rho0,
                          std::span<const double> times);

// rho(t) itself; used for consistency checks on trace, purity, hermiticity.
Eigen::MatrixXcd evolve_density(const EigenSystem& eig,
                                const Eigen::MatrixXcd& rho0, double t);

// Infinite-time average of the Bloch-z component.  For a nondegenerate
// spectrum this is the diagonal-ensemble sum over rho0 weights and
// eigenvector inversions; inside every degenerate eigenspace the full
// intra-block contribution is kept (trace over the eigenspace), which is
// basis independent.  degeneracy_tol < 0 selects 1e-9 * max(1, |E|_max).
double diagonal_ensemble_inversion(const EigenSystem& eig,
                                   const Eigen::MatrixXcd& rho0,
                                   double degeneracy_tol = -1.0);

// Trapezoidal mean of bloch_z over [t_start, t_end].  Throws
// std::domain_error when fewer than two samples fall inside the window.
double finite_window_average(const Trajectory& traj, double t_start,
                             double t_end);

}  // namespace eigenbath

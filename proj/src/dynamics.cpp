#include "eigenbath/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "eigenbath/ensembles.hpp"

namespace eigenbath {

namespace {

using Complex = std::complex<double>;

void check_density(const EigenSystem& eig, const Eigen::MatrixXcd& rho0) {
  if (rho0.rows() != eig.dim() || rho0.cols() != eig.dim())
    throw std::invalid_argument("density operator dimension mismatch");
  if (hermiticity_residual(rho0) > 1e-10)
    throw std::invalid_argument("density operator is not Hermitian");
  if (std::abs(rho0.trace() - Complex(1.0, 0.0)) > 1e-10)
    throw std::invalid_argument("density operator trace must be 1");
}

// sigma_z of the central system in cross-basis order: -1 on the ground
// block, +1 on the excited block.
Eigen::VectorXd bloch_z_diagonal(const EigenSystem& eig) {
  Eigen::VectorXd z(eig.dim());
  for (int i = 0; i < eig.dim(); ++i)
    z(i) = i < eig.split() ? -1.0 : 1.0;
  return z;
}

}  // namespace

Eigen::MatrixXcd initial_mixed_band_state(const CrossStateBasis& basis) {
  const int d = basis.dim();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
  const double weight = 1.0 / static_cast<double>(basis.pair.g);
  for (int i = basis.split(); i < d; ++i) rho(i, i) = weight;
  return rho;
}

std::vector<double> default_time_grid(const EigenSystem& eig, int n_samples,
                                      double horizon) {
  if (n_samples < 2)
    throw std::invalid_argument("default_time_grid: need at least 2 samples");
  const int d = eig.dim();
  const double span = eig.energies(d - 1) - eig.energies(0);
  std::vector<double> gaps;
  for (int i = 1; i < d; ++i) {
    const double gap = eig.energies(i) - eig.energies(i - 1);
    if (gap > 1e-12 * std::max(1.0, span)) gaps.push_back(gap);
  }
  double t_max = horizon;
  if (!gaps.empty()) {
    std::nth_element(gaps.begin(), gaps.begin() + gaps.size() / 2, gaps.end());
    t_max = horizon / gaps[gaps.size() / 2];
  }
  std::vector<double> times(static_cast<std::size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i)
    times[static_cast<std::size_t>(i)] =
        t_max * static_cast<double>(i) / static_cast<double>(n_samples - 1);
  return times;
}

Trajectory evolve_bloch_z(const EigenSystem& eig, const Eigen::MatrixXcd& rho0,
                          std::span<const double> times) {
  check_density(eig, rho0);
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw std::invalid_argument("evolve_bloch_z: times must be ascending");

  const int d = eig.dim();
  const Eigen::MatrixXcd& u = eig.vectors;
  const Eigen::VectorXd z = bloch_z_diagonal(eig);
  const Eigen::MatrixXcd rho_e = u.adjoint() * rho0 * u;
  const Eigen::MatrixXcd z_e = u.adjoint() * (z.asDiagonal() * u);
  // weights(e,e') = rho(e,e') * z(e',e); <sigma_z>(t) is its phase-twisted
  // double sum.
  const Eigen::MatrixXcd weights = rho_e.cwiseProduct(z_e.transpose());

  Trajectory traj;
  traj.times.assign(times.begin(), times.end());
  traj.bloch_z.reserve(times.size());
  Eigen::VectorXcd phases(d);
  for (double t : times) {
    for (int e = 0; e < d; ++e)
      phases(e) = std::polar(1.0, -eig.energies(e) * t);
    const Complex value = phases.transpose() * (weights * phases.conjugate());
    traj.bloch_z.push_back(value.real());
  }

  traj.running_average.resize(times.size());
  if (!times.empty()) {
    traj.running_average[0] = traj.bloch_z[0];
    double integral = 0.0;
    for (std::size_t i = 1; i < times.size(); ++i) {
      integral += 0.5 * (traj.bloch_z[i] + traj.bloch_z[i - 1]) *
                  (times[i] - times[i - 1]);
      traj.running_average[i] = integral / (times[i] - times[0]);
    }
  }
  return traj;
}

Eigen::MatrixXcd evolve_density(const EigenSystem& eig,
                                const Eigen::MatrixXcd& rho0, double t) {
  check_density(eig, rho0);
  const int d = eig.dim();
  Eigen::VectorXcd phases(d);
  for (int e = 0; e < d; ++e)
    phases(e) = std::polar(1.0, -eig.energies(e) * t);
  const Eigen::MatrixXcd propagator =
      eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
  return propagator * rho0 * propagator.adjoint();
}

double diagonal_ensemble_inversion(const EigenSystem& eig,
                                   const Eigen::MatrixXcd& rho0,
                                   double degeneracy_tol) {
  check_density(eig, rho0);
  const int d = eig.dim();
  if (degeneracy_tol < 0.0)
    degeneracy_tol =
        1e-9 * std::max(1.0, eig.energies.cwiseAbs().maxCoeff());

  const Eigen::MatrixXcd& u = eig.vectors;
  const Eigen::VectorXd z = bloch_z_diagonal(eig);
  const Eigen::MatrixXcd rho_e = u.adjoint() * rho0 * u;

  double total = 0.0;
  int start = 0;
  while (start < d) {
    int end = start + 1;
    while (end < d &&
           eig.energies(end) - eig.energies(end - 1) <= degeneracy_tol)
      ++end;
    const int size = end - start;
    if (size == 1) {
      total += rho_e(start, start).real() * eig.lambdas(start);
    } else {
      // Degenerate eigenspace: the time average keeps the whole block, and
      // the trace makes the result independent of the basis chosen inside.
      const auto u_block = u.middleCols(start, size);
      const Eigen::MatrixXcd z_block =
          u_block.adjoint() * (z.asDiagonal() * u_block);
      total +=
          (rho_e.block(start, start, size, size) * z_block).trace().real();
    }
    start = end;
  }
  return total;
}

double finite_window_average(const Trajectory& traj, double t_start,
                             double t_end) {
  if (!(t_start < t_end))
    throw std::domain_error("finite_window_average: empty window");
  std::size_t first = 0;
  while (first < traj.times.size() && traj.times[first] < t_start) ++first;
  std::size_t last = first;
  while (last < traj.times.size() && traj.times[last] <= t_end) ++last;
  if (last - first < 2)
    throw std::domain_error(
        "finite_window_average: window holds fewer than two samples");
  double integral = 0.0;
  for (std::size_t i = first + 1; i < last; ++i)
    integral += 0.5 * (traj.bloch_z[i] + traj.bloch_z[i - 1]) *
                (traj.times[i] - traj.times[i - 1]);
  return integral / (traj.times[last - 1] - traj.times[first]);
}

}  // namespace eigenbath

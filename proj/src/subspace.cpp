#include "eigenbath/subspace.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace eigenbath {

BandPair::BandPair(int g_, int g_prime_, double delta_s_, double delta_c_,
                   double bandwidth_)
    : g(g_),
      g_prime(g_prime_),
      delta_s(delta_s_),
      delta_c(delta_c_),
      bandwidth(bandwidth_) {
  if (g < 1 || g_prime < 1)
    throw std::invalid_argument("BandPair: degeneracies must be >= 1");
  if (delta_s < 0.0 || delta_c < 0.0 || bandwidth < 0.0)
    throw std::invalid_argument("BandPair: energies must be >= 0");
}

std::uint64_t band_degeneracy(int n_spins, int k) {
  if (n_spins < 0 || k < 0 || k > n_spins)
    throw std::domain_error("band_degeneracy: require 0 <= k <= n_spins");
  // C(n, k) = C(n, n-k); the smaller k keeps intermediates minimal.
  if (k > n_spins - k) k = n_spins - k;
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned>(n_spins - k + i);
    result /= static_cast<unsigned>(i);  // exact: C(n-k+i, i) is integral
    if (result > std::numeric_limits<std::uint64_t>::max())
      throw std::domain_error("band_degeneracy: value exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

double canonical_inversion(int g, int g_prime) {
  if (g < 1 || g_prime < 1)
    throw std::domain_error("canonical_inversion: degeneracies must be >= 1");
  return static_cast<double>(g - g_prime) / static_cast<double>(g + g_prime);
}

double canonical_beta(int g, int g_prime, double delta_s) {
  if (g < 1 || g_prime < 1)
    throw std::domain_error("canonical_beta: degeneracies must be >= 1");
  if (!(delta_s > 0.0))
    throw std::domain_error("canonical_beta: delta_s must be > 0");
  return std::log(static_cast<double>(g_prime) / static_cast<double>(g)) /
         delta_s;
}

double thermal_excited_population(int n_spins, double delta, double beta_env) {
  if (n_spins < 1)
    throw std::domain_error("thermal_excited_population: n_spins must be >= 1");
  const double n = static_cast<double>(n_spins);
  const double boltzmann = 1.0 / (1.0 + std::exp(delta * beta_env));
  return n / (n + 1.0) * boltzmann + 1.0 / (n + 1.0);
}

CrossStateBasis build_cross_basis(const BandPair& pair) {
  if (pair.g < 1 || pair.g_prime < 1)
    throw std::invalid_argument("build_cross_basis: invalid band pair");
  CrossStateBasis basis;
  basis.pair = pair;
  basis.labels.reserve(static_cast<std::size_t>(pair.dim()));
  for (int m = 1; m <= pair.g_prime; ++m)
    basis.labels.push_back("|0,k':" + std::to_string(m) + ">");
  for (int m = 1; m <= pair.g; ++m)
    basis.labels.push_back("|1,k:" + std::to_string(m) + ">");
  return basis;
}

}  // namespace eigenbath

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eigenbath {

// Reduced description of a two-level system in resonant contact with one
// pair of environment bands: the lower band holds g levels, the upper band
// g' levels.  Energies are measured in units of the reference splitting
// (resonance means delta_s == delta_c == 1), times in its inverse, hbar = 1.
struct BandPair {
  int g = 1;        // lower-band degeneracy
  int g_prime = 1;  // upper-band degeneracy
  double delta_s = 1.0;    // central-system splitting
  double delta_c = 1.0;    // environment band splitting
  double bandwidth = 0.0;  // width of each band

  BandPair() = default;
  BandPair(int g, int g_prime, double delta_s = 1.0, double delta_c = 1.0,
           double bandwidth = 0.0);

  int dim() const { return g + g_prime; }
  double detuning() const { return delta_s - delta_c; }

  friend bool operator==(const BandPair&, const BandPair&) = default;
};

// Ordered basis of the (g+g')-dimensional cross-state subspace.  The first
// g' labels are the ground-type states |0,k':m'> (central system in |0>,
// environment in the upper band), the remaining g are the excited-type
// states |1,k:m>.  Every module consumes this ordering; nothing re-derives
// it.
struct CrossStateBasis {
  BandPair pair;
  std::vector<std::string> labels;

  int dim() const { return static_cast<int>(labels.size()); }
  // Index of the first excited-type label.
  int split() const { return pair.g_prime; }
  bool is_excited_index(int i) const { return i >= pair.g_prime; }
};

// Binomial degeneracy C(n_spins, k) of a homogeneous Zeeman ladder.
// Throws std::domain_error if k is outside [0, n_spins] or the value does
// not fit in 64 bits.
std::uint64_t band_degeneracy(int n_spins, int k);

// Inversion (g - g')/(g + g') of the canonical state; always in [-1, 1].
double canonical_inversion(int g, int g_prime);

// Inverse temperature ln(g'/g)/delta_s of the canonical state.
// Throws std::domain_error for delta_s <= 0.
double canonical_beta(int g, int g_prime, double delta_s);

// Excited-state population of the central system after relaxation against a
// finite ladder of n_spins environment spins prepared at inverse temperature
// beta_env:  n/(n+1) * 1/(1+exp(delta*beta_env)) + 1/(n+1).
double thermal_excited_population(int n_spins, double delta, double beta_env);

// Builds the ground-block-first basis for a band pair.  Deterministic:
// equal inputs give identical label sequences.
CrossStateBasis build_cross_basis(const BandPair& pair);

}  // namespace eigenbath

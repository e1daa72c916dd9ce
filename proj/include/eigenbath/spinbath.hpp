#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "eigenbath/subspace.hpp"

namespace eigenbath {

enum class IntraKind { none, xx, xx_plus_yy, heisenberg };
enum class Topology { star, ring };

// A spin-1/2 central system coupled to n_env environment spins.  Basis
// states are (n_env+1)-bit masks: bit 0 is the central spin, bits 1..n_env
// the environment; a set bit means spin up.  Environment band k collects the
// states with k environment spins up.
struct SpinBathSpec {
  int n_env = 1;
  double central_splitting = 1.0;
  std::vector<double> zeeman;                     // one splitting per spin
  std::vector<Eigen::Matrix3d> coupling_tensors;  // gamma^(nu), row = central axis
  double coupling_strength = 1.0;                 // global factor on all tensors
  IntraKind intra_kind = IntraKind::none;
  double intra_strength = 0.0;
  Topology topology = Topology::star;
  int band_k = 0;  // lower band of the pair (k, k+1)

  void validate() const;  // throws std::invalid_argument
};

// Projection of a spin-bath Hamiltonian onto the cross subspace of one band
// pair, together with the microstates backing each basis label.
struct ProjectedHamiltonian {
  Eigen::MatrixXcd matrix;
  CrossStateBasis basis;
  // Full-space bitmask of each cross-basis state, ground block first.
  std::vector<std::uint64_t> state_masks;
};

// Dense ceiling for the full 2^(n_env+1)-dimensional construction; larger
// baths must go through project_to_cross_subspace.
inline constexpr int kMaxDenseSpins = 11;

// One 3x3 coupling tensor per environment spin, entries independent uniform
// on [-strength, strength].  Deterministic per seed.
std::vector<Eigen::Matrix3d> sample_star_couplings(int n_env, double strength,
                                                   std::uint64_t seed);

// n_env splittings drawn uniform on [center - spread/2, center + spread/2];
// spread 0 returns `center` exactly.
std::vector<double> inhomogeneous_zeeman(int n_env, double center,
                                         double spread, std::uint64_t seed);

// Full Hamiltonian on all 2^(n_env+1) states: central and environment
// Zeeman terms, the gamma-tensor system-environment coupling, and the
// intra-bath coupling selected by intra_kind/topology.  Throws
// ResourceError when n_env exceeds kMaxDenseSpins.
Eigen::MatrixXcd build_full_hamiltonian(const SpinBathSpec& spec);

// P H P on the cross subspace {|0, band k+1>, |1, band k>}, assembled by
// enumerating band bitmasks directly -- the full matrix is never formed.
// Within each band, states are ordered by ascending environment Zeeman
// energy with bitmask order breaking ties.
ProjectedHamiltonian project_to_cross_subspace(const SpinBathSpec& spec,
                                               int band_k);

}  // namespace eigenbath

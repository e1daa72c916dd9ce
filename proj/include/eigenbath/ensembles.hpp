#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "eigenbath/subspace.hpp"

namespace eigenbath {

// Level layout of the two environment bands entering the block-structured
// Hamiltonian.  Offsets are relative to each band's lower edge.
enum class SpectrumKind { degenerate, equidistant, explicit_levels };

struct EnvSpectrum {
  SpectrumKind kind = SpectrumKind::degenerate;
  double bandwidth = 0.0;  // full width of each band
  // Explicit per-level offsets; upper = band k' (ground block, g' levels),
  // lower = band k (excited block, g levels).
  std::vector<double> upper_levels;
  std::vector<double> lower_levels;

  static EnvSpectrum degenerate();
  static EnvSpectrum equidistant(double bandwidth);
  static EnvSpectrum explicit_levels(std::vector<double> upper,
                                     std::vector<double> lower);

  // Offsets of an n-level band.  Equidistant bands place level j at
  // j*bandwidth/(n-1); a single-level band sits at offset 0.
  std::vector<double> band_offsets(int n_levels, bool upper_band) const;
};

// Max |H - H^dagger| entry.
double hermiticity_residual(const Eigen::MatrixXcd& h);

// Draws a dim x dim matrix from the Gaussian unitary ensemble: real diagonal
// entries with variance 2*scale^2, independent real/imaginary off-diagonal
// parts with variance scale^2 each.  Identical seeds reproduce identical
// matrices bit for bit.
Eigen::MatrixXcd sample_gue(int dim, double scale, std::uint64_t seed);

// g x g' energy-exchange block; every entry has independent Gaussian real
// and imaginary parts with standard deviation `scale`.
Eigen::MatrixXcd sample_interaction_block(int g, int g_prime, double scale,
                                          std::uint64_t seed);

// Assembles the cross-subspace Hamiltonian in ground-block-first order:
//
//   [ -detuning/2 + upper-band offsets |           V^dagger            ]
//   [              V                  | +detuning/2 + lower-band offsets ]
//
// V must be g x g'.  With a degenerate spectrum and zero detuning the
// diagonal vanishes identically.
Eigen::MatrixXcd build_structured(const BandPair& pair,
                                  const EnvSpectrum& spectrum,
                                  const Eigen::MatrixXcd& v);

// Multiplies the traceless block-diagonal (environment-spectrum) part of H
// by s, leaving the interaction blocks untouched.  `split` is the dimension
// of the ground block.  s = 0 recovers the degenerate-band limit.
Eigen::MatrixXcd scale_env_spectrum(const Eigen::MatrixXcd& h, double s,
                                    int split);

}  // namespace eigenbath

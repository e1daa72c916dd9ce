#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "eigenbath/subspace.hpp"

namespace eigenbath {

// Spectral decomposition of a cross-subspace Hamiltonian together with the
// inversion lambda carried by each eigenvector: lambda = (weight on the
// excited-type basis states) - (weight on the ground-type states).
struct EigenSystem {
  BandPair pair;
  Eigen::VectorXd energies;   // ascending
  Eigen::MatrixXcd vectors;   // orthonormal columns, cross-basis order
  Eigen::VectorXd lambdas;    // one per eigenvector, in [-1, 1]

  int dim() const { return static_cast<int>(energies.size()); }
  int split() const { return pair.g_prime; }
};

// Pooled inversion samples of one or more spectra on the same band pair.
struct LambdaDistribution {
  BandPair pair;
  std::vector<double> samples;
  std::vector<double> bin_edges;      // size bins+1, spanning [-1, 1]
  std::vector<std::int64_t> counts;   // size bins
  double mean = 0.0;
  double variance = 0.0;  // population variance
};

// Counts of inversion values for a degenerate-band Hamiltonian
// [[0, V^dagger], [V, 0]], classified through the rank of V: the kernel of
// V contributes pure ground eigenvectors (lambda = -1), the kernel of
// V^dagger pure excited ones (lambda = +1), and each positive singular
// value an evenly split pair (lambda = 0).
struct InversionCounts {
  int at_minus_one = 0;
  int at_zero = 0;
  int at_plus_one = 0;
};

// Variance / relative-strength pair produced by a spectrum-scale sweep.
struct SweepPoint {
  double scale = 0.0;
  double relative_strength = 0.0;
  double variance = 0.0;
};

// Full spectral decomposition.  Throws std::domain_error when the
// hermiticity residual exceeds 1e-10 and std::invalid_argument on a
// dimension mismatch with the basis.
EigenSystem eigendecompose(const Eigen::MatrixXcd& h,
                           const CrossStateBasis& basis);

// Quasi-equilibrium inversion predicted from a lambda-distribution
// variance: canonical_inversion(g, g') + (g+g')/(2g) * variance.
double predicted_equilibrium_inversion(int g, int g_prime, double variance);

// Analytic inversion density of the Gaussian unitary ensemble,
//   P(lambda) = 2^(1-d) Gamma(d)/(Gamma(g)Gamma(g')) (1-lambda)^(g'-1)
//               (1+lambda)^(g-1),  d = g+g',
// evaluated in log space so d ~ 1000 stays finite.  Zero outside [-1, 1].
double gue_lambda_pdf(double lambda, int g, int g_prime);

// Cumulative form of the density above (regularized incomplete beta).
double gue_lambda_cdf(double lambda, int g, int g_prime);

// Closed-form variance 4 g g' / (d^2 (d+1)) of the density above.
double gue_variance_closed_form(int g, int g_prime);

// Ensemble-average relative strength sqrt((g^2+g'^2)/(2 g g')) of a GUE
// matrix in the cross basis; depends only on g/g'.
double vr_gue(int g, int g_prime);

// Pools the inversions of several spectra into a histogram over [-1, 1].
// All systems must share one band pair.
LambdaDistribution lambda_distribution(std::span<const EigenSystem> systems,
                                       int bins = 50);
LambdaDistribution lambda_distribution_from_samples(
    const BandPair& pair, std::vector<double> samples, int bins = 50);

// Relative strength V_R = ||block-diagonal, traceless|| / ||off-blocks||
// (Frobenius norms); the block-diagonal part carries the environment
// spectrum, the off-blocks the interaction.  Throws std::domain_error when
// the interaction part vanishes.
double relative_strength(const Eigen::MatrixXcd& h, int split);

// Rank-based classification for the degenerate-band case; `tol` is relative
// to the largest singular value of v.
InversionCounts degenerate_inversion_counts(const Eigen::MatrixXcd& v,
                                            double tol = 1e-6);

// Rescales the environment spectrum of base_h through each value in
// `scales`, decomposes, and records (scale, V_R, variance) ordered by
// ascending scale.
std::vector<SweepPoint> sweep_variance_vs_vr(const Eigen::MatrixXcd& base_h,
                                             const CrossStateBasis& basis,
                                             std::vector<double> scales);

}  // namespace eigenbath

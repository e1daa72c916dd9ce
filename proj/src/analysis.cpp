#include "eigenbath/analysis.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <stdexcept>

#include "eigenbath/ensembles.hpp"

namespace eigenbath {

namespace {

double population_variance(const std::vector<double>& xs, double mean) {
  double acc = 0.0;
  for (double x : xs) acc += (x - mean) * (x - mean);
  return xs.empty() ? 0.0 : acc / static_cast<double>(xs.size());
}

double sample_mean(const std::vector<double>& xs) {
  double acc = 0.0;
  for (double x : xs) acc += x;
  return xs.empty() ? 0.0 : acc / static_cast<double>(xs.size());
}

}  // namespace

EigenSystem eigendecompose(const Eigen::MatrixXcd& h,
                           const CrossStateBasis& basis) {
  const int d = basis.dim();
  if (h.rows() != d || h.cols() != d)
    throw std::invalid_argument(
        "eigendecompose: matrix dimension does not match basis");
  if (hermiticity_residual(h) > 1e-10)
    throw std::domain_error("eigendecompose: matrix is not Hermitian");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecompose: solver failed to converge");

  EigenSystem sys;
  sys.pair = basis.pair;
  sys.energies = solver.eigenvalues();
  sys.vectors = solver.eigenvectors();
  sys.lambdas.resize(d);
  const int split = basis.split();
  for (int e = 0; e < d; ++e) {
    const double excited = sys.vectors.col(e).tail(d - split).squaredNorm();
    const double ground = sys.vectors.col(e).head(split).squaredNorm();
    sys.lambdas(e) = excited - ground;
  }

  // Completeness fixes the total inversion at g - g' for any orthonormal
  // eigenbasis; a violation means the decomposition itself is broken.
  const double expected = static_cast<double>(basis.pair.g - basis.pair.g_prime);
  if (std::abs(sys.lambdas.sum() - expected) > 1e-9)
    throw std::runtime_error("eigendecompose: inversion sum rule violated");
  for (int e = 0; e < d; ++e)
    sys.lambdas(e) = std::clamp(sys.lambdas(e), -1.0, 1.0);
  return sys;
}

double predicted_equilibrium_inversion(int g, int g_prime, double variance) {
  if (variance < 0.0)
    throw std::invalid_argument(
        "predicted_equilibrium_inversion: variance must be >= 0");
  const double d = static_cast<double>(g + g_prime);
  return canonical_inversion(g, g_prime) +
         d / (2.0 * static_cast<double>(g)) * variance;
}

double gue_lambda_pdf(double lambda, int g, int g_prime) {
  if (g < 1 || g_prime < 1)
    throw std::domain_error("gue_lambda_pdf: degeneracies must be >= 1");
  if (lambda < -1.0 || lambda > 1.0) return 0.0;
  const int d = g + g_prime;
  double log_p = std::lgamma(d) - std::lgamma(g) - std::lgamma(g_prime) -
                 (d - 1) * std::log(2.0);
  if (g_prime > 1) {
    if (lambda == 1.0) return 0.0;
    log_p += (g_prime - 1) * std::log1p(-lambda);
  }
  if (g > 1) {
    if (lambda == -1.0) return 0.0;
    log_p += (g - 1) * std::log1p(lambda);
  }
  return std::exp(log_p);
}

double gue_lambda_cdf(double lambda, int g, int g_prime) {
  if (g < 1 || g_prime < 1)
    throw std::domain_error("gue_lambda_cdf: degeneracies must be >= 1");
  if (lambda <= -1.0) return 0.0;
  if (lambda >= 1.0) return 1.0;
  // lambda = 1 - 2p with p ~ Beta(g', g), so
  // P(Lambda <= x) = I_{(1+x)/2}(g, g').
  return boost::math::ibeta(static_cast<double>(g),
                            static_cast<double>(g_prime),
                            0.5 * (1.0 + lambda));
}

double gue_variance_closed_form(int g, int g_prime) {
  if (g < 1 || g_prime < 1)
    throw std::domain_error("gue_variance_closed_form: degeneracies must be >= 1");
  const double d = static_cast<double>(g) + static_cast<double>(g_prime);
  return 4.0 * static_cast<double>(g) * static_cast<double>(g_prime) /
         (d * d * (d + 1.0));
}

double vr_gue(int g, int g_prime) {
  if (g < 1 || g_prime < 1)
    throw std::domain_error("vr_gue: degeneracies must be >= 1");
  const double a = static_cast<double>(g);
  const double b = static_cast<double>(g_prime);
  return std::sqrt((a * a + b * b) / (2.0 * a * b));
}

LambdaDistribution lambda_distribution_from_samples(const BandPair& pair,
                                                    std::vector<double> samples,
                                                    int bins) {
  if (bins < 1)
    throw std::invalid_argument("lambda_distribution: bins must be >= 1");
  if (samples.empty())
    throw std::invalid_argument("lambda_distribution: no samples");
  LambdaDistribution dist;
  dist.pair = pair;
  dist.samples = std::move(samples);
  dist.bin_edges.resize(static_cast<std::size_t>(bins) + 1);
  const double width = 2.0 / bins;
  for (int b = 0; b <= bins; ++b) dist.bin_edges[b] = -1.0 + width * b;
  dist.bin_edges.back() = 1.0;
  dist.counts.assign(static_cast<std::size_t>(bins), 0);
  for (double x : dist.samples) {
    int b = static_cast<int>(std::floor((x + 1.0) / width));
    b = std::clamp(b, 0, bins - 1);  // right edge closes the last bin
    ++dist.counts[static_cast<std::size_t>(b)];
  }
  dist.mean = sample_mean(dist.samples);
  dist.variance = population_variance(dist.samples, dist.mean);
  return dist;
}

LambdaDistribution lambda_distribution(std::span<const EigenSystem> systems,
                                       int bins) {
  if (systems.empty())
    throw std::invalid_argument("lambda_distribution: no systems given");
  const BandPair& pair = systems.front().pair;
  std::vector<double> samples;
  for (const EigenSystem& sys : systems) {
    // Members of one ensemble may differ in sampled splittings; the pooled
    // statistics only require a common (g, g').
    if (sys.pair.g != pair.g || sys.pair.g_prime != pair.g_prime)
      throw std::domain_error(
          "lambda_distribution: systems live on different band pairs");
    samples.insert(samples.end(), sys.lambdas.data(),
                   sys.lambdas.data() + sys.lambdas.size());
  }
  return lambda_distribution_from_samples(pair, std::move(samples), bins);
}

double relative_strength(const Eigen::MatrixXcd& h, int split) {
  const int d = static_cast<int>(h.rows());
  if (h.cols() != d)
    throw std::invalid_argument("relative_strength: matrix must be square");
  if (split < 1 || split >= d)
    throw std::invalid_argument("relative_strength: split outside matrix");
  const std::complex<double> trace_avg = h.trace() / static_cast<double>(d);
  double diag_norm2 = 0.0;
  double off_norm2 = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const bool same_block = (i < split) == (j < split);
      std::complex<double> entry = h(i, j);
      if (i == j) entry -= trace_avg;
      if (same_block)
        diag_norm2 += std::norm(entry);
      else
        off_norm2 += std::norm(entry);
    }
  if (off_norm2 == 0.0)
    throw std::domain_error("relative_strength: interaction part is zero");
  return std::sqrt(diag_norm2 / off_norm2);
}

InversionCounts degenerate_inversion_counts(const Eigen::MatrixXcd& v,
                                            double tol) {
  if (v.rows() < 1 || v.cols() < 1)
    throw std::invalid_argument("degenerate_inversion_counts: empty block");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(v);
  const auto& sv = svd.singularValues();
  const double threshold = sv.size() > 0 ? tol * sv(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) ++rank;
  InversionCounts counts;
  counts.at_minus_one = static_cast<int>(v.cols()) - rank;
  counts.at_zero = 2 * rank;
  counts.at_plus_one = static_cast<int>(v.rows()) - rank;
  return counts;
}

std::vector<SweepPoint> sweep_variance_vs_vr(const Eigen::MatrixXcd& base_h,
                                             const CrossStateBasis& basis,
                                             std::vector<double> scales) {
  for (double s : scales)
    if (s < 0.0)
      throw std::invalid_argument("sweep_variance_vs_vr: scales must be >= 0");
  std::sort(scales.begin(), scales.end());
  std::vector<SweepPoint> points;
  points.reserve(scales.size());
  for (double s : scales) {
    const Eigen::MatrixXcd h = scale_env_spectrum(base_h, s, basis.split());
    const EigenSystem sys = eigendecompose(h, basis);
    SweepPoint p;
    p.scale = s;
    p.relative_strength = relative_strength(h, basis.split());
    const double mean = sys.lambdas.mean();
    p.variance = (sys.lambdas.array() - mean).square().mean();
    points.push_back(p);
  }
  return points;
}

}  // namespace eigenbath

#include "eigenbath/ensembles.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

#include "eigenbath/rng.hpp"

namespace eigenbath {

EnvSpectrum EnvSpectrum::degenerate() { return EnvSpectrum{}; }

EnvSpectrum EnvSpectrum::equidistant(double bandwidth) {
  if (bandwidth < 0.0)
    throw std::invalid_argument("EnvSpectrum: bandwidth must be >= 0");
  EnvSpectrum s;
  s.kind = SpectrumKind::equidistant;
  s.bandwidth = bandwidth;
  return s;
}

EnvSpectrum EnvSpectrum::explicit_levels(std::vector<double> upper,
                                         std::vector<double> lower) {
  EnvSpectrum s;
  s.kind = SpectrumKind::explicit_levels;
  s.upper_levels = std::move(upper);
  s.lower_levels = std::move(lower);
  double lo = 0.0, hi = 0.0;
  for (const auto& levels : {s.upper_levels, s.lower_levels})
    for (double e : levels) {
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
  s.bandwidth = hi - lo;
  return s;
}

std::vector<double> EnvSpectrum::band_offsets(int n_levels,
                                              bool upper_band) const {
  if (n_levels < 1)
    throw std::invalid_argument("band_offsets: need at least one level");
  switch (kind) {
    case SpectrumKind::degenerate:
      return std::vector<double>(static_cast<std::size_t>(n_levels), 0.0);
    case SpectrumKind::equidistant: {
      std::vector<double> offsets(static_cast<std::size_t>(n_levels), 0.0);
      if (n_levels > 1) {
        const double step = bandwidth / static_cast<double>(n_levels - 1);
        for (int j = 0; j < n_levels; ++j) offsets[j] = step * j;
      }
      return offsets;
    }
    case SpectrumKind::explicit_levels: {
      const auto& levels = upper_band ? upper_levels : lower_levels;
      if (static_cast<int>(levels.size()) != n_levels)
        throw std::invalid_argument(
            "band_offsets: explicit level count does not match band size");
      return levels;
    }
  }
  throw std::logic_error("band_offsets: unknown spectrum kind");
}

double hermiticity_residual(const Eigen::MatrixXcd& h) {
  if (h.rows() != h.cols())
    throw std::invalid_argument("hermiticity_residual: matrix must be square");
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd sample_gue(int dim, double scale, std::uint64_t seed) {
  if (dim < 2) throw std::domain_error("sample_gue: dimension must be >= 2");
  if (!(scale > 0.0))
    throw std::invalid_argument("sample_gue: scale must be > 0");
  auto engine = make_engine(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double diag_sigma = scale * std::sqrt(2.0);
  Eigen::MatrixXcd h(dim, dim);
  for (int i = 0; i < dim; ++i) {
    h(i, i) = std::complex<double>(diag_sigma * gauss(engine), 0.0);
    for (int j = i + 1; j < dim; ++j) {
      const double re = scale * gauss(engine);
      const double im = scale * gauss(engine);
      h(i, j) = std::complex<double>(re, im);
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

Eigen::MatrixXcd sample_interaction_block(int g, int g_prime, double scale,
                                          std::uint64_t seed) {
  if (g < 1 || g_prime < 1)
    throw std::domain_error("sample_interaction_block: band sizes must be >= 1");
  if (!(scale > 0.0))
    throw std::invalid_argument("sample_interaction_block: scale must be > 0");
  auto engine = make_engine(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd v(g, g_prime);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g_prime; ++j)
      v(i, j) = std::complex<double>(scale * gauss(engine),
                                     scale * gauss(engine));
  return v;
}

Eigen::MatrixXcd build_structured(const BandPair& pair,
                                  const EnvSpectrum& spectrum,
                                  const Eigen::MatrixXcd& v) {
  if (v.rows() != pair.g || v.cols() != pair.g_prime)
    throw std::invalid_argument(
        "build_structured: interaction block must be g x g'");
  const int gp = pair.g_prime;
  const int d = pair.dim();
  const double half_detuning = 0.5 * pair.detuning();
  const auto upper = spectrum.band_offsets(gp, /*upper_band=*/true);
  const auto lower = spectrum.band_offsets(pair.g, /*upper_band=*/false);

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
  for (int m = 0; m < gp; ++m) h(m, m) = -half_detuning + upper[m];
  for (int m = 0; m < pair.g; ++m)
    h(gp + m, gp + m) = half_detuning + lower[m];
  h.block(gp, 0, pair.g, gp) = v;
  h.block(0, gp, gp, pair.g) = v.adjoint();
  return h;
}

Eigen::MatrixXcd scale_env_spectrum(const Eigen::MatrixXcd& h, double s,
                                    int split) {
  const int d = static_cast<int>(h.rows());
  if (h.cols() != d)
    throw std::invalid_argument("scale_env_spectrum: matrix must be square");
  if (split < 1 || split >= d)
    throw std::invalid_argument("scale_env_spectrum: split outside matrix");
  if (s < 0.0)
    throw std::invalid_argument("scale_env_spectrum: s must be >= 0");
  const std::complex<double> trace_avg = h.trace() / static_cast<double>(d);
  Eigen::MatrixXcd out = h;
  // Both block-diagonal blocks carry the environment spectrum; the trace
  // average stays put so the operator keeps its mean energy.  The diagonal
  // form s*h + (1-s)*avg leaves s = 1 bit-exact.
  auto scale_block = [&](int start, int size) {
    out.block(start, start, size, size) *= s;
    for (int i = start; i < start + size; ++i)
      out(i, i) = s * h(i, i) + (1.0 - s) * trace_avg;
  };
  scale_block(0, split);
  scale_block(split, d - split);
  return out;
}

}  // namespace eigenbath

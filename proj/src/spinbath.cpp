#include "eigenbath/spinbath.hpp"

#include <algorithm>
#include <bit>
#include <complex>
#include <random>
#include <stdexcept>
#include <utility>

#include "eigenbath/errors.hpp"
#include "eigenbath/rng.hpp"

namespace eigenbath {

namespace {

using Complex = std::complex<double>;

constexpr int kAxisX = 0;
constexpr int kAxisY = 1;
constexpr int kAxisZ = 2;

// sigma_axis applied to one bit of a basis mask: returns the image mask and
// amplitude.  sigma_x flips; sigma_y flips with +/-i; sigma_z weighs by the
// bit sign.
inline std::pair<std::uint64_t, Complex> apply_pauli(std::uint64_t mask,
                                                     int axis, int bit) {
  const std::uint64_t flag = std::uint64_t{1} << bit;
  const bool up = (mask & flag) != 0;
  switch (axis) {
    case kAxisX:
      return {mask ^ flag, Complex(1.0, 0.0)};
    case kAxisY:
      return {mask ^ flag, up ? Complex(0.0, -1.0) : Complex(0.0, 1.0)};
    default:
      return {mask, Complex(up ? 1.0 : -1.0, 0.0)};
  }
}

// One Hermitian summand: coeff * sigma_axis(bit) [* sigma_axis(bit)].
struct PauliTerm {
  double coeff;
  int n_factors;
  int axis[2];
  int bit[2];
};

std::vector<PauliTerm> hamiltonian_terms(const SpinBathSpec& spec) {
  std::vector<PauliTerm> terms;
  const int n = spec.n_env;
  terms.reserve(static_cast<std::size_t>(1 + n + 9 * n + 3 * n));

  // Zeeman: splitting delta means +/- delta/2 per spin.
  terms.push_back({0.5 * spec.central_splitting, 1, {kAxisZ, 0}, {0, 0}});
  for (int nu = 1; nu <= n; ++nu)
    terms.push_back({0.5 * spec.zeeman[nu - 1], 1, {kAxisZ, 0}, {nu, 0}});

  // System-environment coupling.
  for (int nu = 1; nu <= n; ++nu) {
    const Eigen::Matrix3d& gamma = spec.coupling_tensors[nu - 1];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double c = spec.coupling_strength * gamma(i, j);
        if (c == 0.0) continue;
        terms.push_back({c, 2, {i, j}, {0, nu}});
      }
  }

  // Intra-bath coupling on the ring, periodic closure.
  if (spec.topology == Topology::ring && spec.intra_kind != IntraKind::none &&
      spec.intra_strength != 0.0) {
    for (int nu = 1; nu <= n; ++nu) {
      const int mu = nu % n + 1;  // next neighbour
      terms.push_back({spec.intra_strength, 2, {kAxisX, kAxisX}, {nu, mu}});
      if (spec.intra_kind == IntraKind::xx_plus_yy ||
          spec.intra_kind == IntraKind::heisenberg)
        terms.push_back({spec.intra_strength, 2, {kAxisY, kAxisY}, {nu, mu}});
      if (spec.intra_kind == IntraKind::heisenberg)
        terms.push_back({spec.intra_strength, 2, {kAxisZ, kAxisZ}, {nu, mu}});
    }
  }
  return terms;
}

inline std::pair<std::uint64_t, Complex> apply_term(const PauliTerm& term,
                                                    std::uint64_t mask) {
  Complex amp(term.coeff, 0.0);
  std::uint64_t out = mask;
  for (int f = 0; f < term.n_factors; ++f) {
    auto [next, a] = apply_pauli(out, term.axis[f], term.bit[f]);
    out = next;
    amp *= a;
  }
  return {out, amp};
}

double env_energy(std::uint64_t mask, const std::vector<double>& zeeman) {
  double e = 0.0;
  for (std::size_t nu = 1; nu <= zeeman.size(); ++nu)
    if (mask & (std::uint64_t{1} << nu)) e += zeeman[nu - 1];
  return e;
}

// Band masks (central bit fixed) ordered by ascending environment energy,
// bitmask-ascending among degenerate states.
std::vector<std::uint64_t> band_masks(const SpinBathSpec& spec, int n_up,
                                      bool central_up) {
  std::vector<std::uint64_t> masks;
  const std::uint64_t n_states = std::uint64_t{1} << spec.n_env;
  for (std::uint64_t env = 0; env < n_states; ++env) {
    if (std::popcount(env) != n_up) continue;
    masks.push_back((env << 1) | (central_up ? 1 : 0));
  }
  std::stable_sort(masks.begin(), masks.end(),
                   [&](std::uint64_t a, std::uint64_t b) {
                     return env_energy(a, spec.zeeman) <
                            env_energy(b, spec.zeeman);
                   });
  return masks;
}

}  // namespace

void SpinBathSpec::validate() const {
  if (n_env < 1)
    throw std::invalid_argument("SpinBathSpec: n_env must be >= 1");
  if (static_cast<int>(zeeman.size()) != n_env)
    throw std::invalid_argument("SpinBathSpec: zeeman list must have n_env entries");
  if (static_cast<int>(coupling_tensors.size()) != n_env)
    throw std::invalid_argument(
        "SpinBathSpec: coupling tensor list must have n_env entries");
  if (topology == Topology::star && intra_kind != IntraKind::none)
    throw std::invalid_argument(
        "SpinBathSpec: star topology has no intra-bath links");
  if (topology == Topology::ring && n_env < 2)
    throw std::invalid_argument("SpinBathSpec: ring needs at least two spins");
  if (intra_strength < 0.0)
    throw std::invalid_argument("SpinBathSpec: intra_strength must be >= 0");
  if (band_k < 0 || band_k > n_env - 1)
    throw std::invalid_argument("SpinBathSpec: band_k outside [0, n_env-1]");
}

std::vector<Eigen::Matrix3d> sample_star_couplings(int n_env, double strength,
                                                   std::uint64_t seed) {
  if (n_env < 1)
    throw std::invalid_argument("sample_star_couplings: n_env must be >= 1");
  if (!(strength > 0.0))
    throw std::invalid_argument("sample_star_couplings: strength must be > 0");
  auto engine = make_engine(seed);
  std::uniform_real_distribution<double> uniform(-strength, strength);
  std::vector<Eigen::Matrix3d> tensors(static_cast<std::size_t>(n_env));
  for (auto& gamma : tensors)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) gamma(i, j) = uniform(engine);
  return tensors;
}

std::vector<double> inhomogeneous_zeeman(int n_env, double center,
                                         double spread, std::uint64_t seed) {
  if (n_env < 1)
    throw std::invalid_argument("inhomogeneous_zeeman: n_env must be >= 1");
  if (spread < 0.0)
    throw std::invalid_argument("inhomogeneous_zeeman: spread must be >= 0");
  std::vector<double> zeeman(static_cast<std::size_t>(n_env), center);
  if (spread > 0.0) {
    auto engine = make_engine(seed);
    std::uniform_real_distribution<double> uniform(center - 0.5 * spread,
                                                   center + 0.5 * spread);
    for (double& z : zeeman) z = uniform(engine);
  }
  return zeeman;
}

Eigen::MatrixXcd build_full_hamiltonian(const SpinBathSpec& spec) {
  spec.validate();
  if (spec.n_env > kMaxDenseSpins)
    throw ResourceError(
        "build_full_hamiltonian: dense construction limited to n_env <= " +
        std::to_string(kMaxDenseSpins) + ", use project_to_cross_subspace");
  const std::uint64_t dim = std::uint64_t{1} << (spec.n_env + 1);
  const auto terms = hamiltonian_terms(spec);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(static_cast<int>(dim),
                                              static_cast<int>(dim));
  for (std::uint64_t col = 0; col < dim; ++col)
    for (const PauliTerm& term : terms) {
      auto [row, amp] = apply_term(term, col);
      h(static_cast<int>(row), static_cast<int>(col)) += amp;
    }
  return h;
}

ProjectedHamiltonian project_to_cross_subspace(const SpinBathSpec& spec,
                                               int band_k) {
  spec.validate();
  if (band_k < 0 || band_k > spec.n_env - 1)
    throw std::invalid_argument(
        "project_to_cross_subspace: band_k outside [0, n_env-1]");

  // Resonance pairs |0, k+1 up> with |1, k up>.
  const auto ground = band_masks(spec, band_k + 1, /*central_up=*/false);
  const auto excited = band_masks(spec, band_k, /*central_up=*/true);
  const int g_prime = static_cast<int>(ground.size());
  const int g = static_cast<int>(excited.size());
  const int d = g + g_prime;

  ProjectedHamiltonian proj;
  proj.state_masks.reserve(static_cast<std::size_t>(d));
  proj.state_masks.insert(proj.state_masks.end(), ground.begin(), ground.end());
  proj.state_masks.insert(proj.state_masks.end(), excited.begin(),
                          excited.end());

  double mean_zeeman = 0.0;
  double min_env = 0.0, max_env = 0.0;
  for (double z : spec.zeeman) mean_zeeman += z;
  mean_zeeman /= static_cast<double>(spec.n_env);
  for (int i = 0; i < d; ++i) {
    const double e = env_energy(proj.state_masks[i], spec.zeeman);
    if (i == 0) min_env = max_env = e;
    min_env = std::min(min_env, e);
    max_env = std::max(max_env, e);
  }
  proj.basis = build_cross_basis(BandPair(g, g_prime, spec.central_splitting,
                                          mean_zeeman, max_env - min_env));

  // Index of each cross mask in the combined ordering; -1 marks states
  // outside the subspace.
  std::vector<int> index(std::size_t{1} << (spec.n_env + 1), -1);
  for (int i = 0; i < d; ++i)
    index[proj.state_masks[static_cast<std::size_t>(i)]] = i;

  const auto terms = hamiltonian_terms(spec);
  proj.matrix = Eigen::MatrixXcd::Zero(d, d);
  for (int col = 0; col < d; ++col) {
    const std::uint64_t mask = proj.state_masks[static_cast<std::size_t>(col)];
    for (const PauliTerm& term : terms) {
      auto [image, amp] = apply_term(term, mask);
      const int row = index[image];
      if (row >= 0) proj.matrix(row, col) += amp;
    }
  }
  return proj;
}

}  // namespace eigenbath

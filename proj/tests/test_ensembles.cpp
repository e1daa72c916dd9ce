#include <doctest.h>

#include <cmath>
#include <complex>

#include "eigenbath/analysis.hpp"
#include "eigenbath/ensembles.hpp"
#include "eigenbath/rng.hpp"

using namespace eigenbath;

TEST_CASE("sample_gue is Hermitian and deterministic") {
  const Eigen::MatrixXcd h = sample_gue(455, 1.0, 20240117);
  CHECK(hermiticity_residual(h) < 1e-12);
  const Eigen::MatrixXcd again = sample_gue(455, 1.0, 20240117);
  CHECK((h - again).cwiseAbs().maxCoeff() == 0.0);
  const Eigen::MatrixXcd other = sample_gue(455, 1.0, 20240118);
  CHECK((h - other).cwiseAbs().maxCoeff() > 0.0);
  CHECK_THROWS_AS(sample_gue(1, 1.0, 1), std::domain_error);
  CHECK_THROWS_AS(sample_gue(4, 0.0, 1), std::invalid_argument);
}

TEST_CASE("sample_gue entry statistics over an ensemble") {
  // Means of the Gaussian entries vanish; 5-sigma bands on 1e5 draws.
  const int n_draws = 100000;
  double sum_diag = 0.0, sum_re = 0.0, sum_im = 0.0, sum_abs2 = 0.0;
  for (int rep = 0; rep < n_draws; ++rep) {
    const Eigen::MatrixXcd h = sample_gue(2, 1.0, derive_seed(7, rep));
    sum_diag += h(0, 0).real() + h(1, 1).real();
    sum_re += h(0, 1).real();
    sum_im += h(0, 1).imag();
    sum_abs2 += std::norm(h(0, 1));
  }
  const double sigma_diag = std::sqrt(2.0) / std::sqrt(2.0 * n_draws);
  CHECK(std::abs(sum_diag / (2.0 * n_draws)) < 5.0 * sigma_diag);
  const double sigma_off = 1.0 / std::sqrt(static_cast<double>(n_draws));
  CHECK(std::abs(sum_re / n_draws) < 5.0 * sigma_off);
  CHECK(std::abs(sum_im / n_draws) < 5.0 * sigma_off);
  // |H01|^2 averages 2*scale^2 with variance 4, so sigma_mean = 2/sqrt(n).
  CHECK(std::abs(sum_abs2 / n_draws - 2.0) < 5.0 * 2.0 / std::sqrt(n_draws));
}

TEST_CASE("sample_interaction_block statistics and limits") {
  const Eigen::MatrixXcd v = sample_interaction_block(91, 364, 1.0, 5);
  CHECK(v.rows() == 91);
  CHECK(v.cols() == 364);

  const int n_draws = 100000;
  double sum_abs2 = 0.0;
  for (int rep = 0; rep < n_draws; ++rep)
    sum_abs2 += std::norm(sample_interaction_block(1, 1, 1.0, derive_seed(11, rep))(0, 0));
  CHECK(std::abs(sum_abs2 / n_draws - 2.0) < 5.0 * 2.0 / std::sqrt(n_draws));

  const Eigen::MatrixXcd tiny = sample_interaction_block(2, 3, 1e-150, 3);
  CHECK(tiny.cwiseAbs().maxCoeff() < 1e-100);
  CHECK_THROWS_AS(sample_interaction_block(2, 3, 0.0, 3), std::invalid_argument);
}

TEST_CASE("build_structured block layout") {
  SUBCASE("degenerate bands on resonance have zero diagonal") {
    const BandPair pair(3, 7);
    const Eigen::MatrixXcd v = sample_interaction_block(3, 7, 1.0, 99);
    const Eigen::MatrixXcd h =
        build_structured(pair, EnvSpectrum::degenerate(), v);
    for (int i = 0; i < 10; ++i) CHECK(h(i, i) == std::complex<double>(0.0));
    CHECK((h.block(7, 0, 3, 7) - v).cwiseAbs().maxCoeff() == 0.0);
    CHECK((h.block(0, 7, 7, 3) - v.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(hermiticity_residual(h) == 0.0);
  }

  SUBCASE("equidistant offsets read off the ground block") {
    const BandPair pair(2, 3, 1.0, 1.0, 1.0);
    const Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(2, 3);
    const Eigen::MatrixXcd h =
        build_structured(pair, EnvSpectrum::equidistant(1.0), v);
    CHECK(h(0, 0).real() == doctest::Approx(0.0));
    CHECK(h(1, 1).real() == doctest::Approx(0.5));
    CHECK(h(2, 2).real() == doctest::Approx(1.0));
    CHECK(h(3, 3).real() == doctest::Approx(0.0));
    CHECK(h(4, 4).real() == doctest::Approx(1.0));
  }

  SUBCASE("detuning splits the blocks") {
    const BandPair pair(1, 1, 1.5, 1.0);
    const Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(1, 1);
    const Eigen::MatrixXcd h =
        build_structured(pair, EnvSpectrum::degenerate(), v);
    CHECK(h(0, 0).real() == doctest::Approx(-0.25));
    CHECK(h(1, 1).real() == doctest::Approx(0.25));
  }

  SUBCASE("single-level bands place the level at offset zero") {
    const BandPair pair(1, 3, 1.0, 1.0, 2.0);
    const Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(1, 3);
    const Eigen::MatrixXcd h =
        build_structured(pair, EnvSpectrum::equidistant(2.0), v);
    CHECK(h(3, 3).real() == 0.0);  // lone excited-block level
  }

  SUBCASE("shape mismatch is rejected") {
    const BandPair pair(3, 7);
    CHECK_THROWS_AS(build_structured(pair, EnvSpectrum::degenerate(),
                                     Eigen::MatrixXcd::Zero(7, 3)),
                    std::invalid_argument);
  }
}

TEST_CASE("degenerate structured square splits into V'V and VV'") {
  const BandPair pair(4, 9);
  const Eigen::MatrixXcd v = sample_interaction_block(4, 9, 0.8, 321);
  const Eigen::MatrixXcd h =
      build_structured(pair, EnvSpectrum::degenerate(), v);
  const Eigen::MatrixXcd h2 = h * h;
  CHECK((h2.block(0, 0, 9, 9) - v.adjoint() * v).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((h2.block(9, 9, 4, 4) - v * v.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(h2.block(9, 0, 4, 9).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("degenerate structured kernel dimension is g' - g") {
  const BandPair pair(3, 7);
  const Eigen::MatrixXcd v = sample_interaction_block(3, 7, 1.0, 77);
  const Eigen::MatrixXcd h =
      build_structured(pair, EnvSpectrum::degenerate(), v);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  const double norm = solver.eigenvalues().cwiseAbs().maxCoeff();
  int zeros = 0;
  for (int i = 0; i < 10; ++i)
    if (std::abs(solver.eigenvalues()(i)) < 1e-9 * norm) ++zeros;
  CHECK(zeros == 4);
}

TEST_CASE("scale_env_spectrum") {
  const BandPair pair(3, 7, 1.0, 1.0, 2.0);
  const Eigen::MatrixXcd v = sample_interaction_block(3, 7, 1.0, 15);
  const Eigen::MatrixXcd h =
      build_structured(pair, EnvSpectrum::equidistant(2.0), v);

  SUBCASE("identity at s = 1") {
    CHECK((scale_env_spectrum(h, 1.0, 7) - h).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("s = 0 collapses the diagonal onto the trace average") {
    const Eigen::MatrixXcd flat = scale_env_spectrum(h, 0.0, 7);
    const std::complex<double> avg = h.trace() / 10.0;
    for (int i = 0; i < 10; ++i)
      CHECK(std::abs(flat(i, i) - avg) < 1e-14);
    CHECK((flat.block(7, 0, 3, 7) - v).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("relative strength is linear in s") {
    const double base = relative_strength(h, 7);
    for (double s : {0.5, 2.0, 3.75}) {
      const double scaled = relative_strength(scale_env_spectrum(h, s, 7), 7);
      CHECK(scaled == doctest::Approx(s * base).epsilon(1e-12));
    }
  }

  SUBCASE("argument validation") {
    CHECK_THROWS_AS(scale_env_spectrum(h, -1.0, 7), std::invalid_argument);
    CHECK_THROWS_AS(scale_env_spectrum(h, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(scale_env_spectrum(h, 1.0, 10), std::invalid_argument);
  }
}

TEST_CASE("explicit spectrum kind injects given levels") {
  const BandPair pair(2, 3);
  const EnvSpectrum spectrum =
      EnvSpectrum::explicit_levels({0.1, 0.4, 0.9}, {0.2, 0.3});
  const Eigen::MatrixXcd h =
      build_structured(pair, spectrum, Eigen::MatrixXcd::Zero(2, 3));
  CHECK(h(0, 0).real() == doctest::Approx(0.1));
  CHECK(h(1, 1).real() == doctest::Approx(0.4));
  CHECK(h(2, 2).real() == doctest::Approx(0.9));
  CHECK(h(3, 3).real() == doctest::Approx(0.2));
  CHECK(h(4, 4).real() == doctest::Approx(0.3));
  CHECK_THROWS_AS(
      build_structured(BandPair(2, 4), spectrum, Eigen::MatrixXcd::Zero(2, 4)),
      std::invalid_argument);
}

#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "eigenbath/config.hpp"
#include "eigenbath/subspace.hpp"

namespace eigenbath {

// One ensemble member: a cross-subspace Hamiltonian and its basis.
struct ModelInstance {
  Eigen::MatrixXcd hamiltonian;
  CrossStateBasis basis;
};

// Builds member `member_seed` of the configured family.  Spin families
// sample couplings (and, where applicable, splittings) from sub-streams of
// the member seed, so equal seeds reproduce equal instances exactly.
ModelInstance build_instance(const RunConfig& cfg, std::uint64_t member_seed);

// Executes the configured task and writes its outputs.  Throws ConfigError,
// ResourceError, IoError or std::exception subclasses on failure; output
// bytes depend only on the configuration and seed, never on `jobs`.
void run(const RunConfig& cfg);

}  // namespace eigenbath

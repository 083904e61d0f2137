#pragma once

#include <array>

#include "pendsim/milburn.hpp"
#include "pendsim/numerics.hpp"

namespace pendsim {

// Two-qubit teleportation through a noisy resource state: the sender
// Bell-measures, the receiver applies the paired Pauli correction. With the
// resource rho the output is
//   rho_out = sum_ij p_i p_j (sigma_i x sigma_j) rho_in (sigma_i x sigma_j),
// where p_i = tr[E^i rho] over the Bell projectors listed below and the
// Pauli pairing is (psi-, phi-, phi+, psi+) <-> (I, X, Y, Z). The psi-
// resource then teleports perfectly, which fixes the convention.

/// Bell vectors in channel order: psi-, phi-, phi+, psi+.
std::array<ComplexVector, 4> bell_states();

/// Projectors E^i onto the Bell vectors, same order. Resolve the identity
/// and are mutually orthogonal.
struct BellProjectors {
  std::array<ComplexMatrix, 4> e;
  static const BellProjectors& get();
};

/// Measurement distribution of a two-qubit resource state over the Bell
/// basis; the joint table factorizes as p_ij = p_i * p_j.
struct ChannelDistribution {
  std::array<double, 4> p;
  double joint(int i, int j) const { return p[i] * p[j]; }
};

/// p_i = tr[E^i rho]; sums to 1.
std::array<double, 4> bell_probabilities(const DensityMatrix& rho_channel);

ChannelDistribution channel_distribution(const DensityMatrix& rho_channel);

/// Teleported output of rho_in through the resource rho_channel.
DensityMatrix channel_output(const DensityMatrix& rho_in, const DensityMatrix& rho_channel);

/// (tr sqrt(sqrt(a) b sqrt(a)))^2, clamped to [0, 1].
double uhlmann_fidelity(const DensityMatrix& rho_a, const DensityMatrix& rho_b);

/// uhlmann_fidelity of rho_in against its teleported image.
double teleport_fidelity(const DensityMatrix& rho_channel, const DensityMatrix& rho_in);

/// Classical benchmark: quantum transmission pays off above this.
inline constexpr double kClassicalFidelityThreshold = 2.0 / 3.0;

}  // namespace pendsim

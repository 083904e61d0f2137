#pragma once

#include "pendsim/numerics.hpp"
#include "pendsim/pendular.hpp"

namespace pendsim {

// Chains of 2 or 3 identical molecules in the joint qubit basis
// {|00..>, |00..1>, ...} with site 0 on the most significant bit.

inline constexpr double kDefaultAlpha = 1.5707963267948966;  // pi/2

/// Linear equidistant chain: `omega` = Omega/B between nearest neighbours,
/// `alpha` = angle between the chain axis and the field. For n = 3 the
/// outer pair is coupled at omega/8 (twice the distance, 1/r^3 law).
struct ChainGeometry {
  int n = 2;
  double omega = 0.0;
  double alpha = kDefaultAlpha;
};

/// 2^n-dimensional chain Hamiltonian in units of B, with its cached
/// eigendecomposition.
struct SystemHamiltonian {
  int n = 0;
  int dim = 0;
  ComplexMatrix matrix;
  HermitianEigenResult spectral;
};

/// diag(E0, E1) on `site`, identity elsewhere.
ComplexMatrix site_energy_term(const PendularQubit& q, int site, int n);

/// omega_ij * (1 - 3 cos^2 alpha) times the product of the 2x2 orientation
/// block [[C0, Ct], [Ct, C1]] on the two sites and identity elsewhere.
ComplexMatrix pair_interaction_term(const PendularQubit& q, double omega_ij,
                                    double alpha, int site_i, int site_j, int n);

/// Sum of all site terms and all pair terms for the chain, with the
/// spectral decomposition computed up front.
SystemHamiltonian build_hamiltonian(const PendularQubit& q, const ChainGeometry& geom);

}  // namespace pendsim

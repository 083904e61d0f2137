#pragma once

#include <vector>

#include "pendsim/milburn.hpp"
#include "pendsim/numerics.hpp"

namespace pendsim {

// Negativity N(rho) = sum_i |lambda_i| - 1 over the eigenvalues of the
// partial transpose, and its tripartite geometric mean over the three
// one-vs-two splits of a 3-qubit state.

/// A proper nonempty subset of the n qubit sites. Site 0 sits on the most
/// significant bit of the basis index, matching the kron ordering.
class Bipartition {
 public:
  Bipartition(int n_sites, const std::vector<int>& part_a);

  int n_sites() const { return n_; }
  unsigned mask() const { return mask_; }
  /// Bits of the basis index belonging to part A.
  unsigned index_mask() const;

 private:
  int n_;
  unsigned mask_;  // bit s set <=> site s in part A
};

/// Transpose the part-A indices of an n-qubit state, leaving the rest.
ComplexMatrix partial_transpose(const DensityMatrix& rho, const Bipartition& split);

/// Sum of |eigenvalues| of the partial transpose minus one, clamped at 0.
double negativity(const DensityMatrix& rho, const Bipartition& split);

/// Geometric mean of the negativities over the splits {BC|A, AC|B, AB|C}
/// of a 3-qubit state; zero whenever any factor vanishes.
double tripartite_negativity(const DensityMatrix& rho);

}  // namespace pendsim

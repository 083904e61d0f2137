#include "pendsim/entanglement.hpp"

#include <cmath>
#include <stdexcept>

namespace pendsim {

Bipartition::Bipartition(int n_sites, const std::vector<int>& part_a) : n_(n_sites), mask_(0) {
  if (n_ < 2) {
    throw std::invalid_argument("Bipartition: need at least 2 sites");
  }
  for (int s : part_a) {
    if (s < 0 || s >= n_) {
      throw std::invalid_argument("Bipartition: site " + std::to_string(s) + " out of range");
    }
    mask_ |= 1u << s;
  }
  const unsigned full = (1u << n_) - 1u;
  if (mask_ == 0u || mask_ == full) {
    throw std::invalid_argument("Bipartition: both parts must be nonempty");
  }
}

unsigned Bipartition::index_mask() const {
  // site s occupies index bit (n-1-s)
  unsigned m = 0;
  for (int s = 0; s < n_; ++s) {
    if (mask_ & (1u << s)) m |= 1u << (n_ - 1 - s);
  }
  return m;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, const Bipartition& split) {
  const int dim = rho.dim();
  if (dim != (1 << split.n_sites())) {
    throw std::invalid_argument("partial_transpose: state dimension does not match bipartition");
  }
  const unsigned a = split.index_mask();
  ComplexMatrix out(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const unsigned ui = static_cast<unsigned>(i), uj = static_cast<unsigned>(j);
      const unsigned ti = (ui & ~a) | (uj & a);
      const unsigned tj = (uj & ~a) | (ui & a);
      out(ti, tj) = rho.matrix()(i, j);
    }
  }
  return out;
}

double negativity(const DensityMatrix& rho, const Bipartition& split) {
  const ComplexMatrix pt = partial_transpose(rho, split);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(pt, Eigen::EigenvaluesOnly);
  const double value = solver.eigenvalues().cwiseAbs().sum() - 1.0;
  // Separable-state PT spectra straddle zero at machine precision.
  return std::max(value, 0.0);
}

double tripartite_negativity(const DensityMatrix& rho) {
  if (rho.dim() != 8) {
    throw std::invalid_argument("tripartite_negativity: state must be 3 qubits (dim 8)");
  }
  double product = 1.0;
  for (int site = 0; site < 3; ++site) {
    const double n = negativity(rho, Bipartition(3, {site}));
    if (n <= 0.0) return 0.0;
    product *= n;
  }
  return std::cbrt(product);
}

}  // namespace pendsim

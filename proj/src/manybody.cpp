#include "pendsim/manybody.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pendsim {

namespace {

void check_chain(int n) {
  if (n != 2 && n != 3) {
    throw std::invalid_argument("chain size must be 2 or 3, got " + std::to_string(n));
  }
}

void check_site(int site, int n) {
  if (site < 0 || site >= n) {
    throw std::invalid_argument("site " + std::to_string(site) +
                                " out of range for n = " + std::to_string(n));
  }
}

// kron chain with `block` on the listed sites and I_2 everywhere else.
ComplexMatrix place_blocks(const ComplexMatrix& block, std::initializer_list<int> sites, int n) {
  const ComplexMatrix eye = ComplexMatrix::Identity(2, 2);
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int k = 0; k < n; ++k) {
    bool hit = false;
    for (int s : sites) hit = hit || (s == k);
    out = kron(out, hit ? block : eye);
  }
  return out;
}

}  // namespace

ComplexMatrix site_energy_term(const PendularQubit& q, int site, int n) {
  check_chain(n);
  check_site(site, n);
  ComplexMatrix level = ComplexMatrix::Zero(2, 2);
  level(0, 0) = q.E0;
  level(1, 1) = q.E1;
  return place_blocks(level, {site}, n);
}

ComplexMatrix pair_interaction_term(const PendularQubit& q, double omega_ij,
                                    double alpha, int site_i, int site_j, int n) {
  check_chain(n);
  check_site(site_i, n);
  check_site(site_j, n);
  if (site_i == site_j) {
    throw std::invalid_argument("pair_interaction_term: sites must be distinct");
  }
  if (alpha < 0.0 || alpha > std::numbers::pi) {
    throw std::invalid_argument("pair_interaction_term: alpha must lie in [0, pi]");
  }
  ComplexMatrix orient = ComplexMatrix::Zero(2, 2);
  orient(0, 0) = q.C0;
  orient(0, 1) = q.Ct;
  orient(1, 0) = q.Ct;
  orient(1, 1) = q.C1;
  const double angular = 1.0 - 3.0 * std::cos(alpha) * std::cos(alpha);
  return omega_ij * angular * place_blocks(orient, {site_i, site_j}, n);
}

SystemHamiltonian build_hamiltonian(const PendularQubit& q, const ChainGeometry& geom) {
  check_chain(geom.n);
  if (geom.omega < 0.0) {
    throw std::invalid_argument("build_hamiltonian: omega must be >= 0");
  }
  const int dim = 1 << geom.n;
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (int s = 0; s < geom.n; ++s) {
    h += site_energy_term(q, s, geom.n);
  }
  if (geom.n == 2) {
    h += pair_interaction_term(q, geom.omega, geom.alpha, 0, 1, 2);
  } else {
    h += pair_interaction_term(q, geom.omega, geom.alpha, 0, 1, 3);
    h += pair_interaction_term(q, geom.omega, geom.alpha, 1, 2, 3);
    h += pair_interaction_term(q, geom.omega / 8.0, geom.alpha, 0, 2, 3);
  }
  SystemHamiltonian sys;
  sys.n = geom.n;
  sys.dim = dim;
  sys.matrix = h;
  sys.spectral = hermitian_eig(h);
  return sys;
}

}  // namespace pendsim

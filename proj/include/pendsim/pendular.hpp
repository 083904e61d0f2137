#pragma once

#include <stdexcept>

#include "pendsim/numerics.hpp"

namespace pendsim {

// Single polar molecule in a static electric field, H = J^2 - w*cos(theta)
// in units of the rotational constant, expanded over the M = 0 spherical
// harmonics Y_{J,0}. The reduced field w is the ratio of Stark energy to
// rotational constant; it is the only field parameter here.

inline constexpr int kDefaultJmax = 40;
inline constexpr int kMaxJmax = 200;

/// Thrown when the basis sweep fails to stabilize the qubit data.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Converged qubit data for one molecule at reduced field w: the two lowest
/// M = 0 levels, their cos(theta) matrix elements, and the expansion
/// coefficients over Y_{J,0}, J = 0..jmax.
///
/// Sign convention: the Y_00 coefficient of |0> and the Y_10 coefficient of
/// |1> are positive. Observables do not care, but this pins Ct bit-for-bit.
struct PendularQubit {
  double w = 0.0;
  int jmax = 0;
  double E0 = 0.0, E1 = 0.0;   // in units of B
  double C0 = 0.0, C1 = 0.0, Ct = 0.0;
  RealVector coeffs0, coeffs1;
};

/// <Y_{J,0}|cos(theta)|Y_{J+1,0}> = (J+1)/sqrt((2J+1)(2J+3)).
/// All other cos(theta) matrix elements between M = 0 harmonics vanish.
double cos_theta_element(int j);

/// (jmax+1)-dimensional rotor-plus-Stark Hamiltonian: diagonal J(J+1),
/// first off-diagonal -w * cos_theta_element(J). Real symmetric tridiagonal.
ComplexMatrix build_stark_hamiltonian(double w, int jmax);

/// Diagonalize the Stark Hamiltonian and extract the qubit pair.
PendularQubit solve_qubit(double w, int jmax = kDefaultJmax);

/// Rayleigh-Schrodinger qubit for small w: first-order states
///   |0> ~ Y_00 + w/(2 sqrt 3) Y_10
///   |1> ~ Y_10 - w/(2 sqrt 3) Y_00 + w/(2 sqrt 15) Y_20
/// and second-order energies E0 = -w^2/6, E1 = 2 + w^2/10. Serves as an
/// independent oracle for solve_qubit at w <~ 1.
PendularQubit perturbative_qubit(double w);

/// Smallest jmax (from 10, stepping by 5) at which E0, E1, C0, C1, Ct each
/// move by less than `tol` when jmax grows by 10. Throws ConvergenceError
/// if no candidate up to kMaxJmax qualifies.
int converge_jmax(double w, double tol);

}  // namespace pendsim

#pragma once

#include "pendsim/manybody.hpp"
#include "pendsim/numerics.hpp"

namespace pendsim {

// Intrinsic-decoherence dynamics: in the energy eigenbasis every coherence
// decays and rotates as
//   rho_mn(t) = exp(-(gamma t / 2)(e_m - e_n)^2 - i (e_m - e_n) t) rho_mn(0),
// evaluated in closed form (no timestep integration). gamma >= 0 is the
// decoherence factor in units of hbar/B; larger gamma decays faster.

/// Gaps at or below this are treated as degenerate inside dephased_limit.
/// The propagator itself always uses the raw gap.
inline constexpr double kDegenerateGapTol = 1e-9;

/// Unit-trace Hermitian PSD matrix; validated on construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  /// Projector onto `psi` (normalized first).
  static DensityMatrix pure(const ComplexVector& psi);

  const ComplexMatrix& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

 private:
  ComplexMatrix m_;
};

/// Spectral data of the system Hamiltonian plus the decoherence factor.
/// One propagator serves any number of (rho0, t) evolutions.
struct MilburnPropagator {
  HermitianEigenResult spectral;
  double gamma = 0.0;

  MilburnPropagator(HermitianEigenResult spectral_in, double gamma_in);
  MilburnPropagator(const SystemHamiltonian& system, double gamma_in)
      : MilburnPropagator(system.spectral, gamma_in) {}

  int dim() const { return spectral.dim(); }
};

/// Closed-form state at time t >= 0 (in units of hbar/B).
DensityMatrix evolve(const DensityMatrix& rho0, const MilburnPropagator& prop, double t);

/// -i[H, rho] - (gamma/2)[H, [H, rho]]; trace-zero Hermitian.
ComplexMatrix master_equation_rhs(const DensityMatrix& rho, const ComplexMatrix& h,
                                  double gamma);
inline ComplexMatrix master_equation_rhs(const DensityMatrix& rho,
                                         const SystemHamiltonian& system, double gamma) {
  return master_equation_rhs(rho, system.matrix, gamma);
}

/// t -> infinity state for gamma > 0: eigenbasis coherences across gaps
/// larger than kDegenerateGapTol are zeroed, everything else kept. The
/// result does not depend on the value of gamma.
DensityMatrix dephased_limit(const DensityMatrix& rho0, const MilburnPropagator& prop);

}  // namespace pendsim

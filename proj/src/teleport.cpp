#include "pendsim/teleport.hpp"

#include <cmath>
#include <stdexcept>

namespace pendsim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_two_qubit(const DensityMatrix& rho, const char* op) {
  if (rho.dim() != 4) {
    throw std::invalid_argument(std::string(op) + ": state must be two qubits (dim 4)");
  }
}

std::array<ComplexMatrix, 4> make_paulis() {
  ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  ComplexMatrix x = ComplexMatrix::Zero(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  ComplexMatrix y = ComplexMatrix::Zero(2, 2);
  y(0, 1) = Complex(0.0, -1.0);
  y(1, 0) = Complex(0.0, 1.0);
  ComplexMatrix z = ComplexMatrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  return {id, x, y, z};
}

// The 16 correction unitaries sigma_i x sigma_j, flattened as 4*i + j.
const std::array<ComplexMatrix, 16>& correction_unitaries() {
  static const std::array<ComplexMatrix, 16> table = [] {
    const auto pauli = make_paulis();
    std::array<ComplexMatrix, 16> t;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) t[4 * i + j] = kron(pauli[i], pauli[j]);
    return t;
  }();
  return table;
}

}  // namespace

std::array<ComplexVector, 4> bell_states() {
  ComplexVector psi_minus = ComplexVector::Zero(4);
  psi_minus[1] = kInvSqrt2;
  psi_minus[2] = -kInvSqrt2;
  ComplexVector phi_minus = ComplexVector::Zero(4);
  phi_minus[0] = kInvSqrt2;
  phi_minus[3] = -kInvSqrt2;
  ComplexVector phi_plus = ComplexVector::Zero(4);
  phi_plus[0] = kInvSqrt2;
  phi_plus[3] = kInvSqrt2;
  ComplexVector psi_plus = ComplexVector::Zero(4);
  psi_plus[1] = kInvSqrt2;
  psi_plus[2] = kInvSqrt2;
  return {psi_minus, phi_minus, phi_plus, psi_plus};
}

const BellProjectors& BellProjectors::get() {
  static const BellProjectors instance = [] {
    BellProjectors p;
    const auto states = bell_states();
    for (int i = 0; i < 4; ++i) p.e[i] = states[i] * states[i].adjoint();
    return p;
  }();
  return instance;
}

std::array<double, 4> bell_probabilities(const DensityMatrix& rho_channel) {
  check_two_qubit(rho_channel, "bell_probabilities");
  const auto states = bell_states();
  std::array<double, 4> p{};
  for (int i = 0; i < 4; ++i) {
    const Complex expect = states[i].adjoint() * rho_channel.matrix() * states[i];
    p[i] = std::max(expect.real(), 0.0);
  }
  return p;
}

ChannelDistribution channel_distribution(const DensityMatrix& rho_channel) {
  return ChannelDistribution{bell_probabilities(rho_channel)};
}

DensityMatrix channel_output(const DensityMatrix& rho_in, const DensityMatrix& rho_channel) {
  check_two_qubit(rho_in, "channel_output");
  const auto p = bell_probabilities(rho_channel);
  const auto& unitaries = correction_unitaries();
  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double weight = p[i] * p[j];
      if (weight == 0.0) continue;
      const ComplexMatrix& u = unitaries[4 * i + j];
      out += weight * (u * rho_in.matrix() * u);
    }
  }
  return DensityMatrix(0.5 * (out + out.adjoint()));
}

double uhlmann_fidelity(const DensityMatrix& rho_a, const DensityMatrix& rho_b) {
  if (rho_a.dim() != rho_b.dim()) {
    throw std::invalid_argument("uhlmann_fidelity: dimension mismatch");
  }
  const ComplexMatrix root_a = psd_sqrt(rho_a.matrix());
  ComplexMatrix inner = root_a * rho_b.matrix() * root_a;
  inner = 0.5 * (inner + inner.adjoint());
  const double trace_root = psd_sqrt(inner).trace().real();
  const double fidelity = trace_root * trace_root;
  return std::clamp(fidelity, 0.0, 1.0);
}

double teleport_fidelity(const DensityMatrix& rho_channel, const DensityMatrix& rho_in) {
  return uhlmann_fidelity(rho_in, channel_output(rho_in, rho_channel));
}

}  // namespace pendsim

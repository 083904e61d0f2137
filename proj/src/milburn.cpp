#include "pendsim/milburn.hpp"

#include <cmath>
#include <stdexcept>

namespace pendsim {

namespace {

void check_dims(const DensityMatrix& rho, const MilburnPropagator& prop, const char* op) {
  if (rho.dim() != prop.dim()) {
    throw std::invalid_argument(std::string(op) + ": state dimension " +
                                std::to_string(rho.dim()) +
                                " does not match propagator dimension " +
                                std::to_string(prop.dim()));
  }
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1) {
    throw std::invalid_argument("DensityMatrix: matrix must be square");
  }
  if (!is_hermitian(m_)) {
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  }
  if (std::abs(m_.trace() - Complex(1.0, 0.0)) > kHermitianTol) {
    throw std::invalid_argument("DensityMatrix: trace must equal 1");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kPsdTol) {
    throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
  }
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) {
    throw std::invalid_argument("DensityMatrix::pure: zero state vector");
  }
  ComplexVector unit = psi / norm;
  return DensityMatrix(unit * unit.adjoint());
}

MilburnPropagator::MilburnPropagator(HermitianEigenResult spectral_in, double gamma_in)
    : spectral(std::move(spectral_in)), gamma(gamma_in) {
  if (gamma < 0.0) {
    throw std::invalid_argument("MilburnPropagator: gamma must be >= 0");
  }
}

DensityMatrix evolve(const DensityMatrix& rho0, const MilburnPropagator& prop, double t) {
  if (t < 0.0) throw std::invalid_argument("evolve: t must be >= 0");
  check_dims(rho0, prop, "evolve");

  const ComplexMatrix& v = prop.spectral.eigenvectors;
  const RealVector& e = prop.spectral.eigenvalues;
  const int dim = prop.dim();

  ComplexMatrix in_eigen = v.adjoint() * rho0.matrix() * v;
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      const double gap = e[m] - e[n];
      const double decay = std::exp(-0.5 * prop.gamma * t * gap * gap);
      in_eigen(m, n) *= decay * std::exp(Complex(0.0, -gap * t));
    }
  }
  ComplexMatrix out = v * in_eigen * v.adjoint();
  return DensityMatrix(0.5 * (out + out.adjoint()));
}

ComplexMatrix master_equation_rhs(const DensityMatrix& rho, const ComplexMatrix& h,
                                  double gamma) {
  if (h.rows() != rho.dim() || h.cols() != rho.dim()) {
    throw std::invalid_argument("master_equation_rhs: dimension mismatch");
  }
  const ComplexMatrix comm = h * rho.matrix() - rho.matrix() * h;
  const ComplexMatrix double_comm = h * comm - comm * h;
  return Complex(0.0, -1.0) * comm - 0.5 * gamma * double_comm;
}

DensityMatrix dephased_limit(const DensityMatrix& rho0, const MilburnPropagator& prop) {
  if (!(prop.gamma > 0.0)) {
    throw std::invalid_argument("dephased_limit: gamma must be > 0 (no dephasing at gamma = 0)");
  }
  check_dims(rho0, prop, "dephased_limit");

  const ComplexMatrix& v = prop.spectral.eigenvectors;
  const RealVector& e = prop.spectral.eigenvalues;
  const int dim = prop.dim();

  ComplexMatrix in_eigen = v.adjoint() * rho0.matrix() * v;
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      if (std::abs(e[m] - e[n]) > kDegenerateGapTol) in_eigen(m, n) = Complex(0.0, 0.0);
    }
  }
  ComplexMatrix out = v * in_eigen * v.adjoint();
  return DensityMatrix(0.5 * (out + out.adjoint()));
}

}  // namespace pendsim

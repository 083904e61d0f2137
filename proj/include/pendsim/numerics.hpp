#pragma once

#include <Eigen/Dense>
#include <complex>

namespace pendsim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Module-wide tolerances. Double precision at dim <= 2^5 meets these with
// a wide margin, so they are fixed rather than configurable.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kResidualTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;

/// Largest entry magnitude, max_ij |A(i,j)|.
double max_abs(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTol);

/// Eigendecomposition of a Hermitian matrix. `eigenvalues` ascending,
/// `eigenvectors` unitary with columns matching the eigenvalue order.
struct HermitianEigenResult {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  int dim() const { return static_cast<int>(eigenvalues.size()); }
  ComplexMatrix reconstruct() const;
};

/// Decompose a Hermitian matrix. Rejects non-square input and input whose
/// max deviation |A - A^dagger| exceeds kHermitianTol.
HermitianEigenResult hermitian_eig(const ComplexMatrix& a);

/// Kronecker product, out[(i*rB+k), (j*cB+l)] = A(i,j) * B(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Principal square root of a Hermitian positive-semidefinite matrix.
/// Eigenvalues in [-kPsdTol, 0) are clamped to zero; anything lower is
/// rejected as not PSD.
ComplexMatrix psd_sqrt(const ComplexMatrix& a);

}  // namespace pendsim

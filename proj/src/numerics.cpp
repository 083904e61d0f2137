#include "pendsim/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace pendsim {

double max_abs(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs(a - a.adjoint()) <= tol;
}

ComplexMatrix HermitianEigenResult::reconstruct() const {
  return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
}

HermitianEigenResult hermitian_eig(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("hermitian_eig: matrix is not square (" +
                                std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + ")");
  }
  if (!is_hermitian(a)) {
    throw std::invalid_argument(
        "hermitian_eig: matrix is not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
  }
  // Eigen returns eigenvalues in increasing order already.
  return HermitianEigenResult{solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index ra = a.rows(), ca = a.cols();
  const Eigen::Index rb = b.rows(), cb = b.cols();
  ComplexMatrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index j = 0; j < ca; ++j)
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
  HermitianEigenResult eig = hermitian_eig(a);
  RealVector lam = eig.eigenvalues;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam[i] < -kPsdTol) {
      throw std::invalid_argument(
          "psd_sqrt: matrix is not positive semidefinite (eigenvalue " +
          std::to_string(lam[i]) + ")");
    }
    lam[i] = std::sqrt(std::max(lam[i], 0.0));
  }
  ComplexMatrix s =
      eig.eigenvectors * lam.asDiagonal() * eig.eigenvectors.adjoint();
  // Kill the O(eps) anti-Hermitian drift from the two matrix products.
  return 0.5 * (s + s.adjoint());
}

}  // namespace pendsim

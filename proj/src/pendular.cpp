#include "pendsim/pendular.hpp"

#include <cmath>
#include <map>

namespace pendsim {

namespace {

// <a|cos(theta)|b> for real coefficient vectors over Y_{J,0}. The operator
// is tridiagonal with zero diagonal, so only neighbouring-J terms enter.
double cos_theta_expectation(const RealVector& a, const RealVector& b) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j + 1 < a.size(); ++j) {
    sum += cos_theta_element(static_cast<int>(j)) * (a[j] * b[j + 1] + a[j + 1] * b[j]);
  }
  return sum;
}

// Fix the overall phase so that entry `anchor` is real and positive, then
// return the (real) coefficients. Eigenvectors of the real symmetric Stark
// matrix are real up to this phase.
RealVector fix_sign(const ComplexVector& v, Eigen::Index anchor) {
  Complex pivot = v[anchor];
  Complex phase = std::abs(pivot) > 0.0 ? pivot / std::abs(pivot) : Complex(1.0, 0.0);
  RealVector out = (v / phase).real();
  out.normalize();
  return out;
}

}  // namespace

double cos_theta_element(int j) {
  if (j < 0) throw std::invalid_argument("cos_theta_element: J must be >= 0");
  double jd = j;
  return (jd + 1.0) / std::sqrt((2.0 * jd + 1.0) * (2.0 * jd + 3.0));
}

ComplexMatrix build_stark_hamiltonian(double w, int jmax) {
  if (w < 0.0) {
    throw std::invalid_argument("build_stark_hamiltonian: w must be >= 0");
  }
  if (jmax < 2) {
    throw std::invalid_argument(
        "build_stark_hamiltonian: jmax must be >= 2 to resolve two qubit levels");
  }
  const int dim = jmax + 1;
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) {
    h(j, j) = static_cast<double>(j) * (j + 1.0);
  }
  for (int j = 0; j < jmax; ++j) {
    const double off = -w * cos_theta_element(j);
    h(j, j + 1) = off;
    h(j + 1, j) = off;
  }
  return h;
}

PendularQubit solve_qubit(double w, int jmax) {
  const ComplexMatrix h = build_stark_hamiltonian(w, jmax);
  const HermitianEigenResult eig = hermitian_eig(h);

  PendularQubit q;
  q.w = w;
  q.jmax = jmax;
  q.E0 = eig.eigenvalues[0];
  q.E1 = eig.eigenvalues[1];
  q.coeffs0 = fix_sign(eig.eigenvectors.col(0), 0);
  q.coeffs1 = fix_sign(eig.eigenvectors.col(1), 1);
  q.C0 = cos_theta_expectation(q.coeffs0, q.coeffs0);
  q.C1 = cos_theta_expectation(q.coeffs1, q.coeffs1);
  q.Ct = cos_theta_expectation(q.coeffs0, q.coeffs1);
  return q;
}

PendularQubit perturbative_qubit(double w) {
  if (w < 0.0) {
    throw std::invalid_argument("perturbative_qubit: w must be >= 0");
  }
  // First-order mixing coefficients from V = -w*cos(theta):
  //   Y_10 into |0>: (-w/sqrt 3)/(0-2) = +w/(2 sqrt 3)
  //   Y_00 into |1>: (-w/sqrt 3)/(2-0) = -w/(2 sqrt 3)
  //   Y_20 into |1>: (-2w/sqrt 15)/(2-6) = +w/(2 sqrt 15)
  const double c01 = w / (2.0 * std::sqrt(3.0));
  const double c12 = w / (2.0 * std::sqrt(15.0));

  PendularQubit q;
  q.w = w;
  q.jmax = 2;
  q.E0 = -w * w / 6.0;
  q.E1 = 2.0 + w * w / 10.0;
  q.coeffs0 = RealVector::Zero(3);
  q.coeffs1 = RealVector::Zero(3);
  q.coeffs0 << 1.0, c01, 0.0;
  q.coeffs1 << -c01, 1.0, c12;
  q.coeffs0.normalize();
  q.coeffs1.normalize();
  q.C0 = cos_theta_expectation(q.coeffs0, q.coeffs0);
  q.C1 = cos_theta_expectation(q.coeffs1, q.coeffs1);
  q.Ct = cos_theta_expectation(q.coeffs0, q.coeffs1);
  return q;
}

int converge_jmax(double w, double tol) {
  if (w < 0.0) throw std::invalid_argument("converge_jmax: w must be >= 0");
  if (!(tol > 0.0)) throw std::invalid_argument("converge_jmax: tol must be > 0");

  std::map<int, PendularQubit> cache;
  const auto at = [&](int jm) -> const PendularQubit& {
    auto it = cache.find(jm);
    if (it == cache.end()) it = cache.emplace(jm, solve_qubit(w, jm)).first;
    return it->second;
  };

  for (int jm = 10; jm <= kMaxJmax; jm += 5) {
    const PendularQubit& a = at(jm);
    const PendularQubit& b = at(jm + 10);
    const bool stable = std::abs(a.E0 - b.E0) < tol && std::abs(a.E1 - b.E1) < tol &&
                        std::abs(a.C0 - b.C0) < tol && std::abs(a.C1 - b.C1) < tol &&
                        std::abs(a.Ct - b.Ct) < tol;
    if (stable) return jm;
  }
  throw ConvergenceError("converge_jmax: no convergence up to jmax = " +
                         std::to_string(kMaxJmax) + " at w = " + std::to_string(w));
}

}  // namespace pendsim

#include "weakval/linalg.hpp"

#include <cmath>
#include <sstream>

namespace weakval {

EigenSystem eig_hermitian(const Matrix& a) {
  if (!is_hermitian(a, 1e-10)) {
    throw numeric_error("eig_hermitian: matrix is not Hermitian at tolerance 1e-10");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
  if (solver.info() != Eigen::Success) {
    throw numeric_error("eig_hermitian: eigensolver did not converge");
  }
  return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

StateVector::StateVector(Vector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() == 0) throw std::invalid_argument("StateVector: empty amplitude vector");
  if (!all_finite(amps_)) throw std::invalid_argument("StateVector: non-finite amplitude");
  const double norm = amps_.norm();
  if (std::abs(norm - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "StateVector: norm " << norm << " differs from 1 by more than 1e-12";
    throw std::invalid_argument(msg.str());
  }
}

StateVector StateVector::normalized(const Vector& amplitudes) {
  if (!all_finite(amplitudes)) throw std::invalid_argument("StateVector: non-finite amplitude");
  const double norm = amplitudes.norm();
  if (norm <= 0.0) throw std::invalid_argument("StateVector: cannot normalize the zero vector");
  return StateVector(Vector(amplitudes / norm));
}

Complex inner(const StateVector& u, const StateVector& v) {
  if (u.dim() != v.dim()) {
    throw std::invalid_argument("inner: dimension mismatch");
  }
  return u.amps().dot(v.amps());
}

}  // namespace weakval

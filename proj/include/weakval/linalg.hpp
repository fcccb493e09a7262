// Dense complex linear algebra for small pre/post-selected systems.
//
// Everything here is a thin layer over Eigen: MatrixXcd/VectorXcd carry the
// operators and kets, free functions add the pieces Eigen does not spell out
// (Kronecker products, Hermiticity checks, a checked Hermitian eigensolver)
// plus the normalized StateVector type used throughout.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace weakval {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Numeric/constraint failures (orthogonal selections, complex weak value,
// infeasible decomposition, vanishing post-selection). Distinct from
// std::invalid_argument, which covers malformed or mismatched inputs.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultTol = 1e-10;

// Largest entry modulus.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

template <typename DA, typename DB>
double max_abs_diff(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  return max_abs((a - b).eval());
}

// Entry-wise approximate equality on the max norm (absolute).
template <typename DA, typename DB>
bool approx_equal(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
                  double tol = kDefaultTol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs_diff(a, b) <= tol;
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& a) {
  return a.allFinite();
}

// max-entry distance between a and its adjoint <= tol
template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a, double tol = kDefaultTol) {
  if (a.rows() != a.cols()) return false;
  return max_abs_diff(a, a.adjoint().eval()) <= tol;
}

// Kronecker (tensor) product, dim = a.dim * b.dim.
template <typename DA, typename DB>
Matrix kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

struct EigenSystem {
  RealVector values;  // ascending
  Matrix vectors;     // orthonormal columns, vectors.col(k) <-> values(k)
};

// Eigendecomposition of a Hermitian matrix. Throws numeric_error if the
// input fails the Hermiticity check at tolerance 1e-10.
EigenSystem eig_hermitian(const Matrix& a);

// Normalized complex ket. The constructor rejects vectors whose Euclidean
// norm differs from 1 by more than 1e-12; use StateVector::normalized to
// build one from unnormalized amplitudes.
class StateVector {
 public:
  explicit StateVector(Vector amplitudes);

  static StateVector normalized(const Vector& amplitudes);

  Eigen::Index dim() const { return amps_.size(); }
  const Vector& amps() const { return amps_; }
  Complex operator[](Eigen::Index i) const { return amps_(i); }

 private:
  Vector amps_;
};

// <u|v>, conjugate-linear in the first argument.
Complex inner(const StateVector& u, const StateVector& v);

}  // namespace weakval

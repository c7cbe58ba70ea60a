#pragma once

#include <Eigen/Dense>

#include "cliffspin/algebra.hpp"

namespace cliffspin {

/// Cl(3,0), the algebra of physical space.
inline Signature pauli_signature() { return Signature(3, 0); }

/// Basis vector sigma_k of Cl(3,0), k = 1..3.
Multivector pauli_sigma(int k);

/// Quaternion units inside the even subalgebra: i1 = -I*sigma1,
/// i2 = I*sigma2, i3 = I*sigma3.  They satisfy Hamilton's relations
/// i1^2 = i2^2 = i3^2 = i1*i2*i3 = -1.
Multivector pauli_quaternion_unit(int k);

/// Even element of Cl(3,0) together with the reference spin axis (a unit
/// grade-1 element squaring to +1, sigma3 by default).
class PauliSpinor {
 public:
  explicit PauliSpinor(Multivector value, Multivector axis = pauli_sigma(3),
                       const Tolerance& tol = {});

  const Multivector& value() const { return value_; }
  const Multivector& axis() const { return axis_; }

 private:
  Multivector value_;
  Multivector axis_;
};

/// Spin conjugate A-dagger = r * reverse(A) * r for a unit vector r, r^2 = 1.
Multivector spin_conjugate(const Multivector& a, const Multivector& r,
                           const Tolerance& tol = {});

/// Projection of an even element onto span{1, I*r}:
/// (psi + r*psi*r)/2, equal to (psi + spin_conjugate(reverse(psi), r))/2.
Multivector c_project(const Multivector& psi, const Multivector& r,
                      const Tolerance& tol = {});

/// Hermitian inner product: the span{1, I*r} projection of
/// reverse(psi)*phi.  Conjugate-symmetric under the spin conjugate.
Multivector hermitian_product(const PauliSpinor& psi, const PauliSpinor& phi,
                              const Tolerance& tol = {});

/// Density and spin vector of a Pauli spinor: rho = psi*reverse(psi),
/// spin = psi*axis*reverse(psi), with spin^2 = rho^2.
struct PauliObservables {
  double rho = 0.0;
  Multivector spin;
  Eigen::Vector3d spin_components() const;
};

PauliObservables pauli_observables(const PauliSpinor& psi, const Tolerance& tol = {});

/// Rebuilds a spinor from observables up to the free rotation angle alpha
/// around the spin axis:
///   z = (rho + spin*axis)/2,  p^2 = (rho + <spin*axis>_0)/2,
///   psi = z * p^{-1} * exp(I*axis*alpha).
/// Fails when spin is anti-aligned with the axis (p^2 ~ 0); rotating the
/// axis resolves that case.
PauliSpinor pauli_reconstruct(double rho, const Multivector& spin, double alpha,
                              Multivector axis = pauli_sigma(3),
                              const Tolerance& tol = {});

}  // namespace cliffspin

#include "cliffspin/pauli.hpp"

#include <cmath>

namespace cliffspin {

namespace {

void require_unit_plus_axis(const Multivector& r, const Tolerance& tol) {
  if (!is_grade(r, 1, tol) || !tol.close(scalar_part(r * r), 1.0))
    throw DomainError("spin axis must be a grade-1 unit vector squaring to +1");
}

}  // namespace

Multivector pauli_sigma(int k) {
  if (k < 1 || k > 3) throw DomainError("sigma index must be 1..3");
  return Multivector::basis_vector(pauli_signature(), k);
}

Multivector pauli_quaternion_unit(int k) {
  Multivector u = Multivector::pseudoscalar(pauli_signature()) * pauli_sigma(k);
  return k == 1 ? -u : u;
}

PauliSpinor::PauliSpinor(Multivector value, Multivector axis, const Tolerance& tol)
    : value_(std::move(value)), axis_(std::move(axis)) {
  if (!(value_.signature() == pauli_signature()))
    throw DomainError("Pauli spinors live in Cl(3,0)");
  require_same_signature(value_, axis_);
  if (!approx_zero(odd_part(value_), tol, max_abs_coefficient(value_)))
    throw DomainError("Pauli spinor must be even (zero vector and pseudoscalar parts)");
  require_unit_plus_axis(axis_, tol);
}

Multivector spin_conjugate(const Multivector& a, const Multivector& r,
                           const Tolerance& tol) {
  require_same_signature(a, r);
  require_unit_plus_axis(r, tol);
  return r * reverse(a) * r;
}

Multivector c_project(const Multivector& psi, const Multivector& r,
                      const Tolerance& tol) {
  require_same_signature(psi, r);
  require_unit_plus_axis(r, tol);
  return 0.5 * (psi + r * psi * r);
}

Multivector hermitian_product(const PauliSpinor& psi, const PauliSpinor& phi,
                              const Tolerance& tol) {
  if (!approx_equal(psi.axis(), phi.axis(), tol))
    throw DomainError("hermitian product requires spinors with the same axis");
  return c_project(reverse(psi.value()) * phi.value(), psi.axis(), tol);
}

PauliObservables pauli_observables(const PauliSpinor& psi, const Tolerance& tol) {
  (void)tol;
  PauliObservables out{0.0, Multivector(pauli_signature())};
  out.rho = scalar_part(psi.value() * reverse(psi.value()));
  out.spin = psi.value() * psi.axis() * reverse(psi.value());
  return out;
}

Eigen::Vector3d PauliObservables::spin_components() const {
  return {spin.coefficient(0b001), spin.coefficient(0b010), spin.coefficient(0b100)};
}

PauliSpinor pauli_reconstruct(double rho, const Multivector& spin, double alpha,
                              Multivector axis, const Tolerance& tol) {
  if (!(spin.signature() == pauli_signature()))
    throw DomainError("Pauli reconstruction lives in Cl(3,0)");
  require_unit_plus_axis(axis, tol);
  if (!is_grade(spin, 1, tol))
    throw DomainError("spin observable must be a grade-1 vector");
  if (rho < 0.0) throw DomainError("density must be non-negative");
  Multivector z = 0.5 * (Multivector::scalar(pauli_signature(), rho) + spin * axis);
  double p2 = 0.5 * (rho + scalar_part(spin * axis));
  if (p2 <= tol.abs_eps * std::max(1.0, rho))
    throw DomainError(
        "spin is anti-aligned with the reference axis; rotate the axis and retry");
  Multivector v = exp_bivector(alpha * (Multivector::pseudoscalar(pauli_signature()) * axis),
                               +1, tol);
  return PauliSpinor(z / std::sqrt(p2) * v, std::move(axis), tol);
}

}  // namespace cliffspin

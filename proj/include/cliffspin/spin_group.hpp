#pragma once

#include "cliffspin/algebra.hpp"

namespace cliffspin {

/// Classification of an element under the versor groups of Cl(p,q).
/// pin: U*reverse(U) = +-1 and U has homogeneous grade parity.
/// spin: additionally U is even.  spin_plus: additionally U*reverse(U) = +1.
/// The tags are nested: spin_plus implies spin implies pin.
struct VersorClass {
  enum class Tag { not_versor, pin, spin, spin_plus };
  Tag tag = Tag::not_versor;
  /// Scalar value of U*reverse(U) (meaningful unless not_versor).
  double norm = 0.0;
};

std::string to_string(VersorClass::Tag tag);

VersorClass classify_versor(const Multivector& u, const Tolerance& tol = {});

/// Adjoint action sign * U * A * reverse(U).  U and -U act identically.
/// Throws when U is not a versor.
Multivector adjoint_act(const Multivector& u, const Multivector& a, int sign = +1,
                        const Tolerance& tol = {});

/// One-sided spinor transformation psi' = U*psi for U in Spin(p,q) and even
/// psi.  reverse(psi')*psi' = (U*reverse(U)) * reverse(psi)*psi.
Multivector spinor_transform(const Multivector& u, const Multivector& psi,
                             const Tolerance& tol = {});

}  // namespace cliffspin

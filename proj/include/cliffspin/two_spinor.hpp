#pragma once

#include <array>
#include <complex>
#include <optional>
#include <utility>

#include "cliffspin/dirac.hpp"

namespace cliffspin {

/// Idempotent l = (1+e)/2 built from a unit timelike bivector e of Cl(1,3)
/// that is Hermitian with respect to gamma0 (a sigma-type bivector, e = r*t).
/// Satisfies l*l = l, l*reverse(l) = 0, l + reverse(l) = 1, dagger(l) = l.
/// Bivectors with e^2 = 1 that are not Hermitian break the last law and are
/// rejected.
class Projector {
 public:
  /// Canonical frame e = sigma3.
  Projector();
  explicit Projector(const Multivector& e, const Tolerance& tol = {});

  const Multivector& bivector() const { return e_; }
  const Multivector& value() const { return value_; }
  /// reverse(l) = (1-e)/2, the projector of the opposite ideal.
  Multivector complement() const;

 private:
  Multivector e_;
  Multivector value_;
};

/// Even element of Cl(1,3) lying in the ideal picked out by a projector:
/// value * l = value.  Right multiplication by I acts as the imaginary
/// unit, so components over a spin basis are scalar-plus-pseudoscalar
/// pairs, handled as std::complex<double>(scalar, pseudoscalar).
class TwoSpinor {
 public:
  TwoSpinor(Multivector value, Projector frame, const Tolerance& tol = {});

  const Multivector& value() const { return value_; }
  const Projector& frame() const { return frame_; }

 private:
  Multivector value_;
  Projector frame_;
};

/// l = (1+e)/2 with the validation described on Projector.
Projector projector_from_bivector(const Multivector& e, const Tolerance& tol = {});

/// Splits an even element into its two ideal parts (Psi*l, Psi*reverse(l)).
/// The second component lives in the complementary ideal, i.e. the frame of
/// the returned spinor is the projector of -e.  The parts sum back to Psi.
std::pair<TwoSpinor, TwoSpinor> split(const Multivector& psi, const Projector& l,
                                      const Tolerance& tol = {});

/// Basis pair and symplectic form of a projector's ideal.  In the canonical
/// frame o = (1+sigma3)/2, iota = sigma1*o, epsilon = (sigma1 - I*sigma2)/2;
/// other frames transport these with the minimal rotor taking sigma3 to e
/// (composed with a half-turn about sigma2 near e = -sigma3).  Always
/// dagger(o) = o, reverse(iota) = -iota, epsilon = <o,iota>_B and
/// 2*<epsilon, dagger(epsilon)>_S = -1.
struct SpinBasis {
  TwoSpinor o;
  TwoSpinor iota;
  Multivector epsilon;
};

SpinBasis spin_basis(const Projector& l, const Tolerance& tol = {});

/// Symmetric product <A,B>_S = (reverse(A)*B + reverse(B)*A)/2; equals the
/// grade {0,4} part of reverse(A)*B.  Defined on even elements.
Multivector product_s(const Multivector& a, const Multivector& b,
                      const Tolerance& tol = {});

/// Antisymmetric product <A,B>_B = (reverse(A)*B - reverse(B)*A)/2; equals
/// the grade 2 part of reverse(A)*B.  Defined on even elements.
Multivector product_b(const Multivector& a, const Multivector& b,
                      const Tolerance& tol = {});

/// Symplectic inner product {eta,xi} = -2*<reverse(eta)*xi, dagger(eps)>_S,
/// returned as (scalar, pseudoscalar).  Antisymmetric, and
/// reverse(eta)*xi = {eta,xi}*epsilon.
std::complex<double> inner_product(const TwoSpinor& eta, const TwoSpinor& xi,
                                   const Tolerance& tol = {});

/// Components (eta^0, eta^1) over the frame's (o, iota) basis, recovered as
/// eta^0 = {eta, iota} and eta^1 = {o, eta}.
std::array<std::complex<double>, 2> spinor_components(const TwoSpinor& eta,
                                                      const Tolerance& tol = {});

/// Flagpole J = eta*dagger(eta), a null paravector: J*reverse(J) = 0.
Multivector flagpole(const TwoSpinor& eta, const Tolerance& tol = {});

/// Spacelike paravector L = eta*dagger(chi) + chi*dagger(eta);
/// reverse(L)*L = -{eta,chi}*dagger({eta,chi}) <= 0.
Multivector spacelike_paravector(const TwoSpinor& eta, const TwoSpinor& chi,
                                 const Tolerance& tol = {});

/// Flag F = <J,L>_B of an independent pair, a null bivector (F^2 = 0).
/// Throws when the spinors are proportional ({eta,chi} ~ 0), which
/// degenerates the flag plane.
Multivector flag(const TwoSpinor& eta, const TwoSpinor& chi,
                 const Tolerance& tol = {});

/// Sum of two flagpoles T = eta*dagger(eta) + chi*dagger(chi) with
/// reverse(T)*T = {eta,chi}*dagger({eta,chi}) >= 0: timelike for an
/// independent pair, collapsing to a null paravector when the spinors are
/// proportional.
Multivector timelike_paravector(const TwoSpinor& eta, const TwoSpinor& chi,
                                const Tolerance& tol = {});

/// Null tetrad of a frame: l = o*dagger(o), n = iota*dagger(iota),
/// m = o*dagger(iota), m_dagger = iota*dagger(o).  In the canonical frame
/// these are (1+sigma3)/2, (1-sigma3)/2, (sigma1 + I*sigma2)/2 and
/// (sigma1 - I*sigma2)/2.  With E = (l, n, m, m_dagger) the products
/// E_a*reverse(E_b) + E_b*reverse(E_a) reproduce the Newman-Penrose metric
///   [[0,1,0,0], [1,0,0,0], [0,0,0,-1], [0,0,-1,0]],
/// and {E_a, I*E_a} spans the even subalgebra.
struct NullTetrad {
  Multivector l = Multivector(dirac_signature());
  Multivector n = Multivector(dirac_signature());
  Multivector m = Multivector(dirac_signature());
  Multivector m_dagger = Multivector(dirac_signature());
};

NullTetrad null_tetrad(const Projector& l, const Tolerance& tol = {});

/// Assembles the bivector beta^00*m_dagger + beta^01*(n - l) - beta^11*m
/// from a symmetric 2x2 array of (scalar, pseudoscalar) components, where
/// multiplication by the imaginary part acts through I.  Throws when
/// beta[0][1] != beta[1][0].
Multivector bivector_from_components(
    const std::array<std::array<std::complex<double>, 2>, 2>& beta,
    const Projector& l, const Tolerance& tol = {});

/// Inverse of bivector_from_components: decomposes a grade-2 element over
/// the six real basis bivectors of the frame's tetrad.
std::array<std::array<std::complex<double>, 2>, 2> bivector_components(
    const Multivector& b, const Projector& l, const Tolerance& tol = {});

/// Dirac spinor Psi = eta + dagger(reverse(chi)) from a same-frame pair;
/// Psi*l = eta and Psi*reverse(l) recovers the chi term, and the paravector
/// current Psi*dagger(Psi) = eta*dagger(eta) + reverse(chi*dagger(chi)) is
/// timelike.  The attached Dirac frame is (gamma0, e*gamma0).
DiracSpinor dirac_from_two_spinors(const TwoSpinor& eta, const TwoSpinor& chi,
                                   const Tolerance& tol = {});

/// Eigenvalue of eta under the ideal projections eta -> eta*l and
/// eta -> eta*reverse(l): +1 when eta*l = eta, -1 when eta*reverse(l) = eta,
/// empty otherwise (or for zero input).
std::optional<int> chirality_eigenvalue(const Multivector& eta, const Projector& l,
                                        const Tolerance& tol = {});

/// Eigenvalue of eta under right multiplication by the canonical sigma2:
/// +-1 when eta*sigma2 = +-eta, empty otherwise (or for zero input).
std::optional<int> charge_conjugation_eigenvalue(const Multivector& eta,
                                                 const Tolerance& tol = {});

}  // namespace cliffspin

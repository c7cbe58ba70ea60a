#pragma once

#include <array>
#include <optional>

#include <Eigen/Dense>

#include "cliffspin/algebra.hpp"

namespace cliffspin {

/// Cl(1,3), the spacetime algebra with metric (+,-,-,-).
inline Signature dirac_signature() { return Signature(1, 3); }

/// Basis vector gamma_mu, mu = 0..3; gamma0^2 = +1, gammak^2 = -1.
Multivector dirac_gamma(int mu);

/// Relative vector sigma_k = gamma_k * gamma_0, k = 1..3.  Each squares
/// to +1 and the set generates the even subalgebra together with I.
Multivector dirac_sigma(int k);

/// Spacetime pseudoscalar I = gamma0*gamma1*gamma2*gamma3, I^2 = -1.
Multivector dirac_I();

/// A time axis t (unit, t^2 = +1) plus an orthogonal spin axis r (unit,
/// r^2 = -1).  Defaults to t = gamma0, r = gamma3.  The product r*t plays
/// the role sigma3 plays in the default frame, and I*r*t the role of the
/// imaginary unit.
class DiracFrame {
 public:
  DiracFrame();
  DiracFrame(Multivector t, Multivector r, const Tolerance& tol = {});

  const Multivector& t() const { return t_; }
  const Multivector& r() const { return r_; }

  /// r*t, the spin plane (a bivector squaring to +1).
  Multivector spin_plane() const { return r_ * t_; }
  /// I*r*t, the imaginary unit attached to this frame (squares to -1).
  Multivector imaginary_unit() const;

 private:
  Multivector t_;
  Multivector r_;
};

/// Completes a frame to a right-handed triad (s1, s2, s3) of relative
/// vectors: s3 = r*t, each sk^2 = +1, mutually anticommuting, and
/// s1*s2 = I*s3.  In the default frame this returns (sigma1, sigma2, sigma3).
std::array<Multivector, 3> dirac_frame_triad(const DiracFrame& frame,
                                             const Tolerance& tol = {});

/// Even element of Cl(1,3) with an attached frame.
class DiracSpinor {
 public:
  explicit DiracSpinor(Multivector value, DiracFrame frame = DiracFrame(),
                       const Tolerance& tol = {});

  const Multivector& value() const { return value_; }
  const DiracFrame& frame() const { return frame_; }

 private:
  Multivector value_;
  DiracFrame frame_;
};

/// Splits a multivector by commutation with a time axis:
/// (a + sign * t*a*t)/2 with sign = +1 or -1.  On the even subalgebra the
/// +1 part is spanned by {1, I*sigma_k} and the -1 part by {sigma_k, I}.
Multivector pauli_grade(const Multivector& a, const Multivector& t, int sign,
                        const Tolerance& tol = {});

/// Projection onto span{1, I*r*t}: the odd part is dropped, then the
/// Pauli-even part P = (a + t*a*t)/2 of the rest is averaged with its
/// (r*t)-conjugate, (P + (r*t)*P*(r*t))/2.
Multivector c_project_st(const Multivector& a, const DiracFrame& frame,
                         const Tolerance& tol = {});

/// Hermitian inner product of Dirac spinors: the span{1, I*r*t} projection
/// of reverse(psi)*phi.  Conjugate-symmetric under a -> t*reverse(a)*t, and
/// of signature (+,+,-,-) over the four "complex" slots of a spinor.
Multivector hermitian_product_st(const DiracSpinor& psi, const DiracSpinor& phi,
                                 const Tolerance& tol = {});

/// Bilinear covariants of a Dirac spinor:
///   psi*reverse(psi) = rho * exp(I*beta)   (density and phase angle)
///   J = psi * t * reverse(psi)             (vector current)
///   S = psi * I*r*t * reverse(psi)         (bivector angular momentum)
///   K = -I * (psi * I*r * reverse(psi))    (vector spin current)
struct BilinearSet {
  double rho = 0.0;
  double beta = 0.0;
  Multivector J = Multivector(dirac_signature());
  Multivector S = Multivector(dirac_signature());
  Multivector K = Multivector(dirac_signature());
  DiracFrame frame;
};

BilinearSet dirac_bilinears(const DiracSpinor& psi, const Tolerance& tol = {});

/// Residual norms of the nine algebraic identities tying the bilinears
/// together.  All vanish when the set comes from an actual spinor:
///   J^2 = rho^2                  K^2 = -rho^2            <J*K>_0 = 0
///   J*K = I*rho*e^{-I beta}*S    J*S = I*rho*e^{-I beta}*K
///   S*J = I*rho*e^{I beta}*K     K*S = I*rho*e^{-I beta}*J
///   S*K = I*rho*e^{I beta}*J     S^2 = -rho^2*e^{2 I beta}
struct FierzResiduals {
  double j_square = 0.0;
  double k_square = 0.0;
  double jk_scalar = 0.0;
  double jk = 0.0;
  double js = 0.0;
  double sj = 0.0;
  double ks = 0.0;
  double sk = 0.0;
  double s_square = 0.0;

  double max() const;
};

FierzResiduals fierz_residuals(const BilinearSet& b);

/// For a null spinor (rho = 0) the covariants collapse to K = h*J and
/// S = J ^ s with <J*s>_0 = 0, where h = cos(phi) and s^2 = h^2 - 1 <= 0.
/// s is only determined up to multiples of J; the minimum-norm solution is
/// returned.  phi in [0, pi] is the angle between the spinor's own spin
/// axis and the frame's.
struct NullDecomposition {
  double h = 0.0;
  Multivector s = Multivector(dirac_signature());
  double phi = 0.0;
};

NullDecomposition null_decompose(const BilinearSet& b, const Tolerance& tol = {});

/// Lounesto's classes in terms of the bilinears: "dirac" when rho > 0;
/// otherwise weyl (S = 0), flag_pole (K = 0), or flag_dipole (neither).
enum class LounestoTag { dirac, flag_dipole, flag_pole, weyl };

const char* to_string(LounestoTag tag);

struct LounestoClass {
  LounestoTag tag = LounestoTag::dirac;
  BilinearSet bilinears;
  /// Engaged for the three null classes.
  std::optional<NullDecomposition> null_part;
  /// +-1 when psi * gamma2*gamma0 = +-psi (a Majorana spinor).
  std::optional<int> charge_conjugation;
  /// +-1 when psi * r*t = +-psi (a Weyl spinor).
  std::optional<int> chirality;
};

LounestoClass lounesto_classify(const DiracSpinor& psi, const Tolerance& tol = {});

/// Eigenvalue of psi under right multiplication by gamma2*gamma0, if any.
std::optional<int> charge_conjugation_eigenvalue(const DiracSpinor& psi,
                                                 const Tolerance& tol = {});

/// Eigenvalue of psi under right multiplication by the frame's spin plane
/// r*t, if any.
std::optional<int> chirality_eigenvalue(const DiracSpinor& psi,
                                        const Tolerance& tol = {});

/// Z = psi * c_project_st(reverse(psi)); equals
/// (rho*e^{I beta} + J*t - S*I*r*t - K*r)/4 in terms of the bilinears.
Multivector dirac_z(const DiracSpinor& psi, const Tolerance& tol = {});

/// The same Z assembled from a bilinear set instead of a spinor.
Multivector bilinear_z(const BilinearSet& b);

/// Rebuilds a spinor from its bilinears up to a free SU(2) phase
/// V = exp(I * (alpha1*s1 + alpha2*s2 + alpha3*s3)) over the frame triad:
///   psi = Z * p^{-1} * V,  p^2 = <Z>_0.
/// The current J is independent of alpha; the spin axis is rotated by it.
/// Fails when p^2 ~ 0; rotating the frame's spin axis resolves that case.
DiracSpinor dirac_reconstruct(const BilinearSet& b, const Eigen::Vector3d& alpha,
                              const Tolerance& tol = {});

/// Null-class reconstruction from the collapsed observables (J, h, s):
/// Z = J*t * (1 + (h - I*t*s) * r*t)/4, then psi = Z * p^{-1} * V as above.
DiracSpinor dirac_reconstruct_null(const Multivector& J, double h,
                                   const Multivector& s,
                                   const Eigen::Vector3d& alpha,
                                   const DiracFrame& frame = DiracFrame(),
                                   const Tolerance& tol = {});

}  // namespace cliffspin

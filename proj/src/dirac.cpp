#include "cliffspin/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "cliffspin/pauli.hpp"

namespace cliffspin {

namespace {

// rho * exp(I*beta) as a scalar-plus-pseudoscalar element.
Multivector phase(const Signature& sig, double rho, double beta) {
  return Multivector::scalar(sig, rho * std::cos(beta)) +
         (rho * std::sin(beta)) * Multivector::pseudoscalar(sig);
}

void require_spacetime(const Multivector& a, const char* what) {
  if (!(a.signature() == dirac_signature())) throw DomainError(what);
}

// psi = Z * p^{-1} * V with V = exp(I * alpha^k s_k) over the frame triad.
DiracSpinor reconstruct_from_z(const Multivector& z, const DiracFrame& frame,
                               const Eigen::Vector3d& alpha, const Tolerance& tol) {
  double p2 = scalar_part(z);
  if (p2 <= tol.abs_eps * coefficient_norm(z))
    throw DomainError(
        "observables are degenerate for this spin axis (p^2 ~ 0); "
        "rotate the frame and retry");
  auto s = dirac_frame_triad(frame, tol);
  Multivector w =
      dirac_I() * (alpha[0] * s[0] + alpha[1] * s[1] + alpha[2] * s[2]);
  return DiracSpinor((z / std::sqrt(p2)) * exp_bivector(w, +1, tol), frame, tol);
}

}  // namespace

Multivector dirac_gamma(int mu) {
  if (mu < 0 || mu > 3) throw DomainError("gamma index must be 0..3");
  return Multivector::basis_vector(dirac_signature(), mu + 1);
}

Multivector dirac_sigma(int k) {
  if (k < 1 || k > 3) throw DomainError("sigma index must be 1..3");
  return dirac_gamma(k) * dirac_gamma(0);
}

Multivector dirac_I() { return Multivector::pseudoscalar(dirac_signature()); }

DiracFrame::DiracFrame() : t_(dirac_gamma(0)), r_(dirac_gamma(3)) {}

DiracFrame::DiracFrame(Multivector t, Multivector r, const Tolerance& tol)
    : t_(std::move(t)), r_(std::move(r)) {
  require_spacetime(t_, "Dirac frames live in Cl(1,3)");
  require_same_signature(t_, r_);
  if (!is_grade(t_, 1, tol) || !tol.close(scalar_part(t_ * t_), 1.0))
    throw DomainError("frame time axis must be a grade-1 unit vector squaring to +1");
  if (!is_grade(r_, 1, tol) || !tol.close(scalar_part(r_ * r_), -1.0))
    throw DomainError("frame spin axis must be a grade-1 unit vector squaring to -1");
  if (!tol.close(scalar_part(t_ * r_), 0.0))
    throw DomainError("frame axes must be orthogonal");
}

Multivector DiracFrame::imaginary_unit() const { return dirac_I() * r_ * t_; }

std::array<Multivector, 3> dirac_frame_triad(const DiracFrame& frame,
                                             const Tolerance& tol) {
  const Multivector& t = frame.t();
  const Multivector& r = frame.r();
  // Project the four coordinate directions onto the spacelike plane
  // orthogonal to both axes and keep the two largest survivors.
  Multivector v1 = Multivector(dirac_signature());
  Multivector v2 = Multivector(dirac_signature());
  for (int pick = 0; pick < 2; ++pick) {
    Multivector best = Multivector(dirac_signature());
    double best_len2 = -1.0;
    for (int idx : {1, 2, 3, 0}) {
      Multivector u = dirac_gamma(idx);
      u = u - scalar_part(u * t) * t;
      u = u + scalar_part(u * r) * r;
      if (pick > 0) u = u + scalar_part(u * v1) * v1;
      double len2 = -scalar_part(u * u);
      if (len2 > best_len2) {
        best_len2 = len2;
        best = u;
      }
    }
    if (best_len2 <= tol.abs_eps)
      throw DomainError("frame axes do not leave a spacelike plane");
    Multivector v = best / std::sqrt(best_len2);
    (pick == 0 ? v1 : v2) = v;
  }
  Multivector s1 = v1 * t;
  Multivector s2 = v2 * t;
  Multivector s3 = frame.spin_plane();
  // Orient the pair so that s1*s2 = I*s3.
  if (scalar_part(s1 * s2 * reverse(dirac_I() * s3)) < 0.0) s2 = -s2;
  return {s1, s2, s3};
}

DiracSpinor::DiracSpinor(Multivector value, DiracFrame frame, const Tolerance& tol)
    : value_(std::move(value)), frame_(std::move(frame)) {
  require_spacetime(value_, "Dirac spinors live in Cl(1,3)");
  if (!approx_zero(odd_part(value_), tol, max_abs_coefficient(value_)))
    throw DomainError("Dirac spinor must be an even multivector");
}

Multivector pauli_grade(const Multivector& a, const Multivector& t, int sign,
                        const Tolerance& tol) {
  require_same_signature(a, t);
  if (sign != 1 && sign != -1) throw DomainError("pauli_grade sign must be +1 or -1");
  if (!is_grade(t, 1, tol) || !tol.close(scalar_part(t * t), 1.0))
    throw DomainError("pauli_grade needs a grade-1 unit time axis squaring to +1");
  return 0.5 * (a + static_cast<double>(sign) * (t * a * t));
}

Multivector c_project_st(const Multivector& a, const DiracFrame& frame,
                         const Tolerance& tol) {
  require_same_signature(a, frame.t());
  Multivector p = pauli_grade(even_part(a), frame.t(), +1, tol);
  Multivector s3 = frame.spin_plane();
  return 0.5 * (p + s3 * p * s3);
}

Multivector hermitian_product_st(const DiracSpinor& psi, const DiracSpinor& phi,
                                 const Tolerance& tol) {
  if (!approx_equal(psi.frame().t(), phi.frame().t(), tol) ||
      !approx_equal(psi.frame().r(), phi.frame().r(), tol))
    throw DomainError("hermitian product requires spinors sharing a frame");
  return c_project_st(reverse(psi.value()) * phi.value(), psi.frame(), tol);
}

BilinearSet dirac_bilinears(const DiracSpinor& psi, const Tolerance&) {
  const Multivector& v = psi.value();
  const DiracFrame& f = psi.frame();
  Multivector rv = reverse(v);
  Multivector dens = v * rv;
  double c = scalar_part(dens);
  double s = pseudoscalar_part(dens);
  BilinearSet b;
  b.rho = std::hypot(c, s);
  b.beta = b.rho == 0.0 ? 0.0 : std::atan2(s, c);
  b.J = v * f.t() * rv;
  b.S = v * f.imaginary_unit() * rv;
  b.K = -(dirac_I() * (v * (dirac_I() * f.r()) * rv));
  b.frame = f;
  return b;
}

double FierzResiduals::max() const {
  return std::max({j_square, k_square, jk_scalar, jk, js, sj, ks, sk, s_square});
}

FierzResiduals fierz_residuals(const BilinearSet& b) {
  Signature sig = b.J.signature();
  Multivector I = Multivector::pseudoscalar(sig);
  Multivector rho2 = Multivector::scalar(sig, b.rho * b.rho);
  Multivector plus = phase(sig, b.rho, b.beta);    // rho e^{+I beta}
  Multivector minus = phase(sig, b.rho, -b.beta);  // rho e^{-I beta}
  FierzResiduals r;
  r.j_square = coefficient_norm(b.J * b.J - rho2);
  r.k_square = coefficient_norm(b.K * b.K + rho2);
  r.jk_scalar = std::abs(scalar_part(b.J * b.K));
  r.jk = coefficient_norm(b.J * b.K - I * minus * b.S);
  r.js = coefficient_norm(b.J * b.S - I * minus * b.K);
  r.sj = coefficient_norm(b.S * b.J - I * plus * b.K);
  r.ks = coefficient_norm(b.K * b.S - I * minus * b.J);
  r.sk = coefficient_norm(b.S * b.K - I * plus * b.J);
  r.s_square =
      coefficient_norm(b.S * b.S + phase(sig, b.rho * b.rho, 2.0 * b.beta));
  return r;
}

NullDecomposition null_decompose(const BilinearSet& b, const Tolerance& tol) {
  double jn = coefficient_norm(b.J);
  if (jn == 0.0)
    throw DomainError("null decomposition requires a nonzero current");
  if (!tol.negligible(b.rho, jn))
    throw DomainError("null decomposition requires a null spinor (zero density)");
  Signature sig = b.J.signature();

  NullDecomposition nd;
  nd.h = b.K.coefficients().dot(b.J.coefficients()) / (jn * jn);

  // S = J ^ s and <J*s>_0 = 0 as a least-squares system over the four vector
  // coefficients; the minimum-norm solution fixes the gauge s -> s + c*J.
  const std::uint32_t vmask[4] = {1, 2, 4, 8};
  const std::uint32_t bmask[6] = {3, 5, 6, 9, 10, 12};
  Eigen::MatrixXd a(7, 4);
  Eigen::VectorXd rhs(7);
  for (int col = 0; col < 4; ++col) {
    Multivector image = b.J * Multivector::blade(sig, vmask[col]);
    for (int row = 0; row < 6; ++row) a(row, col) = image.coefficient(bmask[row]);
    a(6, col) = scalar_part(image);
  }
  for (int row = 0; row < 6; ++row) rhs(row) = b.S.coefficient(bmask[row]);
  rhs(6) = 0.0;
  Eigen::VectorXd x =
      a.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);
  Multivector s(sig);
  for (int col = 0; col < 4; ++col)
    s = s + Multivector::blade(sig, vmask[col], x(col));
  nd.s = s;

  nd.phi = std::atan2(std::sqrt(std::max(0.0, -scalar_part(s * s))), nd.h);
  return nd;
}

const char* to_string(LounestoTag tag) {
  switch (tag) {
    case LounestoTag::dirac: return "dirac";
    case LounestoTag::flag_dipole: return "flag_dipole";
    case LounestoTag::flag_pole: return "flag_pole";
    case LounestoTag::weyl: return "weyl";
  }
  return "unknown";
}

LounestoClass lounesto_classify(const DiracSpinor& psi, const Tolerance& tol) {
  double nn = coefficient_norm(psi.value());
  if (nn == 0.0) throw DomainError("cannot classify the zero spinor");
  // Decisions are made on the unit-norm spinor so that the class does not
  // depend on the overall scale.
  DiracSpinor unit(psi.value() / nn, psi.frame(), tol);
  LounestoClass out;
  out.bilinears = dirac_bilinears(psi, tol);
  out.charge_conjugation = charge_conjugation_eigenvalue(psi, tol);
  out.chirality = chirality_eigenvalue(psi, tol);
  BilinearSet b = dirac_bilinears(unit, tol);
  if (b.rho >= tol.abs_eps) {
    out.tag = LounestoTag::dirac;
    return out;
  }
  out.null_part = null_decompose(b, tol);
  double jn = coefficient_norm(b.J);
  if (approx_zero(b.S, tol, jn))
    out.tag = LounestoTag::weyl;
  else if (approx_zero(b.K, tol, jn))
    out.tag = LounestoTag::flag_pole;
  else
    out.tag = LounestoTag::flag_dipole;
  return out;
}

namespace {

std::optional<int> right_eigenvalue(const Multivector& v, const Multivector& op,
                                    const Tolerance& tol) {
  if (approx_zero(v, tol)) return std::nullopt;
  Multivector image = v * op;
  if (approx_equal(image, v, tol)) return +1;
  if (approx_equal(image, -v, tol)) return -1;
  return std::nullopt;
}

}  // namespace

std::optional<int> charge_conjugation_eigenvalue(const DiracSpinor& psi,
                                                 const Tolerance& tol) {
  return right_eigenvalue(psi.value(), dirac_gamma(2) * dirac_gamma(0), tol);
}

std::optional<int> chirality_eigenvalue(const DiracSpinor& psi, const Tolerance& tol) {
  return right_eigenvalue(psi.value(), psi.frame().spin_plane(), tol);
}

Multivector dirac_z(const DiracSpinor& psi, const Tolerance& tol) {
  return psi.value() * c_project_st(reverse(psi.value()), psi.frame(), tol);
}

Multivector bilinear_z(const BilinearSet& b) {
  Signature sig = b.J.signature();
  return 0.25 * (phase(sig, b.rho, b.beta) + b.J * b.frame.t() -
                 b.S * b.frame.imaginary_unit() - b.K * b.frame.r());
}

DiracSpinor dirac_reconstruct(const BilinearSet& b, const Eigen::Vector3d& alpha,
                              const Tolerance& tol) {
  if (!is_grade(b.J, 1, tol) || !is_grade(b.S, 2, tol) || !is_grade(b.K, 1, tol))
    throw DomainError("bilinears must have grades (1, 2, 1)");
  return reconstruct_from_z(bilinear_z(b), b.frame, alpha, tol);
}

DiracSpinor dirac_reconstruct_null(const Multivector& J, double h,
                                   const Multivector& s,
                                   const Eigen::Vector3d& alpha,
                                   const DiracFrame& frame, const Tolerance& tol) {
  require_same_signature(J, frame.t());
  if (!is_grade(J, 1, tol) || !is_grade(s, 1, tol))
    throw DomainError("null reconstruction needs a grade-1 current and spin direction");
  Signature sig = J.signature();
  Multivector inner =
      Multivector::scalar(sig, h) - dirac_I() * (frame.t() * s);
  Multivector z = 0.25 * ((J * frame.t()) *
                          (Multivector::scalar(sig, 1.0) + inner * frame.spin_plane()));
  return reconstruct_from_z(z, frame, alpha, tol);
}

}  // namespace cliffspin

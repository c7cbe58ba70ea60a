#include "cliffspin/two_spinor.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <utility>

#include "cliffspin/pauli.hpp"

namespace cliffspin {

namespace {

void require_spacetime(const Multivector& a, const char* what) {
  if (!(a.signature() == dirac_signature())) throw DomainError(what);
}

void require_even(const Multivector& a, const char* what,
                  const Tolerance& tol = {}) {
  if (!approx_zero(odd_part(a), tol, max_abs_coefficient(a)))
    throw DomainError(what);
}

Multivector dagger(const Multivector& a) { return spin_conjugate(a, dirac_gamma(0)); }

Multivector from_c(std::complex<double> z) {
  return Multivector::scalar(dirac_signature(), z.real()) +
         z.imag() * Multivector::pseudoscalar(dirac_signature());
}

void require_same_frame(const TwoSpinor& a, const TwoSpinor& b, const char* what) {
  if (!approx_equal(a.frame().bivector(), b.frame().bivector())) throw DomainError(what);
}

// Rotor with R * sigma3 * reverse(R) = e, built from the minimal rotation in
// the plane spanned by e and sigma3.  Near e = -sigma3 that rotor degenerates,
// so a half-turn about sigma2 is composed in first.
Multivector frame_rotor(const Multivector& e) {
  Multivector s3 = dirac_sigma(3);
  double h = scalar_part(e * s3);
  if (1.0 + h >= 0.5) {
    return (Multivector::scalar(dirac_signature(), 1.0) + e * s3) /
           std::sqrt(2.0 * (1.0 + h));
  }
  Multivector half_turn = -1.0 * dirac_I() * dirac_sigma(2);
  return ((Multivector::scalar(dirac_signature(), 1.0) - e * s3) /
          std::sqrt(2.0 * (1.0 - h))) *
         half_turn;
}

}  // namespace

Projector::Projector() : Projector(dirac_sigma(3)) {}

Projector::Projector(const Multivector& e, const Tolerance& tol)
    : e_(e), value_(e.signature()) {
  require_spacetime(e_, "projectors live in Cl(1,3)");
  if (!is_grade(e_, 2, tol))
    throw DomainError("projector axis must be a grade-2 element");
  Multivector one = Multivector::scalar(e_.signature(), 1.0);
  if (!approx_equal(e_ * e_, one, tol))
    throw DomainError("projector axis must square to +1");
  if (!approx_equal(dagger(e_), e_, tol))
    throw DomainError(
        "projector axis must be Hermitian (a sigma-type bivector); a bivector "
        "with a boost component gives a degenerate (1+e)/2");
  value_ = 0.5 * (one + e_);
}

Multivector Projector::complement() const {
  return Multivector::scalar(e_.signature(), 1.0) - value_;
}

TwoSpinor::TwoSpinor(Multivector value, Projector frame, const Tolerance& tol)
    : value_(std::move(value)), frame_(std::move(frame)) {
  require_spacetime(value_, "two-spinors live in Cl(1,3)");
  require_even(value_, "two-spinor values are even multivectors", tol);
  if (!approx_equal(value_ * frame_.value(), value_, tol))
    throw DomainError("two-spinor value must lie in the ideal of its frame");
}

Projector projector_from_bivector(const Multivector& e, const Tolerance& tol) {
  return Projector(e, tol);
}

std::pair<TwoSpinor, TwoSpinor> split(const Multivector& psi, const Projector& l,
                                      const Tolerance& tol) {
  require_spacetime(psi, "split expects an even multivector of Cl(1,3)");
  require_even(psi, "split expects an even multivector", tol);
  return {TwoSpinor(psi * l.value(), l, tol),
          TwoSpinor(psi * l.complement(), Projector(-1.0 * l.bivector(), tol), tol)};
}

SpinBasis spin_basis(const Projector& l, const Tolerance& tol) {
  Multivector r = frame_rotor(l.bivector());
  Multivector iota = r * (dirac_sigma(1) * 0.5 *
                          (Multivector::scalar(dirac_signature(), 1.0) +
                           dirac_sigma(3))) *
                     reverse(r);
  TwoSpinor o(l.value(), l, tol);
  TwoSpinor i(iota, l, tol);
  Multivector epsilon = product_b(o.value(), i.value(), tol);
  return {std::move(o), std::move(i), std::move(epsilon)};
}

Multivector product_s(const Multivector& a, const Multivector& b,
                      const Tolerance& tol) {
  require_same_signature(a, b);
  require_even(a, "spinor products are defined on even multivectors", tol);
  require_even(b, "spinor products are defined on even multivectors", tol);
  return 0.5 * (reverse(a) * b + reverse(b) * a);
}

Multivector product_b(const Multivector& a, const Multivector& b,
                      const Tolerance& tol) {
  require_same_signature(a, b);
  require_even(a, "spinor products are defined on even multivectors", tol);
  require_even(b, "spinor products are defined on even multivectors", tol);
  return 0.5 * (reverse(a) * b - reverse(b) * a);
}

std::complex<double> inner_product(const TwoSpinor& eta, const TwoSpinor& xi,
                                   const Tolerance& tol) {
  require_same_frame(eta, xi, "inner product requires spinors sharing a frame");
  SpinBasis basis = spin_basis(eta.frame(), tol);
  Multivector w =
      -2.0 * product_s(reverse(eta.value()) * xi.value(), dagger(basis.epsilon), tol);
  return {scalar_part(w), pseudoscalar_part(w)};
}

std::array<std::complex<double>, 2> spinor_components(const TwoSpinor& eta,
                                                      const Tolerance& tol) {
  SpinBasis basis = spin_basis(eta.frame(), tol);
  return {inner_product(eta, basis.iota, tol), inner_product(basis.o, eta, tol)};
}

Multivector flagpole(const TwoSpinor& eta, const Tolerance& tol) {
  if (approx_zero(eta.value(), tol))
    throw DomainError("the zero spinor has no flagpole");
  return eta.value() * dagger(eta.value());
}

Multivector spacelike_paravector(const TwoSpinor& eta, const TwoSpinor& chi,
                                 const Tolerance& tol) {
  require_same_frame(eta, chi, "paravectors require spinors sharing a frame");
  (void)tol;
  return eta.value() * dagger(chi.value()) + chi.value() * dagger(eta.value());
}

Multivector flag(const TwoSpinor& eta, const TwoSpinor& chi, const Tolerance& tol) {
  require_same_frame(eta, chi, "flags require spinors sharing a frame");
  std::complex<double> w = inner_product(eta, chi, tol);
  if (std::abs(w) <= tol.abs_eps * coefficient_norm(eta.value()) *
                         coefficient_norm(chi.value()))
    throw DomainError("flags require linearly independent spinors");
  return product_b(flagpole(eta, tol), spacelike_paravector(eta, chi, tol), tol);
}

Multivector timelike_paravector(const TwoSpinor& eta, const TwoSpinor& chi,
                                const Tolerance& tol) {
  require_same_frame(eta, chi, "paravectors require spinors sharing a frame");
  (void)tol;
  return eta.value() * dagger(eta.value()) + chi.value() * dagger(chi.value());
}

NullTetrad null_tetrad(const Projector& l, const Tolerance& tol) {
  SpinBasis b = spin_basis(l, tol);
  const Multivector& o = b.o.value();
  const Multivector& i = b.iota.value();
  return {o * dagger(o), i * dagger(i), o * dagger(i), i * dagger(o)};
}

Multivector bivector_from_components(
    const std::array<std::array<std::complex<double>, 2>, 2>& beta,
    const Projector& l, const Tolerance& tol) {
  double scale = 0.0;
  for (const auto& row : beta)
    for (const auto& z : row) scale = std::max(scale, std::abs(z));
  if (std::abs(beta[0][1] - beta[1][0]) > tol.abs_eps + tol.rel_eps * scale)
    throw DomainError("bivector components must form a symmetric matrix");
  NullTetrad t = null_tetrad(l, tol);
  return from_c(beta[0][0]) * t.m_dagger + from_c(beta[0][1]) * (t.n - t.l) -
         from_c(beta[1][1]) * t.m;
}

std::array<std::array<std::complex<double>, 2>, 2> bivector_components(
    const Multivector& b, const Projector& l, const Tolerance& tol) {
  require_spacetime(b, "bivector decomposition lives in Cl(1,3)");
  if (!is_grade(b, 2, tol))
    throw DomainError("bivector decomposition expects a grade-2 element");
  NullTetrad t = null_tetrad(l, tol);
  Multivector diag = t.n - t.l;
  const std::array<Multivector, 6> basis = {
      t.m_dagger,          dirac_I() * t.m_dagger, diag, dirac_I() * diag,
      -1.0 * t.m,          -1.0 * (dirac_I() * t.m)};
  static const int masks[6] = {3, 5, 6, 9, 10, 12};
  Eigen::Matrix<double, 6, 6> a;
  Eigen::Matrix<double, 6, 1> rhs;
  for (int row = 0; row < 6; ++row) {
    rhs[row] = b.coefficient(static_cast<std::uint32_t>(masks[row]));
    for (int col = 0; col < 6; ++col)
      a(row, col) = basis[col].coefficient(static_cast<std::uint32_t>(masks[row]));
  }
  Eigen::Matrix<double, 6, 1> x = a.colPivHouseholderQr().solve(rhs);
  std::array<std::array<std::complex<double>, 2>, 2> beta;
  beta[0][0] = {x[0], x[1]};
  beta[0][1] = {x[2], x[3]};
  beta[1][0] = beta[0][1];
  beta[1][1] = {x[4], x[5]};
  return beta;
}

DiracSpinor dirac_from_two_spinors(const TwoSpinor& eta, const TwoSpinor& chi,
                                   const Tolerance& tol) {
  require_same_frame(eta, chi, "a Dirac spinor needs both halves in one frame");
  Multivector psi = eta.value() + dagger(reverse(chi.value()));
  DiracFrame frame(dirac_gamma(0), eta.frame().bivector() * dirac_gamma(0), tol);
  return DiracSpinor(std::move(psi), std::move(frame), tol);
}

std::optional<int> chirality_eigenvalue(const Multivector& eta, const Projector& l,
                                        const Tolerance& tol) {
  require_spacetime(eta, "chirality is defined in Cl(1,3)");
  if (approx_zero(eta, tol)) return std::nullopt;
  if (approx_equal(eta * l.value(), eta, tol)) return 1;
  if (approx_equal(eta * l.complement(), eta, tol)) return -1;
  return std::nullopt;
}

std::optional<int> charge_conjugation_eigenvalue(const Multivector& eta,
                                                 const Tolerance& tol) {
  require_spacetime(eta, "charge conjugation is defined in Cl(1,3)");
  if (approx_zero(eta, tol)) return std::nullopt;
  Multivector c = eta * dirac_sigma(2);
  if (approx_equal(c, eta, tol)) return 1;
  if (approx_equal(c, -1.0 * eta, tol)) return -1;
  return std::nullopt;
}

}  // namespace cliffspin

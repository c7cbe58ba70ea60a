#include "cliffspin/spin_group.hpp"

namespace cliffspin {

std::string to_string(VersorClass::Tag tag) {
  switch (tag) {
    case VersorClass::Tag::not_versor: return "not_versor";
    case VersorClass::Tag::pin: return "pin";
    case VersorClass::Tag::spin: return "spin";
    default: return "spin_plus";
  }
}

VersorClass classify_versor(const Multivector& u, const Tolerance& tol) {
  Multivector n = u * reverse(u);
  double lambda = scalar_part(n);
  double scale = std::max(1.0, max_abs_coefficient(n));
  Multivector rest = n - Multivector::scalar(u.signature(), lambda);
  if (!approx_zero(rest, tol, scale)) return {};
  if (!tol.close(std::abs(lambda), 1.0)) return {};
  double amp = max_abs_coefficient(u);
  bool has_even = !approx_zero(even_part(u), tol, amp);
  bool has_odd = !approx_zero(odd_part(u), tol, amp);
  if (has_even && has_odd) return {};
  VersorClass out;
  out.norm = lambda;
  if (has_odd)
    out.tag = VersorClass::Tag::pin;
  else
    out.tag = lambda > 0.0 ? VersorClass::Tag::spin_plus : VersorClass::Tag::spin;
  return out;
}

Multivector adjoint_act(const Multivector& u, const Multivector& a, int sign,
                        const Tolerance& tol) {
  require_same_signature(u, a);
  if (classify_versor(u, tol).tag == VersorClass::Tag::not_versor)
    throw DomainError("adjoint action requires a versor with U*reverse(U) = +-1");
  Multivector out = u * a * reverse(u);
  return sign >= 0 ? out : -out;
}

Multivector spinor_transform(const Multivector& u, const Multivector& psi,
                             const Tolerance& tol) {
  require_same_signature(u, psi);
  VersorClass c = classify_versor(u, tol);
  if (c.tag != VersorClass::Tag::spin && c.tag != VersorClass::Tag::spin_plus)
    throw DomainError("spinor transform requires U in Spin(p,q)");
  if (!approx_zero(odd_part(psi), tol, max_abs_coefficient(psi)))
    throw DomainError("spinor transform requires an even spinor");
  return u * psi;
}

}  // namespace cliffspin

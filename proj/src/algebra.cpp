#include "cliffspin/algebra.hpp"

#include <bit>
#include <cmath>
#include <utility>

namespace cliffspin {

namespace {

// Sign from reordering the concatenation of two ascending blades into
// ascending order: counts, for every vector in b, the factors of a it must
// move past.
int reorder_sign(std::uint32_t a, std::uint32_t b) {
  a >>= 1;
  int swaps = 0;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

// Product of the metric signs of the vectors contracted between two blades.
double metric_sign(const Signature& sig, std::uint32_t common) {
  double s = 1.0;
  while (common != 0) {
    int i = std::countr_zero(common);
    s *= sig.metric(i + 1);
    common &= common - 1;
  }
  return s;
}

int grade_sign(int k, int which) {
  switch (which) {
    case 0:  // grade involution
      return (k % 2 == 0) ? 1 : -1;
    case 1:  // reverse
      return ((k * (k - 1) / 2) % 2 == 0) ? 1 : -1;
    default:  // clifford conjugation
      return ((k * (k + 1) / 2) % 2 == 0) ? 1 : -1;
  }
}

Multivector apply_grade_signs(const Multivector& a, int which) {
  Eigen::VectorXd c = a.coefficients();
  for (Eigen::Index m = 0; m < c.size(); ++m)
    c[m] *= grade_sign(blade_grade(static_cast<std::uint32_t>(m)), which);
  return {a.signature(), std::move(c)};
}

}  // namespace

Signature::Signature(int p_, int q_) : p(p_), q(q_) {
  if (p < 0 || q < 0 || p + q > max_dimension)
    throw DomainError("signature requires 0 <= p, 0 <= q and p+q <= " +
                      std::to_string(max_dimension) + ", got " + std::to_string(p_) + "," +
                      std::to_string(q_));
}

double Signature::metric(int i) const {
  if (i < 1 || i > dimension())
    throw DomainError("basis vector index " + std::to_string(i) +
                      " out of range for Cl(" + to_string(*this) + ")");
  return i <= p ? 1.0 : -1.0;
}

std::string to_string(const Signature& sig) {
  return std::to_string(sig.p) + "," + std::to_string(sig.q);
}

bool Tolerance::close(double x, double y) const {
  return std::abs(x - y) <= abs_eps + rel_eps * std::max(std::abs(x), std::abs(y));
}

bool Tolerance::negligible(double x, double scale) const {
  return std::abs(x) <= abs_eps + rel_eps * std::abs(scale);
}

Multivector::Multivector(Signature sig)
    : sig_(sig), c_(Eigen::VectorXd::Zero(sig.count())) {}

Multivector::Multivector(Signature sig, Eigen::VectorXd coefficients)
    : sig_(sig), c_(std::move(coefficients)) {
  if (c_.size() != sig_.count())
    throw DomainError("coefficient vector has size " + std::to_string(c_.size()) +
                      ", expected " + std::to_string(sig_.count()) + " for Cl(" +
                      to_string(sig_) + ")");
}

Multivector Multivector::scalar(Signature sig, double value) {
  Multivector a(sig);
  a.c_[0] = value;
  return a;
}

Multivector Multivector::basis_vector(Signature sig, int i) {
  sig.metric(i);  // range check
  return blade(sig, 1u << (i - 1));
}

Multivector Multivector::blade(Signature sig, std::uint32_t mask, double value) {
  if (mask >= static_cast<std::uint32_t>(sig.count()))
    throw DomainError("blade mask out of range for Cl(" + to_string(sig) + ")");
  Multivector a(sig);
  a.c_[mask] = value;
  return a;
}

Multivector Multivector::pseudoscalar(Signature sig) {
  return blade(sig, static_cast<std::uint32_t>(sig.count()) - 1u);
}

double Multivector::coefficient(std::uint32_t mask) const {
  if (mask >= static_cast<std::uint32_t>(sig_.count()))
    throw DomainError("blade mask out of range for Cl(" + to_string(sig_) + ")");
  return c_[mask];
}

int blade_grade(std::uint32_t mask) { return std::popcount(mask); }

void require_same_signature(const Multivector& a, const Multivector& b) {
  if (!(a.signature() == b.signature()))
    throw DomainError("signature mismatch: Cl(" + to_string(a.signature()) + ") vs Cl(" +
                      to_string(b.signature()) + ")");
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b);
  const Signature& sig = a.signature();
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(sig.count());
  for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(sig.count()); ++i) {
    if (ca[i] == 0.0) continue;
    for (std::uint32_t j = 0; j < static_cast<std::uint32_t>(sig.count()); ++j) {
      if (cb[j] == 0.0) continue;
      double s = reorder_sign(i, j) * metric_sign(sig, i & j);
      out[i ^ j] += s * ca[i] * cb[j];
    }
  }
  return {sig, std::move(out)};
}

Multivector outer_product(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b);
  const Signature& sig = a.signature();
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(sig.count());
  for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(sig.count()); ++i) {
    if (ca[i] == 0.0) continue;
    for (std::uint32_t j = 0; j < static_cast<std::uint32_t>(sig.count()); ++j) {
      if (cb[j] == 0.0 || (i & j) != 0) continue;
      out[i ^ j] += reorder_sign(i, j) * ca[i] * cb[j];
    }
  }
  return {sig, std::move(out)};
}

Multivector commutator_product(const Multivector& a, const Multivector& b) {
  return 0.5 * (a * b - b * a);
}

Multivector grade_project(const Multivector& a, int k) {
  if (k < 0 || k > a.signature().dimension())
    throw DomainError("grade " + std::to_string(k) + " out of range for Cl(" +
                      to_string(a.signature()) + ")");
  Eigen::VectorXd c = a.coefficients();
  for (Eigen::Index m = 0; m < c.size(); ++m)
    if (blade_grade(static_cast<std::uint32_t>(m)) != k) c[m] = 0.0;
  return {a.signature(), std::move(c)};
}

Multivector grade_involution(const Multivector& a) { return apply_grade_signs(a, 0); }
Multivector reverse(const Multivector& a) { return apply_grade_signs(a, 1); }
Multivector clifford_conjugate(const Multivector& a) { return apply_grade_signs(a, 2); }

Multivector even_part(const Multivector& a) { return 0.5 * (a + grade_involution(a)); }
Multivector odd_part(const Multivector& a) { return 0.5 * (a - grade_involution(a)); }

double scalar_part(const Multivector& a) { return a.coefficients()[0]; }

double pseudoscalar_part(const Multivector& a) {
  return a.coefficients()[a.signature().count() - 1];
}

double coefficient_norm(const Multivector& a) { return a.coefficients().norm(); }

double max_abs_coefficient(const Multivector& a) {
  return a.coefficients().size() == 0 ? 0.0 : a.coefficients().cwiseAbs().maxCoeff();
}

bool approx_equal(const Multivector& a, const Multivector& b, const Tolerance& tol) {
  require_same_signature(a, b);
  for (Eigen::Index m = 0; m < a.coefficients().size(); ++m)
    if (!tol.close(a.coefficients()[m], b.coefficients()[m])) return false;
  return true;
}

bool approx_zero(const Multivector& a, const Tolerance& tol, double scale) {
  return tol.negligible(max_abs_coefficient(a), scale);
}

bool is_grade(const Multivector& a, int k, const Tolerance& tol) {
  double scale = max_abs_coefficient(a);
  for (Eigen::Index m = 0; m < a.coefficients().size(); ++m)
    if (blade_grade(static_cast<std::uint32_t>(m)) != k &&
        !tol.negligible(a.coefficients()[m], scale))
      return false;
  return true;
}

Multivector exp_bivector(const Multivector& b, int sign, const Tolerance& tol) {
  if (!is_grade(b, 2, tol))
    throw DomainError("exp_bivector requires a pure grade-2 argument");
  Multivector x = sign >= 0 ? b : -b;
  Multivector x2 = x * x;
  double lambda = scalar_part(x2);
  Multivector rest = x2 - Multivector::scalar(x.signature(), lambda);
  if (approx_zero(rest, tol, max_abs_coefficient(x2))) {
    Multivector one = Multivector::scalar(x.signature(), 1.0);
    if (tol.negligible(lambda, max_abs_coefficient(x))) return one + x;
    double w = std::sqrt(std::abs(lambda));
    if (lambda < 0.0)
      return std::cos(w) * one + (std::sin(w) / w) * x;
    return std::cosh(w) * one + (std::sinh(w) / w) * x;
  }
  // B^2 is not scalar: power series with term-norm cutoff.
  Multivector acc = Multivector::scalar(x.signature(), 1.0);
  Multivector term = acc;
  for (int k = 1; k <= 64; ++k) {
    term = term * x / static_cast<double>(k);
    acc = acc + term;
    if (coefficient_norm(term) < tol.abs_eps) break;
  }
  return acc;
}

Multivector versor_inverse(const Multivector& u, const Tolerance& tol) {
  Multivector n = u * reverse(u);
  double lambda = scalar_part(n);
  Multivector rest = n - Multivector::scalar(u.signature(), lambda);
  double scale = std::max(max_abs_coefficient(n), 1.0);
  if (!approx_zero(rest, tol, scale) || tol.negligible(lambda, scale))
    throw DomainError("non-invertible versor: U*reverse(U) is not an invertible scalar");
  return reverse(u) / lambda;
}

Paravector paravector_split(const Multivector& a, const Multivector& r,
                            const Tolerance& tol) {
  require_same_signature(a, r);
  if (!is_grade(a, 1, tol))
    throw DomainError("paravector split requires a grade-1 element");
  if (!is_grade(r, 1, tol))
    throw DomainError("paravector split axis must be grade-1");
  double r2 = scalar_part(r * r);
  if (!tol.close(std::abs(r2), 1.0))
    throw DomainError("paravector split axis must square to +1 or -1");
  return Paravector{a * r, r};
}

Paravector make_paravector(Multivector value, Multivector split_vector,
                           const Tolerance& tol) {
  require_same_signature(value, split_vector);
  if (!approx_zero(odd_part(value), tol, max_abs_coefficient(value)))
    throw DomainError("paravector value must be even");
  if (!is_grade(split_vector, 1, tol))
    throw DomainError("paravector split axis must be grade-1");
  double r2 = scalar_part(split_vector * split_vector);
  if (!tol.close(std::abs(r2), 1.0))
    throw DomainError("paravector split axis must square to +1 or -1");
  return Paravector{std::move(value), std::move(split_vector)};
}

Multivector operator+(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b);
  return {a.signature(), a.coefficients() + b.coefficients()};
}

Multivector operator-(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b);
  return {a.signature(), a.coefficients() - b.coefficients()};
}

Multivector operator-(const Multivector& a) { return {a.signature(), -a.coefficients()}; }

Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}

Multivector operator^(const Multivector& a, const Multivector& b) {
  return outer_product(a, b);
}

Multivector operator*(double s, const Multivector& a) {
  return {a.signature(), s * a.coefficients()};
}

Multivector operator*(const Multivector& a, double s) { return s * a; }

Multivector operator/(const Multivector& a, double s) {
  return {a.signature(), a.coefficients() / s};
}

}  // namespace cliffspin

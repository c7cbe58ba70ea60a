#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "cliffspin/error.hpp"

namespace cliffspin {

/// Metric signature of the real Clifford algebra Cl(p,q): the first p basis
/// vectors square to +1, the remaining q square to -1.  Basis vector indices
/// are 1-based throughout.
struct Signature {
  int p = 0;
  int q = 0;

  Signature() = default;
  Signature(int p_, int q_);

  int dimension() const { return p + q; }
  /// Number of coefficients, 2^(p+q).
  int count() const { return 1 << dimension(); }
  /// p - q, the row-invariant used by the matrix classification table.
  int s() const { return p - q; }
  /// Square of basis vector i (1-based): +1.0 or -1.0.
  double metric(int i) const;

  bool operator==(const Signature&) const = default;

  static constexpr int max_dimension = 12;
};

std::string to_string(const Signature& sig);

/// Absolute/relative tolerance pair used by every approximate comparison:
/// x and y are close when |x - y| <= abs_eps + rel_eps * max(|x|, |y|).
struct Tolerance {
  double abs_eps = 1e-9;
  double rel_eps = 1e-9;

  bool close(double x, double y) const;
  /// |x| <= abs_eps + rel_eps * |scale|.
  bool negligible(double x, double scale = 0.0) const;
};

/// Dense multivector of Cl(p,q).  Coefficient k multiplies the basis blade
/// whose 1-based vector indices are the set bits of k (bit i-1 set iff e_i is
/// a factor), with factors in ascending order.  Values are immutable after
/// construction; every operation returns a new value.
class Multivector {
 public:
  /// Zero multivector.
  explicit Multivector(Signature sig);
  /// Takes ownership of a full coefficient vector (size must be 2^(p+q)).
  Multivector(Signature sig, Eigen::VectorXd coefficients);

  static Multivector scalar(Signature sig, double value);
  /// Basis vector e_i, 1-based.
  static Multivector basis_vector(Signature sig, int i);
  /// Basis blade by bitmask, scaled by value.
  static Multivector blade(Signature sig, std::uint32_t mask, double value = 1.0);
  /// Unit pseudoscalar e_1...e_n.
  static Multivector pseudoscalar(Signature sig);

  const Signature& signature() const { return sig_; }
  const Eigen::VectorXd& coefficients() const { return c_; }
  double coefficient(std::uint32_t mask) const;

 private:
  Signature sig_;
  Eigen::VectorXd c_;
};

/// Grade (number of vector factors) of the blade with the given bitmask.
int blade_grade(std::uint32_t mask);

// -- products ---------------------------------------------------------------

Multivector geometric_product(const Multivector& a, const Multivector& b);
/// Grade-(j+k) part of the product of grade-j and grade-k blades; blades
/// sharing an index contribute nothing.
Multivector outer_product(const Multivector& a, const Multivector& b);
/// a x b = (ab - ba)/2.
Multivector commutator_product(const Multivector& a, const Multivector& b);

// -- grade maps -------------------------------------------------------------

Multivector grade_project(const Multivector& a, int k);
/// Grade involution: multiplies grade-k parts by (-1)^k.  A homomorphism.
Multivector grade_involution(const Multivector& a);
/// Reverse: multiplies grade-k parts by (-1)^(k(k-1)/2).  An anti-homomorphism.
Multivector reverse(const Multivector& a);
/// Clifford conjugation: composition of the previous two,
/// signs (-1)^(k(k+1)/2).  An anti-homomorphism.
Multivector clifford_conjugate(const Multivector& a);
/// (a + grade_involution(a))/2 and (a - grade_involution(a))/2.
Multivector even_part(const Multivector& a);
Multivector odd_part(const Multivector& a);

double scalar_part(const Multivector& a);
double pseudoscalar_part(const Multivector& a);

// -- norms and comparisons ----------------------------------------------------

/// Euclidean norm of the coefficient vector (basis-dependent working norm).
double coefficient_norm(const Multivector& a);
double max_abs_coefficient(const Multivector& a);
bool approx_equal(const Multivector& a, const Multivector& b, const Tolerance& tol = {});
bool approx_zero(const Multivector& a, const Tolerance& tol = {}, double scale = 0.0);
/// True when every coefficient outside grade k is negligible.
bool is_grade(const Multivector& a, int k, const Tolerance& tol = {});

// -- exponential and inverses -------------------------------------------------

/// exp(sign*B) for a bivector B.  Uses the trigonometric / hyperbolic /
/// degenerate closed forms when B^2 is a scalar within tolerance, otherwise
/// sums the power series until the term norm falls below abs_eps, with a hard
/// cap of 64 terms.
Multivector exp_bivector(const Multivector& b, int sign = +1, const Tolerance& tol = {});

/// Inverse of a versor-like element: requires U*reverse(U) to be an invertible
/// scalar and returns reverse(U)/(U*reverse(U)).
Multivector versor_inverse(const Multivector& u, const Tolerance& tol = {});

// -- paravectors --------------------------------------------------------------

/// Even element a*r together with the split vector r that produced it.
struct Paravector {
  Multivector value;
  Multivector split_vector;
};

/// Splits the grade-1 element a against the unit vector r (r^2 = +1 or -1)
/// into the even element a*r.  value * reverse(value) = r^2 * a^2.
Paravector paravector_split(const Multivector& a, const Multivector& r,
                            const Tolerance& tol = {});

/// Wraps an already-even value with its split vector, validating grades only.
Paravector make_paravector(Multivector value, Multivector split_vector,
                           const Tolerance& tol = {});

// -- operator sugar -----------------------------------------------------------

Multivector operator+(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a);
/// Geometric product.
Multivector operator*(const Multivector& a, const Multivector& b);
/// Outer product.
Multivector operator^(const Multivector& a, const Multivector& b);
Multivector operator*(double s, const Multivector& a);
Multivector operator*(const Multivector& a, double s);
Multivector operator/(const Multivector& a, double s);

void require_same_signature(const Multivector& a, const Multivector& b);

}  // namespace cliffspin

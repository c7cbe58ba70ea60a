#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "cliffspin/algebra.hpp"

namespace cliffspin {

/// Base ring of the matrix algebra isomorphic to a given Cl(p,q).
enum class RepRing { real, complex, quaternion };

std::string to_string(RepRing ring);

/// Classification entry: Cl(p,q) is F(size) or 2F(size) (a direct sum of two
/// copies) with F one of R, C, H.  Indexed by n = p+q and s = p-q, periodic
/// in s with period 8.
struct RepTag {
  RepRing ring = RepRing::real;
  int size = 1;
  bool doubled = false;

  bool operator==(const RepTag&) const = default;
};

/// "R(2)", "C(4)", "2H(2)", ...
std::string to_string(const RepTag& tag);

/// dim_R(F) * size^2 * (doubled ? 2 : 1); equals 2^(p+q) for every entry.
int real_dimension(const RepTag& tag);

/// Classification of Cl(p,q) for p+q <= 7.
RepTag rep_lookup(const Signature& sig);

/// Matrix over the tag's ring.  Quaternion entries are realized as 2x2
/// complex blocks, so a quaternion matrix of ring size m is stored as a
/// 2m x 2m complex matrix; real and complex rings store size m directly.
/// `second` is empty unless the algebra is doubled, in which case the
/// element is the ordered pair (first, second).
struct RingMatrix {
  Eigen::MatrixXcd first;
  Eigen::MatrixXcd second;
};

struct MatrixRep {
  Signature sig;
  RepTag tag;
  std::vector<RingMatrix> generators;  // images of basis vectors 1..p+q
};

/// Generator matrices for p+q <= 4: hand-written bases for the low rows
/// (diag(1,-1) and the flip for Cl(2,0), the Pauli matrices for Cl(3,0),
/// quaternion units for Cl(0,2), ...) and tensor constructions for n = 4.
MatrixRep build_rep(const Signature& sig);

/// Image of a basis blade: the product of generator images with indices
/// taken in ascending order.
RingMatrix rep_blade(const MatrixRep& rep, std::uint32_t mask);

/// Linear extension of rep_blade to any multivector of the rep's signature.
RingMatrix rep_apply(const MatrixRep& rep, const Multivector& a);

struct RepReport {
  /// Worst |g_i g_j + g_j g_i - 2 metric(i) delta_ij| over all pairs, and
  /// the 1-based indices where it occurs.
  double relation_residual = 0.0;
  int worst_i = 0;
  int worst_j = 0;
  /// Worst defect of rep_apply(a*b) = rep_apply(a)*rep_apply(b) on
  /// pseudo-random sample pairs.
  double product_residual = 0.0;
  /// Whether the 2^n blade images are linearly independent over the reals.
  bool injective = false;

  double max_residual() const;
};

RepReport verify_rep(const MatrixRep& rep, int samples = 100);

/// Column image of a spinor in the left ideal of Cl(3,0) picked by the unit
/// vector r: psi*(1+r)/2 written over the ideal basis {l, u*l} with the
/// pseudoscalar acting as i, where u completes r to an adapted frame
/// (u = e1 when r = e3, giving the column (Psi_0 + Psi_3, Psi_1 + i Psi_2)).
/// Left multiplication acts through the matrix image:
///   ideal_column(a * psi, e3) = rep_apply(build_rep({3,0}), a) * column.
std::array<std::complex<double>, 2> ideal_column(const Multivector& psi,
                                                 const Multivector& r,
                                                 const Tolerance& tol = {});

/// Embeds an element of the complex algebra Cl2, given by coefficients over
/// the basis {1, e1, e2, e12}, into Cl(3,0): e1 -> sigma1, e2 -> sigma2 and
/// the commuting imaginary unit i -> -I, which sends i*e12 to +sigma3.
/// An algebra isomorphism onto all of Cl(3,0).
Multivector complex_embed(const std::array<std::complex<double>, 4>& a);

}  // namespace cliffspin

#pragma once

#include <array>

#include "cliffspin/algebra.hpp"

namespace cliffspin {

/// Euclidean image of a spacetime vector.  The value reads in Cl(4,0) with
/// the fixed basis convention (e1, e2, e3, e4) = (image of gamma0, images
/// of sigma1, sigma2, sigma3); source_sig records the algebra the vector
/// was rotated out of.
struct WickImage {
  Multivector value;
  Signature source_sig;
};

/// Rotates a grade-1 element of Cl(1,3) into Cl(4,0): the paravector
/// a*gamma0 = <a gamma0>_0 + <a gamma0>_2 is re-indexed through
/// gamma0 -> e1 and sigma_k = gamma_k gamma0 -> e_{k+1}.  A linear
/// bijection from spacetime vectors onto Euclidean ones.
WickImage wick_rotate(const Multivector& a);

/// 1/2 (a b + b a) on the rotated values: the positive-definite form
/// sum_mu a_mu b_mu that replaces the Lorentz inner product.
double euclidean_scalar_product(const WickImage& a, const WickImage& b);

/// Result of the constructive check that Cl(1,3) and Cl(3,1) share one
/// even subalgebra: the relative bases sigma_k = gamma_k gamma0 (with
/// gamma0^2 = +1) and sigma'_k = lambda_k lambda0 (with lambda0^2 = -1)
/// each square to +1 and generate identical 8x8 multiplication tables
/// over {1, sigma_i, sigma_i sigma_j, sigma1 sigma2 sigma3}.
struct BridgeReport {
  std::array<double, 3> sigma_squared_in_13{};
  std::array<double, 3> sigma_squared_in_31{};
  /// Worst mismatch between corresponding structure constants, including
  /// any part of a product that escapes the spanned basis.
  double table_residual = 0.0;

  bool passed() const;
};

BridgeReport signature_bridge_check();

}  // namespace cliffspin

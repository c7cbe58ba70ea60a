#include "cliffspin/wick.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <vector>

#include "cliffspin/dirac.hpp"
#include "cliffspin/error.hpp"

namespace cliffspin {

namespace {

// Ordered products of the three relative vectors over subset masks: the
// eight-element basis {1, s1, s2, s1 s2, s3, s1 s3, s2 s3, s1 s2 s3} of the
// even subalgebra.  Every entry is plus or minus a single blade, so the
// 16x8 coefficient matrix has orthonormal signed columns and structure
// constants come out of a plain transpose product, exactly.
std::vector<Multivector> subset_products(const std::array<Multivector, 3>& s,
                                         const Signature& sig) {
  std::vector<Multivector> basis;
  for (int m = 0; m < 8; ++m) {
    Multivector e = Multivector::scalar(sig, 1.0);
    for (int k = 0; k < 3; ++k)
      if (m & (1 << k)) e = e * s[k];
    basis.push_back(e);
  }
  return basis;
}

struct EvenTable {
  // structure constants c[a][b] with basis[a]*basis[b] = sum_m c[a][b][m] basis[m]
  std::array<std::array<Eigen::Matrix<double, 8, 1>, 8>, 8> c{};
  double residual = 0.0;
};

EvenTable structure_constants(const std::vector<Multivector>& basis) {
  Eigen::MatrixXd span(16, 8);
  for (int m = 0; m < 8; ++m) span.col(m) = basis[m].coefficients();
  EvenTable table;
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const Eigen::VectorXd prod = (basis[a] * basis[b]).coefficients();
      const Eigen::Matrix<double, 8, 1> coeffs = span.transpose() * prod;
      table.c[a][b] = coeffs;
      table.residual = std::max(
          table.residual, (span * coeffs - prod).cwiseAbs().maxCoeff());
    }
  }
  return table;
}

}  // namespace

WickImage wick_rotate(const Multivector& a) {
  if (!(a.signature() == dirac_signature()))
    throw DomainError("wick_rotate expects a vector of Cl(1,3)");
  if (!is_grade(a, 1))
    throw DomainError("wick_rotate expects a grade-1 element");

  const Multivector para = a * dirac_gamma(0);
  const Signature s4{4, 0};
  Multivector value = scalar_part(para) * Multivector::basis_vector(s4, 1);
  // sigma_k = gamma_k gamma0 carries coefficient -1 on the blade joining
  // the first and the (k+1)-th basis vectors
  for (int k = 1; k <= 3; ++k) {
    const std::uint32_t mask = 1u | (1u << k);
    value = value +
            (-para.coefficient(mask)) * Multivector::basis_vector(s4, k + 1);
  }
  return WickImage{value, dirac_signature()};
}

double euclidean_scalar_product(const WickImage& a, const WickImage& b) {
  return 0.5 * scalar_part(a.value * b.value + b.value * a.value);
}

bool BridgeReport::passed() const {
  for (double s : sigma_squared_in_13)
    if (s != 1.0) return false;
  for (double s : sigma_squared_in_31)
    if (s != 1.0) return false;
  return table_residual == 0.0;
}

BridgeReport signature_bridge_check() {
  BridgeReport report;
  const Signature s13 = dirac_signature();
  const Signature s31{3, 1};

  std::array<Multivector, 3> rel13 = {dirac_sigma(1), dirac_sigma(2),
                                      dirac_sigma(3)};
  const Multivector lambda0 = Multivector::basis_vector(s31, 4);
  std::array<Multivector, 3> rel31 = {
      Multivector::basis_vector(s31, 1) * lambda0,
      Multivector::basis_vector(s31, 2) * lambda0,
      Multivector::basis_vector(s31, 3) * lambda0};

  for (int k = 0; k < 3; ++k) {
    report.sigma_squared_in_13[k] = scalar_part(rel13[k] * rel13[k]);
    report.sigma_squared_in_31[k] = scalar_part(rel31[k] * rel31[k]);
  }

  const EvenTable t13 = structure_constants(subset_products(rel13, s13));
  const EvenTable t31 = structure_constants(subset_products(rel31, s31));
  report.table_residual = std::max(t13.residual, t31.residual);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      report.table_residual =
          std::max(report.table_residual,
                   (t13.c[a][b] - t31.c[a][b]).cwiseAbs().maxCoeff());
  return report;
}

}  // namespace cliffspin

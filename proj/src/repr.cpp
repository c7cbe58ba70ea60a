#include "cliffspin/repr.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "cliffspin/error.hpp"

namespace cliffspin {

namespace {

using Cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

constexpr Cx kI(0.0, 1.0);

Mat mat2(Cx a, Cx b, Cx c, Cx d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

Mat mat1(Cx a) {
  Mat m(1, 1);
  m << a;
  return m;
}

// 2x2 building blocks.  The first three realize R(2): the diagonal and the
// flip square to +1, the spin matrix to -1, and each pair anticommutes.
Mat diag_pm() { return mat2(1, 0, 0, -1); }
Mat flip() { return mat2(0, 1, 1, 0); }
Mat spin() { return mat2(0, 1, -1, 0); }
Mat pauli2() { return mat2(0, -kI, kI, 0); }
Mat quat1() { return mat2(kI, 0, 0, -kI); }  // i sigma3
Mat quat2() { return spin(); }               // i sigma2

RingMatrix single(Mat a) { return RingMatrix{std::move(a), Mat()}; }
RingMatrix paired(Mat a, Mat b) { return RingMatrix{std::move(a), std::move(b)}; }

Mat kron(const Mat& a, const Mat& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

// Grows Cl(p,q) into Cl(p+1,q+1) by tensoring with R(2): existing
// generators pick up the flip on the new factor and the two fresh basis
// vectors act as the diagonal (square +1) and the spin matrix (square -1)
// there.  Applied componentwise when the smaller algebra is a direct sum.
std::vector<RingMatrix> tensor_double(const std::vector<RingMatrix>& old,
                                      int old_positive) {
  std::vector<RingMatrix> out;
  const bool doubled = !old.empty() && old.front().second.size() > 0;
  const Eigen::Index dim = old.empty() ? 1 : old.front().first.rows();
  const Mat id = Mat::Identity(dim, dim);

  const auto lift = [&](const RingMatrix& g) {
    if (doubled) return paired(kron(g.first, flip()), kron(g.second, flip()));
    return single(kron(g.first, flip()));
  };
  const auto fresh = [&](const Mat& m) {
    if (doubled) return paired(kron(id, m), kron(id, m));
    return single(kron(id, m));
  };

  for (int i = 0; i < old_positive; ++i) out.push_back(lift(old[i]));
  out.push_back(fresh(diag_pm()));
  for (int i = old_positive; i < static_cast<int>(old.size()); ++i)
    out.push_back(lift(old[i]));
  out.push_back(fresh(spin()));
  return out;
}

std::vector<RingMatrix> generators_for(const Signature& sig) {
  const int p = sig.p;
  const int q = sig.q;
  const Mat id2 = Mat::Identity(2, 2);

  if (p == 0 && q == 0) return {};
  if (p == 1 && q == 0) return {paired(mat1(1.0), mat1(-1.0))};
  if (p == 0 && q == 1) return {single(mat1(kI))};
  if (p == 2 && q == 0) return {single(diag_pm()), single(flip())};
  if (p == 1 && q == 1) return {single(diag_pm()), single(spin())};
  if (p == 0 && q == 2) return {single(quat1()), single(quat2())};
  if (p == 3 && q == 0)
    return {single(flip()), single(pauli2()), single(diag_pm())};
  if (p == 0 && q == 3) {
    const Mat q3 = quat1() * quat2();
    return {paired(quat1(), quat1()), paired(quat2(), quat2()),
            paired(q3, -q3)};
  }
  if (p == 4 && q == 0) {
    // Cl(0,2) tensor Cl(2,0): the quaternion units commute with the
    // R(2) factor and ride in on its volume element.
    const Mat d = diag_pm() * flip();
    return {single(kron(id2, diag_pm())), single(kron(id2, flip())),
            single(kron(quat1(), d)), single(kron(quat2(), d))};
  }
  if (p == 0 && q == 4) {
    // Cl(2,0) tensor Cl(0,2), the mirror image of the above.
    const Mat q3 = quat1() * quat2();
    return {single(kron(id2, quat1())), single(kron(id2, quat2())),
            single(kron(diag_pm(), q3)), single(kron(flip(), q3))};
  }
  // remaining mixed signatures grow out of Cl(p-1,q-1)
  return tensor_double(generators_for(Signature{p - 1, q - 1}), p - 1);
}

int ring_dim(RepRing ring) {
  switch (ring) {
    case RepRing::real: return 1;
    case RepRing::complex: return 2;
    case RepRing::quaternion: return 4;
  }
  return 1;
}

int complex_rows(const RepTag& tag) {
  return tag.size * (tag.ring == RepRing::quaternion ? 2 : 1);
}

RingMatrix rep_identity(const MatrixRep& rep) {
  const int rows = complex_rows(rep.tag);
  RingMatrix out;
  out.first = Mat::Identity(rows, rows);
  if (rep.tag.doubled) out.second = Mat::Identity(rows, rows);
  return out;
}

Multivector random_mv(std::mt19937& rng, const Signature& sig) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Multivector out(sig);
  for (std::uint32_t mask = 0; mask < (1u << sig.dimension()); ++mask)
    out = out + Multivector::blade(sig, mask, dist(rng));
  return out;
}

}  // namespace

std::string to_string(RepRing ring) {
  switch (ring) {
    case RepRing::real: return "R";
    case RepRing::complex: return "C";
    case RepRing::quaternion: return "H";
  }
  return "?";
}

std::string to_string(const RepTag& tag) {
  std::string out = tag.doubled ? "2" : "";
  out += to_string(tag.ring);
  out += "(" + std::to_string(tag.size) + ")";
  return out;
}

int real_dimension(const RepTag& tag) {
  return ring_dim(tag.ring) * tag.size * tag.size * (tag.doubled ? 2 : 1);
}

RepTag rep_lookup(const Signature& sig) {
  if (sig.dimension() > 7)
    throw DomainError(
        "the classification table covers p+q <= 7; higher rows repeat with "
        "period 8 in p-q");
  RepTag tag;
  switch (((sig.s() % 8) + 8) % 8) {
    case 0:
    case 2: break;  // real, the default
    case 1: tag.doubled = true; break;
    case 3:
    case 7: tag.ring = RepRing::complex; break;
    case 4:
    case 6: tag.ring = RepRing::quaternion; break;
    case 5:
      tag.ring = RepRing::quaternion;
      tag.doubled = true;
      break;
  }
  const int blocks = ring_dim(tag.ring) * (tag.doubled ? 2 : 1);
  tag.size = static_cast<int>(
      std::lround(std::sqrt((1 << sig.dimension()) / double(blocks))));
  return tag;
}

MatrixRep build_rep(const Signature& sig) {
  if (sig.dimension() > 4)
    throw DomainError("explicit matrix generators are provided for p+q <= 4");
  MatrixRep rep;
  rep.sig = sig;
  rep.tag = rep_lookup(sig);
  rep.generators = generators_for(sig);
  return rep;
}

RingMatrix rep_blade(const MatrixRep& rep, std::uint32_t mask) {
  if (mask >> rep.sig.dimension())
    throw DomainError("blade mask out of range for the representation");
  RingMatrix out = rep_identity(rep);
  for (int i = 0; i < rep.sig.dimension(); ++i) {
    if (!(mask & (1u << i))) continue;
    out.first = out.first * rep.generators[i].first;
    if (rep.tag.doubled) out.second = out.second * rep.generators[i].second;
  }
  return out;
}

RingMatrix rep_apply(const MatrixRep& rep, const Multivector& a) {
  if (!(a.signature() == rep.sig))
    throw DomainError(
        "rep_apply needs a multivector of the representation's signature");
  const int rows = complex_rows(rep.tag);
  RingMatrix out;
  out.first = Mat::Zero(rows, rows);
  if (rep.tag.doubled) out.second = Mat::Zero(rows, rows);
  for (std::uint32_t mask = 0; mask < (1u << rep.sig.dimension()); ++mask) {
    const double c = a.coefficient(mask);
    if (c == 0.0) continue;
    const RingMatrix b = rep_blade(rep, mask);
    out.first += c * b.first;
    if (rep.tag.doubled) out.second += c * b.second;
  }
  return out;
}

double RepReport::max_residual() const {
  return std::max(relation_residual, product_residual);
}

RepReport verify_rep(const MatrixRep& rep, int samples) {
  RepReport report;
  const int n = rep.sig.dimension();
  const int rows = complex_rows(rep.tag);
  const Mat id = Mat::Identity(rows, rows);

  const auto pair_dist = [&](const RingMatrix& a, const RingMatrix& b) {
    double d = (a.first - b.first).cwiseAbs().maxCoeff();
    if (rep.tag.doubled)
      d = std::max(d, (a.second - b.second).cwiseAbs().maxCoeff());
    return d;
  };

  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const RingMatrix& gi = rep.generators[i];
      const RingMatrix& gj = rep.generators[j];
      const double target = (i == j) ? 2.0 * rep.sig.metric(i + 1) : 0.0;
      Mat resid = gi.first * gj.first + gj.first * gi.first - target * id;
      double d = resid.cwiseAbs().maxCoeff();
      if (rep.tag.doubled) {
        resid = gi.second * gj.second + gj.second * gi.second - target * id;
        d = std::max(d, resid.cwiseAbs().maxCoeff());
      }
      if (d > report.relation_residual) {
        report.relation_residual = d;
        report.worst_i = i + 1;
        report.worst_j = j + 1;
      }
    }
  }

  std::mt19937 rng(9127);
  for (int s = 0; s < samples; ++s) {
    const Multivector a = random_mv(rng, rep.sig);
    const Multivector b = random_mv(rng, rep.sig);
    const RingMatrix ma = rep_apply(rep, a);
    const RingMatrix mb = rep_apply(rep, b);
    const RingMatrix mab = rep_apply(rep, a * b);
    RingMatrix prod;
    prod.first = ma.first * mb.first;
    if (rep.tag.doubled) prod.second = ma.second * mb.second;
    report.product_residual =
        std::max(report.product_residual, pair_dist(mab, prod));
  }

  const int blades = 1 << n;
  const int entries = rows * rows * (rep.tag.doubled ? 2 : 1);
  Eigen::MatrixXd images(2 * entries, blades);
  for (std::uint32_t mask = 0; mask < static_cast<std::uint32_t>(blades);
       ++mask) {
    const RingMatrix b = rep_blade(rep, mask);
    Eigen::VectorXcd flat(entries);
    flat.head(rows * rows) =
        Eigen::Map<const Eigen::VectorXcd>(b.first.data(), rows * rows);
    if (rep.tag.doubled)
      flat.tail(rows * rows) =
          Eigen::Map<const Eigen::VectorXcd>(b.second.data(), rows * rows);
    images.col(mask).head(entries) = flat.real();
    images.col(mask).tail(entries) = flat.imag();
  }
  report.injective =
      Eigen::FullPivLU<Eigen::MatrixXd>(images).rank() == blades;
  return report;
}

std::array<Cx, 2> ideal_column(const Multivector& psi, const Multivector& r,
                               const Tolerance& tol) {
  const Signature s3{3, 0};
  if (!(psi.signature() == s3) || !(r.signature() == s3))
    throw DomainError("ideal columns live in Cl(3,0)");
  if (!is_grade(r, 1, tol))
    throw DomainError("the ideal axis must be a grade-1 vector");
  if (!approx_equal(r * r, Multivector::scalar(s3, 1.0), tol))
    throw DomainError("the ideal axis must be a unit vector");

  const Multivector one = Multivector::scalar(s3, 1.0);
  const Multivector e1 = Multivector::basis_vector(s3, 1);
  const Multivector e3 = Multivector::basis_vector(s3, 3);

  // rotor taking the third axis to r, with a half turn spliced in when r
  // points nearly opposite so the square root stays well conditioned
  const double c = scalar_part(r * e3);
  Multivector rot(s3);
  if (1.0 + c >= 0.5) {
    rot = (one + r * e3) / std::sqrt(2.0 * (1.0 + c));
  } else {
    const Multivector half_turn = Multivector::blade(s3, 0b101, 1.0);
    rot = ((one - r * e3) / std::sqrt(2.0 * (1.0 - c))) * half_turn;
  }
  const Multivector u = rot * e1 * reverse(rot);

  const Multivector l = 0.5 * (one + r);
  const Multivector a = l * psi * l;
  const Multivector b = l * (u * psi) * l;
  return {Cx(2.0 * scalar_part(a), 2.0 * pseudoscalar_part(a)),
          Cx(2.0 * scalar_part(b), 2.0 * pseudoscalar_part(b))};
}

Multivector complex_embed(const std::array<Cx, 4>& a) {
  const Signature s3{3, 0};
  const Multivector images[4] = {
      Multivector::scalar(s3, 1.0), Multivector::basis_vector(s3, 1),
      Multivector::basis_vector(s3, 2), Multivector::blade(s3, 0b011, 1.0)};
  const Multivector minus_i = -1.0 * Multivector::pseudoscalar(s3);
  Multivector out(s3);
  for (int k = 0; k < 4; ++k) {
    out = out + a[k].real() * images[k];
    out = out + a[k].imag() * (minus_i * images[k]);
  }
  return out;
}

}  // namespace cliffspin

#include "cliffspin/repr.hpp"

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cliffspin/algebra.hpp"
#include "cliffspin/error.hpp"
#include "doctest.h"
#include "random_support.hpp"

using namespace cliffspin;

namespace {

using Cx = std::complex<double>;

const Tolerance kTight{1e-12, 1e-12};

Eigen::MatrixXcd mat2(Cx a, Cx b, Cx c, Cx d) {
  Eigen::MatrixXcd m(2, 2);
  m << a, b, c, d;
  return m;
}

double mat_dist(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// All fifteen signatures with explicit matrix constructions.
std::vector<Signature> buildable_signatures() {
  std::vector<Signature> sigs;
  for (int n = 0; n <= 4; ++n)
    for (int p = 0; p <= n; ++p) sigs.push_back(Signature{p, n - p});
  return sigs;
}

// Reference product for the complex algebra Cl2: an element is a pair
// (re, im) of real Cl(2,0) multivectors and the commuting i multiplies
// through componentwise.
using C2 = std::pair<Multivector, Multivector>;

C2 c2_from_array(const std::array<Cx, 4>& a) {
  const Signature s2{2, 0};
  Multivector re(s2), im(s2);
  for (std::uint32_t m = 0; m < 4; ++m) {
    re = re + Multivector::blade(s2, m, a[m].real());
    im = im + Multivector::blade(s2, m, a[m].imag());
  }
  return {re, im};
}

std::array<Cx, 4> c2_to_array(const C2& a) {
  std::array<Cx, 4> out;
  for (std::uint32_t m = 0; m < 4; ++m)
    out[m] = Cx(a.first.coefficient(m), a.second.coefficient(m));
  return out;
}

C2 c2_mul(const C2& a, const C2& b) {
  return {a.first * b.first - a.second * b.second,
          a.first * b.second + a.second * b.first};
}

std::array<Cx, 4> random_c2(std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::array<Cx, 4> out;
  for (auto& z : out) z = Cx(dist(rng), dist(rng));
  return out;
}

}  // namespace

TEST_CASE("classification table") {
  struct Row {
    int p, q;
    const char* tag;
  };
  // Indexed by n = p+q and s = p-q; every row of the table for n <= 7.
  static const Row table[] = {
      {0, 0, "R(1)"},
      {0, 1, "C(1)"},  {1, 0, "2R(1)"},
      {0, 2, "H(1)"},  {1, 1, "R(2)"},  {2, 0, "R(2)"},
      {0, 3, "2H(1)"}, {1, 2, "C(2)"},  {2, 1, "2R(2)"}, {3, 0, "C(2)"},
      {0, 4, "H(2)"},  {1, 3, "H(2)"},  {2, 2, "R(4)"},  {3, 1, "R(4)"},
      {4, 0, "H(2)"},
      {0, 5, "C(4)"},  {1, 4, "2H(2)"}, {2, 3, "C(4)"},  {3, 2, "2R(4)"},
      {4, 1, "C(4)"},  {5, 0, "2H(2)"},
      {0, 6, "R(8)"},  {1, 5, "H(4)"},  {2, 4, "H(4)"},  {3, 3, "R(8)"},
      {4, 2, "R(8)"},  {5, 1, "H(4)"},  {6, 0, "H(4)"},
      {0, 7, "2R(8)"}, {1, 6, "C(8)"},  {2, 5, "2H(4)"}, {3, 4, "C(8)"},
      {4, 3, "2R(8)"}, {5, 2, "C(8)"},  {6, 1, "2H(4)"}, {7, 0, "C(8)"},
  };
  int rows = 0;
  for (const Row& row : table) {
    CAPTURE(row.p);
    CAPTURE(row.q);
    const RepTag tag = rep_lookup(Signature{row.p, row.q});
    CHECK(to_string(tag) == row.tag);
    CHECK(real_dimension(tag) == (1 << (row.p + row.q)));
    ++rows;
  }
  CHECK(rows == 36);

  SUBCASE("shifting one basis vector across the metric preserves the tag") {
    // Cl(p,q) and Cl(q+1,p-1) are isomorphic algebras.
    for (const Row& row : table) {
      if (row.p == 0) continue;
      const RepTag a = rep_lookup(Signature{row.p, row.q});
      const RepTag b = rep_lookup(Signature{row.q + 1, row.p - 1});
      CHECK(a == b);
    }
  }

  SUBCASE("ring strings") {
    CHECK(to_string(RepRing::real) == "R");
    CHECK(to_string(RepRing::complex) == "C");
    CHECK(to_string(RepRing::quaternion) == "H");
    CHECK(real_dimension(RepTag{RepRing::quaternion, 2, false}) == 16);
    CHECK(real_dimension(RepTag{RepRing::real, 1, true}) == 2);
  }

  SUBCASE("beyond the table") {
    CHECK_THROWS_AS((void)rep_lookup(Signature{8, 0}), DomainError);
    CHECK_THROWS_AS((void)rep_lookup(Signature{4, 4}), DomainError);
    CHECK_THROWS_AS((void)rep_lookup(Signature{0, 9}), DomainError);
  }
}

TEST_CASE("generator matrices for every buildable signature") {
  for (const Signature& sig : buildable_signatures()) {
    CAPTURE(sig.p);
    CAPTURE(sig.q);
    const MatrixRep rep = build_rep(sig);
    CHECK(rep.sig == sig);
    CHECK(rep.tag == rep_lookup(sig));
    CHECK(static_cast<int>(rep.generators.size()) == sig.dimension());

    const int rows =
        rep.tag.size * (rep.tag.ring == RepRing::quaternion ? 2 : 1);
    for (const RingMatrix& g : rep.generators) {
      CHECK(g.first.rows() == rows);
      CHECK(g.first.cols() == rows);
      if (rep.tag.doubled) {
        CHECK(g.second.rows() == rows);
      } else {
        CHECK(g.second.size() == 0);
      }
    }

    const RepReport report = verify_rep(rep);
    CHECK(report.relation_residual == 0.0);  // small-integer matrices
    CHECK(report.product_residual < 1e-12);
    CHECK(report.injective);
    CHECK(report.max_residual() < 1e-12);
  }

  SUBCASE("no construction past four dimensions") {
    CHECK_THROWS_AS((void)build_rep(Signature{5, 0}), DomainError);
    CHECK_THROWS_AS((void)build_rep(Signature{2, 3}), DomainError);
  }

  SUBCASE("the doubled algebras split along the volume element") {
    for (const Signature& sig : buildable_signatures()) {
      const RepTag tag = rep_lookup(sig);
      if (!tag.doubled) continue;
      const MatrixRep rep = build_rep(sig);
      const std::uint32_t all = (1u << sig.dimension()) - 1u;
      const RingMatrix vol = rep_blade(rep, all);
      // central, squares to +1, and opposite in the two components
      CHECK(mat_dist(vol.first, -vol.second) == 0.0);
      CHECK(mat_dist(vol.first * vol.first,
                     Eigen::MatrixXcd::Identity(vol.first.rows(),
                                                vol.first.cols())) == 0.0);
      for (const RingMatrix& g : rep.generators) {
        CHECK(mat_dist(vol.first * g.first, g.first * vol.first) == 0.0);
      }
    }
  }
}

TEST_CASE("explicit low-dimensional matrices") {
  const Cx i(0.0, 1.0);

  SUBCASE("Cl(1,0) is a pair of signs") {
    const MatrixRep rep = build_rep(Signature{1, 0});
    CHECK(rep.generators[0].first(0, 0) == Cx(1.0));
    CHECK(rep.generators[0].second(0, 0) == Cx(-1.0));
  }

  SUBCASE("Cl(0,1) is the complex numbers") {
    const MatrixRep rep = build_rep(Signature{0, 1});
    CHECK(rep.generators[0].first(0, 0) == i);
  }

  SUBCASE("Cl(2,0) uses the diagonal and the flip") {
    const MatrixRep rep = build_rep(Signature{2, 0});
    CHECK(mat_dist(rep.generators[0].first, mat2(1, 0, 0, -1)) == 0.0);
    CHECK(mat_dist(rep.generators[1].first, mat2(0, 1, 1, 0)) == 0.0);
  }

  SUBCASE("Cl(1,1) swaps the flip for the spin matrix") {
    const MatrixRep rep = build_rep(Signature{1, 1});
    CHECK(mat_dist(rep.generators[0].first, mat2(1, 0, 0, -1)) == 0.0);
    CHECK(mat_dist(rep.generators[1].first, mat2(0, 1, -1, 0)) == 0.0);
  }

  SUBCASE("Cl(3,0) is the Pauli algebra") {
    const MatrixRep rep = build_rep(Signature{3, 0});
    CHECK(mat_dist(rep.generators[0].first, mat2(0, 1, 1, 0)) == 0.0);
    CHECK(mat_dist(rep.generators[1].first, mat2(0, -i, i, 0)) == 0.0);
    CHECK(mat_dist(rep.generators[2].first, mat2(1, 0, 0, -1)) == 0.0);
    // e1 e2 acts as i sigma3
    CHECK(mat_dist(rep_blade(rep, 0b011).first, mat2(i, 0, 0, -i)) == 0.0);
  }

  SUBCASE("Cl(0,2) satisfies the quaternion relations") {
    const MatrixRep rep = build_rep(Signature{0, 2});
    const Eigen::MatrixXcd q1 = rep.generators[0].first;
    const Eigen::MatrixXcd q2 = rep.generators[1].first;
    const Eigen::MatrixXcd q3 = q1 * q2;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);
    CHECK(mat_dist(q1 * q1, -id) == 0.0);
    CHECK(mat_dist(q2 * q2, -id) == 0.0);
    CHECK(mat_dist(q3 * q3, -id) == 0.0);
    CHECK(mat_dist(q1 * q2 * q3, -id) == 0.0);
    CHECK(mat_dist(q1, mat2(i, 0, 0, -i)) == 0.0);
    CHECK(mat_dist(q2, mat2(0, 1, -1, 0)) == 0.0);
  }
}

TEST_CASE("blade images and the linear extension") {
  std::mt19937 rng(712);

  SUBCASE("identity blade") {
    const MatrixRep rep = build_rep(Signature{1, 3});
    const RingMatrix one = rep_blade(rep, 0);
    CHECK(mat_dist(one.first, Eigen::MatrixXcd::Identity(4, 4)) == 0.0);
    CHECK_THROWS_AS((void)rep_blade(rep, 1u << 4), DomainError);
  }

  SUBCASE("rep_apply is an algebra map") {
    for (const Signature& sig :
         {Signature{1, 3}, Signature{3, 1}, Signature{2, 1}, Signature{0, 3}}) {
      const MatrixRep rep = build_rep(sig);
      for (int trial = 0; trial < 25; ++trial) {
        const Multivector a = testutil::random_mv(rng, sig);
        const Multivector b = testutil::random_mv(rng, sig);
        const RingMatrix ma = rep_apply(rep, a);
        const RingMatrix mb = rep_apply(rep, b);
        const RingMatrix mab = rep_apply(rep, a * b);
        CHECK(mat_dist(mab.first, ma.first * mb.first) < 1e-12);
        if (rep.tag.doubled)
          CHECK(mat_dist(mab.second, ma.second * mb.second) < 1e-12);
      }
    }
  }

  SUBCASE("signature mismatch") {
    const MatrixRep rep = build_rep(Signature{1, 3});
    CHECK_THROWS_AS(
        (void)rep_apply(rep, Multivector::scalar(Signature{3, 1}, 1.0)),
        DomainError);
  }

  SUBCASE("a corrupted generator is localized by the report") {
    MatrixRep rep = build_rep(Signature{1, 3});
    rep.generators[2].first(0, 0) += 0.5;
    const RepReport report = verify_rep(rep);
    CHECK(report.relation_residual > 0.01);
    CHECK((report.worst_i == 3 || report.worst_j == 3));
    CHECK(report.max_residual() >= report.relation_residual);
  }
}

TEST_CASE("ideal columns in the Pauli algebra") {
  const Signature s3{3, 0};
  const Multivector e1 = Multivector::basis_vector(s3, 1);
  const Multivector e2 = Multivector::basis_vector(s3, 2);
  const Multivector e3 = Multivector::basis_vector(s3, 3);
  std::mt19937 rng(5519);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);

  SUBCASE("canonical values") {
    const auto one = ideal_column(Multivector::scalar(s3, 1.0), e3);
    CHECK(one[0] == Cx(1.0));
    CHECK(one[1] == Cx(0.0));
    const auto first = ideal_column(e1, e3);
    CHECK(std::abs(first[0]) < 1e-15);
    CHECK(std::abs(first[1] - Cx(1.0)) < 1e-15);
    const auto axis = ideal_column(e3, e3);
    CHECK(std::abs(axis[0] - Cx(1.0)) < 1e-15);
    const auto vol = ideal_column(Multivector::pseudoscalar(s3), e3);
    CHECK(std::abs(vol[0] - Cx(0.0, 1.0)) < 1e-15);
    CHECK(std::abs(vol[1]) < 1e-15);
  }

  SUBCASE("coefficient formula along the third axis") {
    for (int trial = 0; trial < 200; ++trial) {
      const Multivector psi = testutil::random_mv(rng, s3);
      const auto col = ideal_column(psi, e3);
      const Cx z1(psi.coefficient(0b000) + psi.coefficient(0b100),
                  psi.coefficient(0b111) + psi.coefficient(0b011));
      const Cx z2(psi.coefficient(0b001) + psi.coefficient(0b101),
                  psi.coefficient(0b110) + psi.coefficient(0b010));
      CHECK(std::abs(col[0] - z1) < 1e-12);
      CHECK(std::abs(col[1] - z2) < 1e-12);
    }
  }

  SUBCASE("linearity") {
    const Multivector a = testutil::random_mv(rng, s3);
    const Multivector b = testutil::random_mv(rng, s3);
    const auto ca = ideal_column(a, e3);
    const auto cb = ideal_column(b, e3);
    const auto mix = ideal_column(2.0 * a - 3.0 * b, e3);
    for (int k = 0; k < 2; ++k)
      CHECK(std::abs(mix[k] - (2.0 * ca[k] - 3.0 * cb[k])) < 1e-12);
  }

  SUBCASE("left multiplication acts through the Pauli image") {
    const MatrixRep rep = build_rep(s3);
    for (int trial = 0; trial < 100; ++trial) {
      const Multivector a = testutil::random_mv(rng, s3);
      const Multivector psi = testutil::random_mv(rng, s3);
      const auto col = ideal_column(psi, e3);
      const auto moved = ideal_column(a * psi, e3);
      const Eigen::Vector2cd v(col[0], col[1]);
      const Eigen::Vector2cd w = rep_apply(rep, a).first * v;
      CHECK(std::abs(moved[0] - w(0)) < 1e-12);
      CHECK(std::abs(moved[1] - w(1)) < 1e-12);
    }
  }

  SUBCASE("general axes") {
    std::vector<Multivector> axes = {e3, -1.0 * e3, e1,
                                     (0.01 * e1 - 1.0 * e3) /
                                         std::hypot(0.01, 1.0)};
    for (int extra = 0; extra < 10; ++extra) {
      Multivector v = testutil::random_grade(rng, s3, 1);
      axes.push_back(v / std::sqrt(scalar_part(v * v)));
    }
    for (const Multivector& r : axes) {
      // the unit of the ideal maps to the first basis column
      const auto one = ideal_column(Multivector::scalar(s3, 1.0), r);
      CHECK(std::abs(one[0] - Cx(1.0)) < 1e-12);
      CHECK(std::abs(one[1]) < 1e-12);
      // left multiplication by the axis fixes l and flips u*l
      const Multivector psi = testutil::random_mv(rng, s3);
      const auto col = ideal_column(psi, r);
      const auto flipped = ideal_column(r * psi, r);
      CHECK(std::abs(flipped[0] - col[0]) < 1e-11);
      CHECK(std::abs(flipped[1] + col[1]) < 1e-11);
      // the squared column norm is the ideal norm of psi*(1+r)/2
      const Multivector l = 0.5 * (Multivector::scalar(s3, 1.0) + r);
      const Multivector eta = psi * l;
      const double norm2 = 2.0 * scalar_part(reverse(eta) * eta);
      CHECK(std::norm(col[0]) + std::norm(col[1]) ==
            doctest::Approx(norm2).epsilon(1e-10));
    }
  }

  SUBCASE("rotation covariance up to the frame phase") {
    for (int trial = 0; trial < 50; ++trial) {
      const Multivector psi = testutil::random_mv(rng, s3);
      const Multivector b = testutil::random_grade(rng, s3, 2);
      const Multivector rot = exp_bivector(b);
      const Multivector r = rot * e3 * reverse(rot);
      const auto before = ideal_column(psi, e3);
      const auto after = ideal_column(rot * psi * reverse(rot), r);
      CHECK(std::abs(after[0] - before[0]) < 1e-7);
      CHECK(std::abs(std::abs(after[1]) - std::abs(before[1])) < 1e-7);
    }
  }

  SUBCASE("axis validation") {
    CHECK_THROWS_AS(
        (void)ideal_column(Multivector::scalar(s3, 1.0), 2.0 * e3),
        DomainError);
    CHECK_THROWS_AS(
        (void)ideal_column(Multivector::scalar(s3, 1.0), e1 * e2),
        DomainError);
    CHECK_THROWS_AS(
        (void)ideal_column(Multivector::scalar(Signature{1, 3}, 1.0),
                           Multivector::basis_vector(Signature{1, 3}, 2)),
        DomainError);
  }
}

TEST_CASE("embedding the complex algebra Cl2") {
  const Signature s3{3, 0};
  const Cx i(0.0, 1.0);
  std::mt19937 rng(3307);

  SUBCASE("basis images") {
    CHECK(approx_equal(complex_embed({Cx(1), 0, 0, 0}),
                       Multivector::scalar(s3, 1.0), kTight));
    CHECK(approx_equal(complex_embed({0, Cx(1), 0, 0}),
                       Multivector::basis_vector(s3, 1), kTight));
    CHECK(approx_equal(complex_embed({0, 0, Cx(1), 0}),
                       Multivector::basis_vector(s3, 2), kTight));
    CHECK(approx_equal(complex_embed({0, 0, 0, Cx(1)}),
                       Multivector::blade(s3, 0b011, 1.0), kTight));
    // i itself lands on -I ...
    CHECK(approx_equal(complex_embed({i, 0, 0, 0}),
                       -1.0 * Multivector::pseudoscalar(s3), kTight));
    // ... so that i e12 lands on the third basis vector
    CHECK(approx_equal(complex_embed({0, 0, 0, i}),
                       Multivector::basis_vector(s3, 3), kTight));
  }

  SUBCASE("the image of i is a central square root of minus one") {
    const Multivector im = complex_embed({i, 0, 0, 0});
    CHECK(approx_equal(im * im, Multivector::scalar(s3, -1.0), kTight));
    for (int trial = 0; trial < 20; ++trial) {
      const Multivector x = testutil::random_mv(rng, s3);
      CHECK(approx_equal(im * x, x * im, kTight));
    }
  }

  SUBCASE("multiplication carries over") {
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = random_c2(rng);
      const auto b = random_c2(rng);
      const auto ab = c2_to_array(c2_mul(c2_from_array(a), c2_from_array(b)));
      CHECK(approx_equal(complex_embed(a) * complex_embed(b),
                         complex_embed(ab), kTight));
    }
  }

  SUBCASE("the eight real basis images span Cl(3,0)") {
    Eigen::MatrixXd span(8, 8);
    int col = 0;
    for (int k = 0; k < 4; ++k) {
      for (const Cx unit : {Cx(1.0), i}) {
        std::array<Cx, 4> a{};
        a[k] = unit;
        span.col(col++) = complex_embed(a).coefficients();
      }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(span);
    CHECK(lu.rank() == 8);
  }
}

#include <doctest.h>

#include <cmath>
#include <random>

#include "cliffspin/spin_group.hpp"
#include "random_support.hpp"

using namespace cliffspin;

namespace {

Multivector random_bivector(std::mt19937& rng, Signature sig, double amp = 1.0) {
  return testutil::random_grade(rng, sig, 2, -amp, amp);
}

}  // namespace

TEST_CASE("versor classification") {
  Signature cl3(3, 0);
  Multivector e1 = Multivector::basis_vector(cl3, 1);
  Multivector e12 = Multivector::basis_vector(cl3, 1) * Multivector::basis_vector(cl3, 2);

  SUBCASE("rotor is spin_plus") {
    VersorClass c = classify_versor(exp_bivector(0.6 * e12));
    CHECK(c.tag == VersorClass::Tag::spin_plus);
    CHECK(c.norm == doctest::Approx(1.0));
  }
  SUBCASE("unit vector is pin but not spin") {
    VersorClass c = classify_versor(e1);
    CHECK(c.tag == VersorClass::Tag::pin);
    CHECK(c.norm == doctest::Approx(1.0));
  }
  SUBCASE("even unit with negative norm is spin but not spin_plus") {
    Signature cl11(1, 1);
    Multivector f12 =
        Multivector::basis_vector(cl11, 1) * Multivector::basis_vector(cl11, 2);
    VersorClass c = classify_versor(f12);
    CHECK(c.tag == VersorClass::Tag::spin);
    CHECK(c.norm == doctest::Approx(-1.0));
  }
  SUBCASE("mixed parity fails") {
    CHECK(classify_versor(Multivector::scalar(cl3, 1.0) + e1).tag ==
          VersorClass::Tag::not_versor);
  }
  SUBCASE("non-unit scalar norm fails") {
    CHECK(classify_versor(2.0 * exp_bivector(0.3 * e12)).tag ==
          VersorClass::Tag::not_versor);
  }
  CHECK(to_string(VersorClass::Tag::spin_plus) == "spin_plus");
}

TEST_CASE("adjoint action rotates vectors") {
  Signature cl2(2, 0);
  Multivector e1 = Multivector::basis_vector(cl2, 1);
  Multivector e12 = e1 * Multivector::basis_vector(cl2, 2);
  // Half-turn in the e12 plane sends e1 to -e1.
  Multivector u = exp_bivector(0.5 * M_PI * e12);
  CHECK(approx_equal(adjoint_act(u, e1), -e1, Tolerance{1e-12, 1e-12}));
  CHECK(approx_equal(adjoint_act(u, e1, -1), e1, Tolerance{1e-12, 1e-12}));
  CHECK_THROWS_AS(adjoint_act(Multivector::scalar(cl2, 1.0) + e1, e1), DomainError);
}

TEST_CASE("adjoint action preserves vector norms and composes") {
  std::mt19937 rng(37);
  for (Signature sig : {Signature(3, 0), Signature(1, 3)}) {
    for (int it = 0; it < 200; ++it) {
      Multivector u = exp_bivector(random_bivector(rng, sig));
      Multivector v = exp_bivector(random_bivector(rng, sig));
      Multivector a = testutil::random_grade(rng, sig, 1);
      Multivector ua = adjoint_act(u, a);
      CHECK(std::abs(scalar_part(ua * ua) - scalar_part(a * a)) < 1e-9);
      // Composition is a homomorphism.
      CHECK(approx_equal(adjoint_act(u, adjoint_act(v, a)), adjoint_act(u * v, a),
                         Tolerance{1e-9, 1e-9}));
      // Double cover: U and -U act identically.
      CHECK(approx_equal(adjoint_act(-1.0 * u, a), ua, Tolerance{1e-12, 1e-12}));
    }
  }
}

TEST_CASE("spinor transform") {
  Signature cl3(3, 0);
  std::mt19937 rng(41);
  for (int it = 0; it < 100; ++it) {
    Multivector u = exp_bivector(random_bivector(rng, cl3));
    Multivector psi = testutil::random_even(rng, cl3);
    Multivector psi2 = spinor_transform(u, psi);
    CHECK(approx_equal(reverse(psi2) * psi2, reverse(psi) * psi, Tolerance{1e-9, 1e-9}));
  }
  Multivector e1 = Multivector::basis_vector(cl3, 1);
  // Odd versors are pin but not spin.
  CHECK_THROWS_AS(spinor_transform(e1, Multivector::scalar(cl3, 1.0)), DomainError);
  // Odd spinors are rejected.
  Multivector u = exp_bivector(random_bivector(rng, cl3));
  CHECK_THROWS_AS(spinor_transform(u, e1), DomainError);
}

#include "cliffspin/textio.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cliffspin/algebra.hpp"
#include "cliffspin/error.hpp"
#include "doctest.h"
#include "random_support.hpp"

using namespace cliffspin;

namespace {

const Tolerance kExact{0.0, 0.0};
const Signature s2{2, 0};

long offset_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return static_cast<long>(e.offset());
  }
  return -1;
}

bool exact_round_trip(const Multivector& a) {
  const Multivector back = parse(serialize(a), a.signature());
  return approx_equal(back, a, kExact);
}

}  // namespace

TEST_CASE("parsing linear combinations") {
  const Multivector a = parse("1 + 2e12", s2);
  CHECK(a.coefficient(0b00) == 1.0);
  CHECK(a.coefficient(0b11) == 2.0);
  CHECK(a.coefficient(0b01) == 0.0);

  CHECK(approx_equal(parse("e21", s2), Multivector::blade(s2, 0b11, -1.0),
                     kExact));

  const Signature s10{10, 0};
  const Multivector big = parse("3e{1,10}", s10);
  CHECK(big.coefficient(1u | (1u << 9)) == 3.0);

  CHECK(approx_equal(parse("-e1 + 2 - 0.5e2", s2),
                     -1.0 * Multivector::basis_vector(s2, 1) +
                         Multivector::scalar(s2, 2.0) -
                         0.5 * Multivector::basis_vector(s2, 2),
                     kExact));
  // brace indices may also be small, digit runs may repeat an index to zero
  CHECK(approx_equal(parse("e{2,1}", s2), parse("e21", s2), kExact));
  CHECK(approx_equal(parse("e11", s2), Multivector(s2), kExact));
}

TEST_CASE("numbers against blades in the lexer") {
  CHECK(approx_equal(parse("2e12", s2),
                     Multivector::blade(s2, 0b11, 2.0), kExact));
  CHECK(approx_equal(parse("2.5e12", s2),
                     Multivector::blade(s2, 0b11, 2.5), kExact));
  CHECK(approx_equal(parse("2E1", s2), Multivector::scalar(s2, 20.0), kExact));
  CHECK(approx_equal(parse("2e+1", s2), Multivector::scalar(s2, 20.0), kExact));
  CHECK(approx_equal(parse("1e-2", s2), Multivector::scalar(s2, 0.01), kExact));
  CHECK(approx_equal(parse(".5", s2), Multivector::scalar(s2, 0.5), kExact));
  CHECK(approx_equal(parse("2 e1", s2),
                     Multivector::blade(s2, 0b01, 2.0), kExact));
  CHECK(approx_equal(parse("2*e1", s2),
                     Multivector::blade(s2, 0b01, 2.0), kExact));
}

TEST_CASE("products and grouping") {
  CHECK(approx_equal(parse("e1 * e1", s2), Multivector::scalar(s2, 1.0),
                     kExact));
  CHECK(approx_equal(parse("e1 ^ e1", s2), Multivector(s2), kExact));
  CHECK(approx_equal(parse("e1 ^ e2", s2), parse("e1 * e2", s2), kExact));
  CHECK(approx_equal(parse("(1 + e1) * (1 - e1)", s2), Multivector(s2),
                     kExact));
  // products bind tighter than sums
  CHECK(approx_equal(parse("1 + e1 * e2 * 2", s2),
                     Multivector::scalar(s2, 1.0) +
                         Multivector::blade(s2, 0b11, 2.0),
                     kExact));
  const Signature s13{1, 3};
  CHECK(approx_equal(parse("(e1 + e2) * (e1 - e2)", s13),
                     parse("-2e12 + 2", s13), kExact));
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_AS((void)parse("", s2), ParseError);
  CHECK_THROWS_AS((void)parse("e3", s2), ParseError);
  CHECK_THROWS_AS((void)parse("1 + @", s2), ParseError);

  CHECK(offset_of([] { (void)parse("", s2); }) == 0);
  CHECK(offset_of([] { (void)parse("1 + @", s2); }) == 4);
  CHECK(offset_of([] { (void)parse("1 + ", s2); }) == 4);
  CHECK(offset_of([] { (void)parse("e0", s2); }) == 1);
  CHECK(offset_of([] { (void)parse("e3", s2); }) == 1);
  CHECK(offset_of([] { (void)parse("e{3}", s2); }) == 2);
  CHECK(offset_of([] { (void)parse("e{1,}", s2); }) == 4);
  CHECK(offset_of([] { (void)parse("e{1 2}", s2); }) == 4);
  CHECK(offset_of([] { (void)parse("(1 + e1", s2); }) == 7);
  CHECK(offset_of([] { (void)parse("2*", s2); }) == 2);
  CHECK(offset_of([] { (void)parse("2ee", s2); }) == 1);
  CHECK(offset_of([] { (void)parse("1.5.2", s2); }) == 3);
  CHECK(offset_of([] { (void)parse("1e999", s2); }) == 2);  // blade e999
  CHECK(offset_of([] { (void)parse("1E999", s2); }) == 0);  // numeric overflow
  CHECK(offset_of([] { (void)parse("e{99999999}", s2); }) == 2);
  CHECK(offset_of([] { (void)parse("2E", s2); }) == 1);

  // the message spells the offset out as well
  try {
    (void)parse("1 + @", s2);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("at byte 4") != std::string::npos);
  }
}

TEST_CASE("serialization") {
  CHECK(serialize(Multivector(s2)) == "0");
  CHECK(serialize(Multivector::scalar(s2, 1.0) +
                  Multivector::blade(s2, 0b11, 1.0)) == "1 + e12");
  CHECK(serialize(parse("-e1 + 2.5*e2", s2)) == "-e1 + 2.5*e2");
  CHECK(serialize(parse("e21", s2)) == "-e12");
  CHECK(serialize(Multivector::blade(Signature{10, 0}, 1u | (1u << 9), 3.0)) ==
        "3*e{1,10}");
  CHECK(serialize(Multivector::scalar(s2, -0.0)) == "0");
}

TEST_CASE("round trips are exact") {
  SUBCASE("extreme and awkward coefficients") {
    Multivector a(s2);
    a = a + 1e300 * Multivector::scalar(s2, 1.0);
    a = a + (-1e-300) * Multivector::basis_vector(s2, 1);
    a = a + 0.1 * Multivector::basis_vector(s2, 2);
    a = a + (1.0 / 3.0) * Multivector::blade(s2, 0b11, 1.0);
    CHECK(exact_round_trip(a));
    CHECK(exact_round_trip(1e-310 * Multivector::scalar(s2, 1.0)));  // subnormal
  }

  SUBCASE("random multivectors over several signatures") {
    std::mt19937 rng(2024);
    const std::vector<Signature> sigs = {Signature{2, 0}, Signature{0, 2},
                                         Signature{3, 0}, Signature{1, 3},
                                         Signature{3, 1}, Signature{10, 0}};
    std::uniform_real_distribution<double> keep(0.0, 1.0);
    for (const Signature& sig : sigs) {
      for (int trial = 0; trial < 300; ++trial) {
        Multivector a = testutil::random_mv(rng, sig, -10.0, 10.0);
        // thin large algebras out so the strings stay shapely
        if (sig.dimension() > 4) {
          Multivector sparse(sig);
          for (std::uint32_t m = 0; m < (1u << sig.dimension()); ++m)
            if (keep(rng) < 0.05)
              sparse = sparse + Multivector::blade(sig, m, a.coefficient(m));
          a = sparse;
        }
        CHECK(exact_round_trip(a));
      }
    }
  }
}

TEST_CASE("flattened term view") {
  const ParsedExpression pe = parse_expression("e1 + e1 + 2 - e2 + e2", s2);
  CHECK(pe.sig == s2);
  REQUIRE(pe.terms.size() == 2);
  CHECK(pe.terms[0].blade_mask == 0);
  CHECK(pe.terms[0].coefficient == 2.0);
  CHECK(pe.terms[1].blade_mask == 0b01);
  CHECK(pe.terms[1].coefficient == 2.0);
}

TEST_CASE("fuzzing never crashes the parser") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> len(0, 24);
  std::uniform_int_distribution<int> any_byte(0, 255);
  const std::string charset = "0123456789e{},.+-*^ ()E1";
  std::uniform_int_distribution<std::size_t> from_set(0, charset.size() - 1);
  int parsed_ok = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    std::string text;
    const int n = len(rng);
    const bool grammar_ish = trial % 2 == 0;
    for (int i = 0; i < n; ++i)
      text += grammar_ish ? charset[from_set(rng)]
                          : static_cast<char>(any_byte(rng));
    try {
      (void)parse(text, s2);
      ++parsed_ok;
    } catch (const ParseError&) {
    }
  }
  CHECK(parsed_ok > 0);  // the grammar-biased half should sometimes succeed
}

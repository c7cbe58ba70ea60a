#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffspin/algebra.hpp"

namespace cliffspin {

struct ParsedTerm {
  double coefficient;
  std::uint32_t blade_mask;
};

/// Flattened view of an evaluated expression: nonzero coefficients in
/// ascending blade-mask order, duplicates already merged, every blade
/// index within the signature.
struct ParsedExpression {
  std::vector<ParsedTerm> terms;
  Signature sig;
};

/// Evaluates a multivector expression over the given signature.
///
/// Grammar (whitespace insignificant):
///   expr    := ['+'|'-'] product { ('+'|'-') product }
///   product := factor { ('*'|'^') factor }     * geometric, ^ outer
///   factor  := number [['*'] blade] | blade | '(' expr ')'
///   blade   := 'e' digits | 'e{' digits {',' digits} '}'
///
/// A digit run like e13 means e1^e3; the brace form is required once an
/// index exceeds 9.  Inside a number, 'e' followed by a digit starts a
/// blade ("2e12" is 2*e12) while a signed exponent or a capital 'E' stays
/// numeric ("2e+1" and "2E1" are both 20).  Blade indices are sorted with
/// the transposition sign folded into the coefficient ("e21" is -e12); a
/// repeated index collapses the blade to zero.
///
/// Throws ParseError, carrying the byte offset, on malformed text and on
/// blade indices outside 1..p+q.
Multivector parse(const std::string& text, const Signature& sig);

/// parse plus the flattened term view of the result.
ParsedExpression parse_expression(const std::string& text,
                                  const Signature& sig);

/// Deterministic text form: terms in ascending blade-mask order joined
/// with " + "/" - ", unit coefficients elided, shortest round-tripping
/// numbers, "0" for the zero multivector.  parse(serialize(a), sig)
/// reproduces a exactly.
std::string serialize(const Multivector& a);

}  // namespace cliffspin

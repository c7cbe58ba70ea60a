#include "cliffspin/textio.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <string>

#include "cliffspin/error.hpp"

namespace cliffspin {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

struct Parser {
  const std::string& text;
  const Signature sig;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    throw ParseError(message, at);
  }

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at_end() const { return pos >= text.size(); }

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  char peek_at(std::size_t ahead) const {
    return pos + ahead < text.size() ? text[pos + ahead] : '\0';
  }

  Multivector parse_expr() {
    skip_ws();
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') {
      if (text[pos] == '-') sign = -1.0;
      ++pos;
    }
    Multivector value = sign * parse_product();
    while (true) {
      skip_ws();
      if (peek() == '+') {
        ++pos;
        value = value + parse_product();
      } else if (peek() == '-') {
        ++pos;
        value = value - parse_product();
      } else {
        return value;
      }
    }
  }

  Multivector parse_product() {
    Multivector value = parse_factor();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos;
        value = value * parse_factor();
      } else if (peek() == '^') {
        ++pos;
        value = value ^ parse_factor();
      } else {
        return value;
      }
    }
  }

  Multivector parse_factor() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos;
      Multivector value = parse_expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'", pos);
      ++pos;
      return value;
    }
    if (c == 'e') return parse_blade();
    if (is_digit(c) || c == '.') {
      const double number = parse_number();
      // juxtaposed blade scales it: "2e12" and "2 e12" mean 2*e12
      skip_ws();
      if (peek() == 'e') return number * parse_blade();
      return number * Multivector::scalar(sig, 1.0);
    }
    if (at_end()) fail("expected a term", pos);
    fail("expected a number, a blade or '('", pos);
  }

  // The span of a number ends where a blade begins: after the mantissa,
  // 'e' followed by a digit or '{' is a blade token, while 'e' with a
  // signed digit or 'E' continues as an exponent.
  double parse_number() {
    const std::size_t start = pos;
    while (is_digit(peek())) ++pos;
    if (peek() == '.') {
      ++pos;
      while (is_digit(peek())) ++pos;
    }
    if (pos == start || (pos == start + 1 && text[start] == '.'))
      fail("malformed number", start);

    std::string span = text.substr(start, pos - start);
    const char c = peek();
    const bool signed_exp = c == 'e' && (peek_at(1) == '+' || peek_at(1) == '-') &&
                            is_digit(peek_at(2));
    if (c == 'E' || signed_exp) {
      std::size_t exp = pos + 1;
      if (text[exp] == '+' || text[exp] == '-') ++exp;
      if (!(exp < text.size() && is_digit(text[exp])))
        fail("malformed exponent", pos);
      while (exp < text.size() && is_digit(text[exp])) ++exp;
      span += 'e';
      span.append(text, pos + 1, exp - pos - 1);
      pos = exp;
    }

    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(span.data(), span.data() + span.size(), value);
    if (ec == std::errc::result_out_of_range)
      fail("number out of range", start);
    if (ec != std::errc() || ptr != span.data() + span.size())
      fail("malformed number", start);
    return value;
  }

  Multivector parse_blade() {
    const std::size_t start = pos;
    ++pos;  // consume 'e'
    std::uint32_t mask = 0;
    double sign = 1.0;
    bool vanished = false;

    const auto push_index = [&](int index, std::size_t at) {
      if (index < 1 || index > sig.dimension())
        fail("blade index out of range for Cl(" + std::to_string(sig.p) +
                 "," + std::to_string(sig.q) + ")",
             at);
      const std::uint32_t bit = 1u << (index - 1);
      if (mask & bit) {
        vanished = true;  // repeated factor wedges to zero
        return;
      }
      if (std::popcount(mask >> index) % 2 == 1) sign = -sign;
      mask |= bit;
    };

    if (peek() == '{') {
      ++pos;
      while (true) {
        skip_ws();
        const std::size_t at = pos;
        if (!is_digit(peek())) fail("expected a blade index", pos);
        long index = 0;
        while (is_digit(peek()) && index <= Signature::max_dimension) {
          index = index * 10 + (text[pos] - '0');
          ++pos;
        }
        push_index(static_cast<int>(index), at);
        skip_ws();
        if (peek() == ',') {
          ++pos;
          continue;
        }
        if (peek() == '}') {
          ++pos;
          break;
        }
        fail("expected ',' or '}'", pos);
      }
    } else {
      if (!is_digit(peek())) fail("expected blade indices after 'e'", start);
      while (is_digit(peek())) {
        push_index(text[pos] - '0', pos);
        ++pos;
      }
    }
    if (vanished) return Multivector(sig);
    return Multivector::blade(sig, mask, sign);
  }
};

void append_shortest(std::string& out, double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  out.append(buffer, ptr);
}

void append_blade(std::string& out, std::uint32_t mask, int dimension) {
  out += 'e';
  const bool braces = (mask >> 9) != 0;  // some index exceeds 9
  if (braces) out += '{';
  bool first = true;
  for (int i = 1; i <= dimension; ++i) {
    if (!(mask & (1u << (i - 1)))) continue;
    if (!first && braces) out += ',';
    out += std::to_string(i);
    first = false;
  }
  if (braces) out += '}';
}

}  // namespace

Multivector parse(const std::string& text, const Signature& sig) {
  Parser parser{text, sig};
  parser.skip_ws();
  if (parser.at_end()) parser.fail("empty expression", 0);
  const Multivector value = parser.parse_expr();
  parser.skip_ws();
  if (!parser.at_end()) parser.fail("unexpected trailing input", parser.pos);
  return value;
}

ParsedExpression parse_expression(const std::string& text,
                                  const Signature& sig) {
  const Multivector value = parse(text, sig);
  ParsedExpression out{{}, sig};
  for (std::uint32_t mask = 0; mask < (1u << sig.dimension()); ++mask) {
    const double c = value.coefficient(mask);
    if (c != 0.0) out.terms.push_back(ParsedTerm{c, mask});
  }
  return out;
}

std::string serialize(const Multivector& a) {
  const Signature sig = a.signature();
  std::string out;
  for (std::uint32_t mask = 0; mask < (1u << sig.dimension()); ++mask) {
    const double c = a.coefficient(mask);
    if (c == 0.0) continue;
    const double magnitude = std::abs(c);
    if (out.empty()) {
      if (c < 0.0) out += '-';
    } else {
      out += (c < 0.0) ? " - " : " + ";
    }
    if (mask == 0) {
      append_shortest(out, magnitude);
      continue;
    }
    if (magnitude != 1.0) {
      append_shortest(out, magnitude);
      out += '*';
    }
    append_blade(out, mask, sig.dimension());
  }
  if (out.empty()) return "0";
  return out;
}

}  // namespace cliffspin

#include <cctype>
#include <string_view>

#include "ordramsey/ordinal.hpp"

namespace ordramsey {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ordinal parse_all() {
    Ordinal out = parse_ord();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return out;
  }

 private:
  Ordinal parse_ord() {
    skip_space();
    if (peek() == '0') {
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) fail("leading zero");
      return Ordinal::zero();
    }
    Ordinal sum = parse_term();
    while (true) {
      skip_space();
      if (peek() != '+') break;
      ++pos_;
      sum = std_add(sum, parse_term());
    }
    return sum;
  }

  Ordinal parse_term() {
    skip_space();
    Ordinal base;
    bool finite_base = false;
    Ordinal::Coefficient base_value = 0;
    if (peek() == 'w') {
      ++pos_;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        expect('(');
        Ordinal exponent = parse_ord();
        expect(')');
        base = omega_pow(exponent);
      } else {
        base = Ordinal::omega();
      }
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      base_value = parse_nat();
      finite_base = true;
    } else {
      fail("expected 'w' or a positive integer");
    }
    skip_space();
    Ordinal::Coefficient factor = 1;
    if (peek() == '*') {
      ++pos_;
      factor = parse_nat();
    }
    if (finite_base) {
      Ordinal::Coefficient v = 0;
      if (__builtin_mul_overflow(base_value, factor, &v)) {
        throw ArithmeticOverflow("ordinal coefficient overflow in literal");
      }
      return Ordinal::natural(v);
    }
    return nat_mul_k(base, factor);
  }

  Ordinal::Coefficient parse_nat() {
    skip_space();
    const std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek())) || peek() == '0') {
      fail("expected a positive integer");
    }
    Ordinal::Coefficient v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const auto digit = static_cast<Ordinal::Coefficient>(peek() - '0');
      if (__builtin_mul_overflow(v, Ordinal::Coefficient{10}, &v) ||
          __builtin_add_overflow(v, digit, &v)) {
        throw ParseError("integer literal out of range", start);
      }
      ++pos_;
    }
    return v;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return Parser(text).parse_all(); }

std::string format(const Ordinal& a) {
  if (a.is_zero()) return "0";
  const Ordinal one = Ordinal::natural(1);
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += " + ";
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    if (t.exponent == one) {
      out += "w";
    } else {
      out += "w^(" + format(t.exponent) + ")";
    }
    if (t.coefficient != 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

OrdinalBound parse_bound(std::string_view text) {
  if (trim(text) == "e0") return OrdinalBound::top();
  return parse_ordinal(text);
}

std::string format(const OrdinalBound& b) { return b.is_top() ? "e0" : format(b.value()); }

}  // namespace ordramsey

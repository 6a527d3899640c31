#include "ordramsey/ordinal_index.hpp"

#include <vector>

namespace ordramsey {

OrdinalIndex::OrdinalIndex(mpz_class value) : value_(std::move(value)) {
  if (value_ < 0) throw InvalidIndex("ordinal index must be non-negative");
}

OrdinalIndex OrdinalIndex::from_decimal(const std::string& digits) {
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw InvalidIndex("ordinal index must be a non-negative decimal integer: '" + digits + "'");
  }
  return OrdinalIndex(mpz_class(digits, 10));
}

mpz_class cantor_pair(const mpz_class& x, const mpz_class& y) {
  const mpz_class s = x + y;
  return s * (s + 1) / 2 + y;
}

void cantor_unpair(const mpz_class& z, mpz_class& x, mpz_class& y) {
  // w = floor((sqrt(8z + 1) - 1) / 2) is the diagonal holding z.
  mpz_class root;
  const mpz_class disc = 8 * z + 1;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  const mpz_class w = (root - 1) / 2;
  const mpz_class t = w * (w + 1) / 2;
  y = z - t;
  x = w - y;
}

OrdinalIndex encode(const Ordinal& a) {
  // Fold from the last term so each step pairs with the already-coded tail.
  mpz_class code = 0;
  const auto terms = a.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const mpz_class exponent = encode(it->exponent).value();
    const mpz_class coeff_minus_one(static_cast<unsigned long>(it->coefficient - 1));
    code = 1 + cantor_pair(cantor_pair(exponent, coeff_minus_one), code);
  }
  return OrdinalIndex(std::move(code));
}

Ordinal decode(const OrdinalIndex& index) {
  std::vector<Term> terms;
  mpz_class code = index.value();
  while (code != 0) {
    mpz_class head;
    mpz_class rest;
    cantor_unpair(code - 1, head, rest);
    mpz_class exponent_code;
    mpz_class coeff_minus_one;
    cantor_unpair(head, exponent_code, coeff_minus_one);
    if (!mpz_fits_ulong_p(coeff_minus_one.get_mpz_t()) ||
        coeff_minus_one.get_ui() == static_cast<unsigned long>(-1)) {
      throw InvalidIndex("index " + index.to_decimal() + " codes an out-of-range coefficient");
    }
    Ordinal exponent = decode(OrdinalIndex(exponent_code));
    if (!terms.empty() && !(exponent < terms.back().exponent)) {
      throw InvalidIndex("index " + index.to_decimal() + " does not code a canonical CNF");
    }
    terms.push_back(Term{std::move(exponent), coeff_minus_one.get_ui() + 1});
    code = std::move(rest);
  }
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace ordramsey

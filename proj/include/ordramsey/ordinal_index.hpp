#pragma once

// Integer coding of CNF trees.
//
//   encode(0)                  = 0
//   encode(w^g * n + rest)     = 1 + pair(pair(encode(g), n - 1), encode(rest))
//   pair(x, y)                 = (x + y)(x + y + 1) / 2 + y      (Cantor)
//
// pair is a bijection N x N -> N, so every integer decodes to a term
// structure; an index is well-formed iff that structure is canonical CNF
// (the leading exponent of `rest` is below g) and every coefficient fits in
// 64 bits. Indices grow doubly exponentially with nesting depth, hence the
// arbitrary-precision representation.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "ordramsey/ordinal.hpp"

namespace ordramsey {

class InvalidIndex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OrdinalIndex {
 public:
  OrdinalIndex() = default;
  explicit OrdinalIndex(mpz_class value);
  explicit OrdinalIndex(unsigned long value) : value_(value) {}

  /// Throws InvalidIndex on anything other than a non-negative decimal.
  static OrdinalIndex from_decimal(const std::string& digits);

  const mpz_class& value() const { return value_; }
  std::string to_decimal() const { return value_.get_str(); }

  friend bool operator==(const OrdinalIndex& a, const OrdinalIndex& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const OrdinalIndex& a, const OrdinalIndex& b) {
    return a.value_ < b.value_;
  }

 private:
  mpz_class value_;
};

mpz_class cantor_pair(const mpz_class& x, const mpz_class& y);
/// Inverse of cantor_pair; writes the components to x and y.
void cantor_unpair(const mpz_class& z, mpz_class& x, mpz_class& y);

OrdinalIndex encode(const Ordinal& a);
/// Throws InvalidIndex when `index` does not code a canonical ordinal.
Ordinal decode(const OrdinalIndex& index);

}  // namespace ordramsey

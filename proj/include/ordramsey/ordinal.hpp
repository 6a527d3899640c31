#pragma once

// Ordinals below epsilon_0 in Cantor normal form.
//
// An Ordinal is the finite list of terms w^e1*c1 + ... + w^ek*ck with
// e1 > ... > ek (each ei itself an Ordinal) and every ci >= 1. The empty
// list is 0. Every constructor path canonicalizes or rejects, so two
// Ordinals compare equal iff their term lists are identical.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordramsey {

/// Raised when a coefficient leaves the 64-bit range.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

struct Term;

class Ordinal {
 public:
  using Coefficient = std::uint64_t;

  Ordinal() = default;

  static Ordinal zero() { return {}; }
  static Ordinal natural(Coefficient n);
  static Ordinal omega();

  /// Builds from an explicit term list. Throws std::invalid_argument unless
  /// the list is already canonical (strictly decreasing exponents, c >= 1).
  static Ordinal from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const;
  std::size_t term_count() const;

  bool is_zero() const { return rep_ == nullptr; }
  /// True for 0 and for every positive integer.
  bool is_finite() const;
  /// Value of a finite ordinal; throws std::domain_error otherwise.
  Coefficient finite_value() const;
  bool is_successor() const;

  /// Nesting depth of the CNF tree: 0 has depth 0, n >= 1 has depth 1,
  /// w^a has depth depth(a) + 1.
  std::size_t depth() const;

  friend bool operator==(const Ordinal&, const Ordinal&);
  friend std::strong_ordering operator<=>(const Ordinal&, const Ordinal&);

 private:
  explicit Ordinal(std::vector<Term> terms);
  const std::vector<Term>& list() const;

  // Immutable and shared between copies; null for 0.
  std::shared_ptr<const std::vector<Term>> rep_;

  friend Ordinal std_add(const Ordinal&, const Ordinal&);
  friend Ordinal nat_add(const Ordinal&, const Ordinal&);
  friend Ordinal nat_mul_k(const Ordinal&, Coefficient);
  friend Ordinal nat_mul_omega(const Ordinal&);
  friend Ordinal omega_pow(const Ordinal&);
};

struct Term {
  Ordinal exponent;
  Ordinal::Coefficient coefficient = 1;

  friend bool operator==(const Term&, const Term&) = default;
};

inline std::span<const Term> Ordinal::terms() const { return list(); }
inline std::size_t Ordinal::term_count() const { return list().size(); }

/// Total order on CNF: exponents first, then coefficients, then tails.
std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

/// Ordinary (non-commutative) sum: terms of `a` below the leading exponent
/// of `b` are absorbed.
Ordinal std_add(const Ordinal& a, const Ordinal& b);

/// Hessenberg natural sum: coefficientwise addition over the merged
/// exponent set. Commutative, associative, strictly monotone in both sides.
Ordinal nat_add(const Ordinal& a, const Ordinal& b);

/// k-fold natural sum of `a` with itself (every coefficient times k).
Ordinal nat_mul_k(const Ordinal& a, Ordinal::Coefficient k);

/// Shifts every exponent up by one, keeping coefficients:
/// w^(g1+1)*n1 + ... + w^(gk+1)*nk. Strictly above nat_mul_k(a, k) for a > 0.
Ordinal nat_mul_omega(const Ordinal& a);

/// The single term w^a.
Ordinal omega_pow(const Ordinal& a);

/// k-fold w-exponentiation: tower(a, 0) = a, tower(a, k+1) = w^tower(a, k).
Ordinal tower(const Ordinal& a, unsigned k);

/// An upper bound that is either an Ordinal or epsilon_0 itself. Only used
/// where a strict "< bound" precondition is checked; it never takes part in
/// arithmetic.
class OrdinalBound {
 public:
  OrdinalBound(Ordinal value) : value_(std::move(value)) {}  // NOLINT(implicit)

  static OrdinalBound top() { return OrdinalBound(); }

  bool is_top() const { return !value_.has_value(); }
  /// Throws std::logic_error on the top bound.
  const Ordinal& value() const;
  /// True iff a < *this.
  bool admits(const Ordinal& a) const;

  friend bool operator==(const OrdinalBound&, const OrdinalBound&) = default;

 private:
  OrdinalBound() = default;
  std::optional<Ordinal> value_;
};

// Text form. Grammar (whitespace between tokens ignored):
//   ord  := "0" | term ("+" term)*
//   term := base ("*" nat)?
//   base := "w" | "w^(" ord ")" | nat
//   nat  := [1-9][0-9]*
// Non-canonical sums such as "1 + w" or "w + w" are folded with std_add.

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Ordinal parse_ordinal(std::string_view text);
std::string format(const Ordinal& a);

/// Accepts the ordinal grammar plus the token "e0" for the top bound.
OrdinalBound parse_bound(std::string_view text);
std::string format(const OrdinalBound& b);

}  // namespace ordramsey

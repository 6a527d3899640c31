#include "ordramsey/ordinal.hpp"

#include <algorithm>

namespace ordramsey {

namespace {

Ordinal::Coefficient checked_add(Ordinal::Coefficient a, Ordinal::Coefficient b) {
  Ordinal::Coefficient out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw ArithmeticOverflow("ordinal coefficient overflow in addition");
  }
  return out;
}

Ordinal::Coefficient checked_mul(Ordinal::Coefficient a, Ordinal::Coefficient b) {
  Ordinal::Coefficient out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw ArithmeticOverflow("ordinal coefficient overflow in multiplication");
  }
  return out;
}

}  // namespace

Ordinal Ordinal::natural(Coefficient n) {
  if (n == 0) return {};
  return Ordinal({Term{Ordinal{}, n}});
}

Ordinal Ordinal::omega() { return Ordinal({Term{natural(1), 1}}); }

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) {
      throw std::invalid_argument("CNF term with zero coefficient");
    }
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) {
      throw std::invalid_argument("CNF exponents must be strictly decreasing");
    }
  }
  return Ordinal(std::move(terms));
}

bool Ordinal::is_finite() const {
  return is_zero() || (list().size() == 1 && list()[0].exponent.is_zero());
}

Ordinal::Coefficient Ordinal::finite_value() const {
  if (!is_finite()) throw std::domain_error("ordinal is not finite");
  return is_zero() ? 0 : list()[0].coefficient;
}

bool Ordinal::is_successor() const {
  return !is_zero() && list().back().exponent.is_zero();
}

std::size_t Ordinal::depth() const {
  std::size_t d = 0;
  for (const auto& t : list()) d = std::max(d, t.exponent.depth() + 1);
  return d;
}

Ordinal::Ordinal(std::vector<Term> terms)
    : rep_(terms.empty() ? nullptr : std::make_shared<const std::vector<Term>>(std::move(terms))) {}

const std::vector<Term>& Ordinal::list() const {
  static const std::vector<Term> empty;
  return rep_ ? *rep_ : empty;
}

bool operator==(const Ordinal& a, const Ordinal& b) { return a.rep_ == b.rep_ || a.list() == b.list(); }

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  if (a.rep_ == b.rep_) return std::strong_ordering::equal;
  const auto& x = a.list();
  const auto& y = b.list();
  const std::size_t common = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (auto c = x[i].exponent <=> y[i].exponent; c != 0) return c;
    if (auto c = x[i].coefficient <=> y[i].coefficient; c != 0) return c;
  }
  return x.size() <=> y.size();
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) { return a <=> b; }

Ordinal std_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const auto& x = a.list();
  const auto& y = b.list();
  const Ordinal& lead = y.front().exponent;
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  for (; i < x.size() && x[i].exponent > lead; ++i) out.push_back(x[i]);
  auto first = y.front();
  if (i < x.size() && x[i].exponent == lead) first.coefficient = checked_add(x[i].coefficient, first.coefficient);
  out.push_back(std::move(first));
  out.insert(out.end(), y.begin() + 1, y.end());
  return Ordinal(std::move(out));
}

Ordinal nat_add(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const auto& x = a.list();
  const auto& y = b.list();
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    const auto c = x[i].exponent <=> y[j].exponent;
    if (c > 0) {
      out.push_back(x[i++]);
    } else if (c < 0) {
      out.push_back(y[j++]);
    } else {
      out.push_back(Term{x[i].exponent, checked_add(x[i].coefficient, y[j].coefficient)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), x.begin() + static_cast<std::ptrdiff_t>(i), x.end());
  out.insert(out.end(), y.begin() + static_cast<std::ptrdiff_t>(j), y.end());
  return Ordinal(std::move(out));
}

Ordinal nat_mul_k(const Ordinal& a, Ordinal::Coefficient k) {
  if (k == 0) return {};
  std::vector<Term> out = a.list();
  for (auto& t : out) t.coefficient = checked_mul(t.coefficient, k);
  return Ordinal(std::move(out));
}

Ordinal nat_mul_omega(const Ordinal& a) {
  const Ordinal one = Ordinal::natural(1);
  std::vector<Term> out;
  out.reserve(a.list().size());
  for (const auto& t : a.list()) out.push_back(Term{std_add(t.exponent, one), t.coefficient});
  return Ordinal(std::move(out));
}

Ordinal omega_pow(const Ordinal& a) { return Ordinal({Term{a, 1}}); }

Ordinal tower(const Ordinal& a, unsigned k) {
  Ordinal out = a;
  for (unsigned i = 0; i < k; ++i) out = omega_pow(out);
  return out;
}

const Ordinal& OrdinalBound::value() const {
  if (!value_) throw std::logic_error("epsilon_0 bound has no ordinal value");
  return *value_;
}

bool OrdinalBound::admits(const Ordinal& a) const { return !value_ || a < *value_; }

}  // namespace ordramsey

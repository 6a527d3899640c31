#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "ordramsey/ordinal.hpp"
#include "ordramsey/ordinal_index.hpp"
#include "ordramsey/random.hpp"

using namespace ordramsey;

namespace {

Ordinal P(const char* s) { return parse_ordinal(s); }

std::vector<Ordinal> small_ordinals(unsigned long below) {
  std::vector<Ordinal> out;
  for (unsigned long i = 0; i < below; ++i) {
    try {
      out.push_back(decode(OrdinalIndex(i)));
    } catch (const InvalidIndex&) {
    }
  }
  return out;
}

}  // namespace

TEST_CASE("compare examples") {
  CHECK(compare(Ordinal::omega(), Ordinal::natural(1)) == std::strong_ordering::greater);
  CHECK(compare(P("w^(w)"), P("w*5 + 3")) == std::strong_ordering::greater);
  CHECK(compare(P("w^(2) + w"), P("w^(2) + w")) == std::strong_ordering::equal);
  CHECK(P("w*2") < P("w*2 + 1"));
  CHECK(P("w^(w*2)") > P("w^(w + 5)*100"));
}

TEST_CASE("std_add examples") {
  CHECK(std_add(P("1"), P("w")) == P("w"));
  CHECK(std_add(P("w + 1"), P("w")) == P("w*2"));
  CHECK(std_add(P("w^(2)"), P("w + 1")) == P("w^(2) + w + 1"));
  CHECK(std_add(P("w^(2)*3 + w"), P("w^(2) + 4")) == P("w^(2)*4 + 4"));
}

TEST_CASE("nat_add examples") {
  CHECK(nat_add(P("w"), P("1")) == P("w + 1"));
  CHECK(nat_add(P("w + 1"), P("w")) == P("w*2 + 1"));
  CHECK(nat_add(Ordinal::zero(), P("w^(w) + 3")) == P("w^(w) + 3"));
}

TEST_CASE("nat_mul examples") {
  CHECK(nat_mul_k(P("w^(2)*3 + w*2"), 2) == P("w^(2)*6 + w*4"));
  CHECK(nat_mul_k(P("w^(w) + 7"), 1) == P("w^(w) + 7"));
  CHECK(nat_mul_k(P("w^(w) + 7"), 0) == Ordinal::zero());
  CHECK(nat_mul_omega(P("w^(2)*3 + w*2")) == P("w^(3)*3 + w^(2)*2"));
  CHECK(nat_mul_omega(P("1")) == P("w"));
  CHECK(nat_mul_omega(Ordinal::zero()) == Ordinal::zero());
  CHECK(nat_mul_omega(P("w^(w)")) == P("w^(w + 1)"));
}

TEST_CASE("coefficient overflow is an error") {
  const Ordinal big = Ordinal::natural(std::uint64_t{1} << 63);
  CHECK_THROWS_AS(nat_mul_k(big, 2), ArithmeticOverflow);
  CHECK_THROWS_AS(nat_add(big, big), ArithmeticOverflow);
  CHECK_THROWS_AS(std_add(big, big), ArithmeticOverflow);
  CHECK_THROWS_AS(parse_ordinal("18446744073709551616"), ParseError);
}

TEST_CASE("omega_pow and tower") {
  CHECK(omega_pow(Ordinal::zero()) == P("1"));
  CHECK(omega_pow(P("1")) == P("w"));
  CHECK(omega_pow(P("w")) == P("w^(w)"));
  const Ordinal a = P("w*3 + 2");
  CHECK(tower(a, 0) == a);
  CHECK(tower(P("w"), 2) == P("w^(w^(w))"));
  CHECK(tower(Ordinal::zero(), 1) == P("1"));
}

TEST_CASE("parse and format") {
  CHECK(format(P("w^(w)*2 + w*3 + 1")) == "w^(w)*2 + w*3 + 1");
  CHECK(P("0").is_zero());
  CHECK(format(nat_add(P("w"), P("w"))) == "w*2");
  CHECK(format(P("w + w")) == "w*2");
  CHECK(format(P("1 + w")) == "w");
  CHECK(format(P("w^(1)")) == "w");
  CHECK(format(P("w^(0)*4")) == "4");
  CHECK(format(P("  w ^ ( w )  *  2 ")) == "w^(w)*2");
  CHECK(format(P("3*2")) == "6");
  CHECK_THROWS_AS(parse_ordinal("w*2*3"), ParseError);
  for (const char* bad : {"", "w^", "w^()", "01", "w*0", "w +", "x", "0 + 1", "w^(w"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_ordinal(bad), ParseError);
  }
  try {
    parse_ordinal("w + x");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("bounds") {
  const OrdinalBound top = OrdinalBound::top();
  CHECK(top.is_top());
  CHECK(top.admits(P("w^(w^(w^(w)))")));
  CHECK_THROWS_AS(top.value(), std::logic_error);
  CHECK(format(parse_bound("e0")) == "e0");
  CHECK(format(parse_bound("w*2")) == "w*2");
  CHECK(OrdinalBound(P("w")).admits(P("5")));
  CHECK_FALSE(OrdinalBound(P("w")).admits(P("w")));
}

TEST_CASE("index coding examples") {
  CHECK(encode(Ordinal::zero()).value() == 0);
  CHECK(decode(OrdinalIndex(0ul)).is_zero());
  CHECK(encode(P("1")).value() == 1);
  CHECK(encode(P("w")).value() == 2);
  CHECK(encode(P("2")).value() == 4);
  CHECK(encode(P("w^(w)")).value() == 7);
  const Ordinal a = P("w^(w)*2 + 5");
  CHECK(decode(encode(a)) == a);
  // pair(pair(0, 0), 1) = 2 codes 0 + 1, whose tail 1 is not below w^0.
  CHECK_THROWS_AS(decode(OrdinalIndex(3ul)), InvalidIndex);
  CHECK_THROWS_AS(OrdinalIndex::from_decimal("-4"), InvalidIndex);
  CHECK_THROWS_AS(OrdinalIndex::from_decimal("12a"), InvalidIndex);
  CHECK(OrdinalIndex::from_decimal("123").to_decimal() == "123");
}

TEST_CASE("cantor pairing matches its formula and inverts") {
  for (unsigned long x = 0; x < 40; ++x)
    for (unsigned long y = 0; y < 40; ++y) {
      const mpz_class z = cantor_pair(x, y);
      CHECK(z == (x + y) * (x + y + 1) / 2 + y);
      mpz_class u, v;
      cantor_unpair(z, u, v);
      CHECK(u == x);
      CHECK(v == y);
    }
}

TEST_CASE("small codes: injective and onto the valid indices") {
  const auto all = small_ordinals(10000);
  std::set<std::string> seen;
  for (const auto& a : all) {
    CHECK(seen.insert(format(a)).second);
    CHECK(encode(a).value() < 10000);
    CHECK(parse_ordinal(format(a)) == a);
  }
}

TEST_CASE("order and natural sum agree with the atom-multiset oracle") {
  const auto all = small_ordinals(1500);
  REQUIRE(all.size() > 100);
  for (const auto& a : all)
    for (const auto& b : all) {
      const int want = oracle::compare(a, b);
      const auto got = compare(a, b);
      CHECK((want < 0) == (got < 0));
      CHECK((want == 0) == (got == 0));
      CHECK(nat_add(a, b) == oracle::nat_add(a, b));
    }
}

TEST_CASE("algebraic laws on random ordinals") {
  SplitMix64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Ordinal a = random_ordinal(rng, 3), b = random_ordinal(rng, 3), c = random_ordinal(rng, 3);
    CHECK(nat_add(a, b) == nat_add(b, a));
    CHECK(nat_add(nat_add(a, b), c) == nat_add(a, nat_add(b, c)));
    CHECK(std_add(std_add(a, b), c) == std_add(a, std_add(b, c)));
    CHECK(std_add(a, b) >= b);
    CHECK(std_add(a, Ordinal::zero()) == a);
    CHECK(std_add(Ordinal::zero(), b) == b);
    CHECK(nat_add(a, b) >= std_add(a, b));
    const unsigned j = static_cast<unsigned>(rng.uniform(5)), k = static_cast<unsigned>(rng.uniform(5));
    CHECK(nat_mul_k(a, j + k) == nat_add(nat_mul_k(a, j), nat_mul_k(a, k)));
    CHECK(nat_mul_k(a, k) == oracle::nat_mul(a, k));
    if (!a.is_zero()) {
      const Ordinal smaller = random_below(rng, a);
      CHECK(smaller < a);
      CHECK(nat_add(smaller, b) < nat_add(a, b));
      CHECK(nat_add(b, smaller) < nat_add(b, a));
      CHECK(omega_pow(smaller) < omega_pow(a));
      for (unsigned m = 1; m <= 10; ++m) CHECK(nat_mul_k(a, m) < nat_mul_omega(a));
    }
  }
}

TEST_CASE("encode/decode roundtrip at depth 5") {
  SplitMix64 rng(11);
  for (int i = 0; i < 3000; ++i) {
    const Ordinal a = random_ordinal(rng, 1 + rng.uniform(5));
    CHECK(a.depth() <= 5);
    CHECK(decode(encode(a)) == a);
    CHECK(decode(OrdinalIndex::from_decimal(encode(a).to_decimal())) == a);
  }
}

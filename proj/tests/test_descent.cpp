#include <sstream>

#include "doctest.h"
#include "families.hpp"
#include "oracles.hpp"
#include "ordramsey/descent.hpp"
#include "ordramsey/random.hpp"

using namespace ordramsey;

namespace {

Ordinal P(const char* s) { return parse_ordinal(s); }

std::vector<Ordinal> Ps(std::initializer_list<const char*> xs) {
  std::vector<Ordinal> out;
  for (auto x : xs) out.push_back(P(x));
  return out;
}

}  // namespace

TEST_CASE("validate_descent examples") {
  CHECK_FALSE(validate_descent({P("w^(2)"), Ps({"w*3 + 1", "w*3", "5", "0"})}));
  CHECK(validate_descent({P("w"), Ps({"3", "3"})}) ==
        DescentViolation{1, DescentViolationKind::not_strictly_decreasing});
  CHECK(validate_descent({P("w"), Ps({"w"})}) == DescentViolation{0, DescentViolationKind::bound});
  CHECK_FALSE(validate_descent({OrdinalBound::top(), Ps({"w^(w^(w))", "1"})}));
  CHECK_FALSE(validate_descent({P("1"), {}}));
  CHECK(std::string(to_string(DescentViolationKind::not_strictly_decreasing)) == "not-strictly-decreasing");
}

TEST_CASE("residual examples") {
  const StreamEventLog empty{2, P("w"), {}};
  CHECK(residual(empty, 0, 0) == P("w"));
  CHECK(residual(empty, 1, 100) == P("w"));
  const StreamEventLog one{2, P("w"), {{0, 0, P("5")}}};
  CHECK(residual(one, 0, 0) == P("5"));
  const StreamEventLog two{2, P("w"), {{0, 0, P("5")}, {1, 1, P("4")}}};
  CHECK(residual(two, 1, 0) == P("w"));
  CHECK(residual(two, 1, 1) == P("4"));
  CHECK_THROWS_AS(residual(two, 2, 0), std::out_of_range);
}

TEST_CASE("gamma_combine examples") {
  const StreamEventLog log{2, P("w"), {{0, 0, P("5")}, {1, 1, P("4")}, {2, 0, P("3")}, {3, 1, P("2")}}};
  const DescentTrace out = gamma_combine(log);
  CHECK(out.bound == OrdinalBound(P("w*2")));
  CHECK(out.values == Ps({"w + 5", "9", "7", "5"}));
  CHECK(out.values == oracle::replay_gamma(log));

  const DescentTrace single = gamma_combine({1, P("w"), {{0, 0, P("7")}, {1, 0, P("2")}}});
  CHECK(single.values == Ps({"7", "2"}));
  CHECK(single.bound == OrdinalBound(P("w")));

  const DescentTrace vacuous = gamma_combine({2, P("w^(2)"), {}});
  CHECK(vacuous.values.empty());
  CHECK(vacuous.bound == OrdinalBound(P("w^(2)*2")));
}

TEST_CASE("malformed logs are rejected") {
  const Ordinal w = P("w");
  CHECK_THROWS_AS(gamma_combine({2, w, {{1, 0, P("5")}, {1, 1, P("4")}}}), MalformedLog);  // tie
  CHECK_THROWS_AS(gamma_combine({2, w, {{0, 2, P("5")}}}), MalformedLog);                  // stream
  CHECK_THROWS_AS(gamma_combine({2, w, {{0, 0, w}}}), MalformedLog);                       // bound
  CHECK_THROWS_AS(gamma_combine({2, w, {{0, 0, P("3")}, {1, 0, P("3")}}}), MalformedLog);  // no drop
  CHECK(check_log({2, w, {{5, 0, P("3")}, {2, 1, P("1")}}}).has_value());
  CHECK_FALSE(check_log({2, w, {{0, 0, P("3")}, {1, 1, P("3")}}}).has_value());
}

TEST_CASE("gamma_combine equals the stateless replayer on the small family") {
  std::size_t logs = 0;
  family::for_each_small_log([&](const StreamEventLog& log) {
    ++logs;
    const DescentTrace out = gamma_combine(log);
    REQUIRE(out.values == oracle::replay_gamma(log));
    REQUIRE(out.bound == OrdinalBound(oracle::nat_mul(log.bound, static_cast<unsigned>(log.streams))));
    REQUIRE_FALSE(validate_descent(out));
  });
  CHECK(logs > 10000);
}

TEST_CASE("random logs combine into valid descents") {
  SplitMix64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t k = 1 + rng.uniform(5);
    Ordinal beta = random_ordinal(rng, 3);
    if (beta.is_zero()) beta = Ordinal::natural(1);
    const StreamEventLog log = random_event_log(rng, k, beta, rng.uniform(51));
    REQUIRE_FALSE(check_log(log));
    const DescentTrace out = gamma_combine(log);
    CHECK(out.values.size() == log.events.size());
    CHECK(out.bound == OrdinalBound(nat_mul_k(beta, k)));
    CHECK_FALSE(validate_descent(out));
    for (std::size_t e = 0; e < k; ++e) {
      Ordinal last = beta;
      for (const auto& ev : log.events) {
        const Ordinal r = residual(log, e, ev.time);
        CHECK(r <= last);
        last = r;
      }
    }
  }
}

TEST_CASE("text formats roundtrip") {
  const StreamEventLog log{3, P("w^(w) + 1"), {{0, 2, P("w^(3)")}, {4, 0, P("w + 2")}}};
  std::ostringstream out;
  write_event_log(out, log);
  CHECK(out.str() == "k=3 bound=w^(w) + 1\nt=0 e=2 v=w^(3)\nt=4 e=0 v=w + 2\n");
  std::istringstream in("# comment\n" + out.str());
  const StreamEventLog back = read_event_log(in);
  CHECK(back.streams == 3);
  CHECK(back.bound == log.bound);
  REQUIRE(back.events.size() == 2);
  CHECK(back.events[1].value == P("w + 2"));

  const DescentTrace t{OrdinalBound::top(), Ps({"w^(w)", "w*2 + 1"})};
  std::ostringstream tout;
  write_descent_trace(tout, t);
  CHECK(tout.str() == "bound=e0\nw^(w)\nw*2 + 1\n");
  std::istringstream tin(tout.str());
  const DescentTrace tb = read_descent_trace(tin);
  CHECK(tb.bound.is_top());
  CHECK(tb.values == t.values);

  std::istringstream bad("k=2\n");
  CHECK_THROWS(read_event_log(bad));
}

#include <sstream>

#include "doctest.h"
#include "families.hpp"
#include "ordramsey/enumeration.hpp"
#include "ordramsey/enumeration_log.hpp"
#include "ordramsey/random.hpp"

using namespace ordramsey;

namespace {

using E = MonotoneEnumeration<>;

std::vector<E::Addition> adds(std::initializer_list<const char*> nodes) {
  std::vector<E::Addition> out;
  for (auto n : nodes) out.emplace_back(parse_node(n), std::monostate{});
  return out;
}

StageGenerator<std::monostate> replay(const family::Adversary& adv) {
  return [&adv](const E& e) -> std::optional<std::vector<E::Addition>> {
    const std::size_t s = e.stage_count() - 1;
    if (s >= adv.stages.size()) return std::nullopt;
    std::vector<E::Addition> out;
    for (auto n : adv.stages[s]) out.emplace_back(parse_node(n), std::monostate{});
    return out;
  };
}

}  // namespace

TEST_CASE("tree basics") {
  Tree t;
  CHECK(t.size() == 1);
  CHECK(t.is_leaf({}));
  t.insert({0});
  t.insert({1});
  t.insert({0, 0});
  CHECK_THROWS_AS(t.insert({2, 0}), std::logic_error);
  CHECK(t.children({}) == std::vector<Node>{{0}, {1}});
  CHECK(t.leaves() == std::vector<Node>{{0, 0}, {1}});
  CHECK(t.descendant_count({}) == 3);
  CHECK(t.height() == 2);
  CHECK(format_node({}) == "<>");
  CHECK(format_node({0, 12, 3}) == "0.12.3");
  CHECK(parse_node("0.12.3") == Node{0, 12, 3});
  CHECK(parse_node("root").empty());
  CHECK_THROWS(parse_node("0..1"));
  CHECK_THROWS(parse_node("a"));
}

TEST_CASE("step examples") {
  const E e;
  const E one = e.step(adds({"0", "1"}));
  CHECK(one.stage_count() == 2);
  CHECK(one.current().size() == 3);
  CHECK(e.stage_count() == 1);  // the original is untouched

  try {
    (void)e.step(adds({"0.0"}));
    FAIL("expected a rejection");
  } catch (const StepRejected& r) {
    CHECK(r.rejection().clause == EnumerationClause::extends_terminal);
    CHECK(r.rejection().stage == 1);
    CHECK(std::string(to_string(r.rejection().clause)) == "clause-3");
  }
  const E idle = e.step({});
  CHECK(idle.stage_count() == 2);
  CHECK(idle.current() == e.current());

  // Nodes enumerated together may chain below the same leaf.
  CHECK_NOTHROW((void)e.step(adds({"0.0", "0"})));
}

TEST_CASE("stage that is too large breaks the finiteness clause") {
  const E e(std::monostate{}, 2);
  const auto r = e.check_step(adds({"0", "1", "2"}));
  REQUIRE(r);
  CHECK(r->clause == EnumerationClause::finite_stage);
  CHECK_FALSE(e.check_step(adds({"0", "1"})));
}

TEST_CASE("stage 0 must be exactly the root") {
  using Stages = std::vector<std::vector<E::Addition>>;
  CHECK_THROWS_AS(enumeration_from_stages<std::monostate>(Stages{adds({"0"})}), StepRejected);
  CHECK_THROWS_AS(enumeration_from_stages<std::monostate>(Stages{}), StepRejected);
  try {
    enumeration_from_stages<std::monostate>(Stages{adds({"<>", "0"})});
  } catch (const StepRejected& r) {
    CHECK(r.rejection().clause == EnumerationClause::root_stage);
  }
  const E e = enumeration_from_stages<std::monostate>(Stages{adds({"<>"}), adds({"0"}), {}, adds({"0.0"})});
  CHECK(e.stage_count() == 4);
  CHECK(e.delta(2).empty());
  CHECK(e.stage(1).size() == 2);
}

TEST_CASE("check_bounded examples") {
  E chain3 = E().step(adds({"0"})).step(adds({"0.0"})).step(adds({"0.0.0"}));
  CHECK_FALSE(check_bounded(chain3, 3));
  E chain4 = chain3.step(adds({"0.0.0.0"}));
  CHECK(check_bounded(chain4, 3) == Node{0, 0, 0, 0});
  CHECK_FALSE(check_bounded(E(), 0));
}

TEST_CASE("run_to_finiteness examples") {
  const auto full = run_to_finiteness<std::monostate>(full_growth<std::monostate>(2, 2), 2, 2, 100);
  CHECK(full.status == RunStatus::finished);
  CHECK(full.enumeration.current().size() == 7);

  const auto chain = run_to_finiteness<std::monostate>(chain_growth<std::monostate>(3), 3, 1, 100);
  CHECK(chain.status == RunStatus::finished);
  CHECK(chain.enumeration.current().height() == 3);
  CHECK(chain.enumeration.stage_count() == 4);

  const auto adversary = run_to_finiteness<std::monostate>(replay(family::clause3_adversaries()[0]), 3, 3, 100);
  CHECK(adversary.status == RunStatus::rejected);
  REQUIRE(adversary.rejection);
  CHECK(adversary.rejection->clause == EnumerationClause::extends_terminal);

  StageGenerator<std::monostate> idler = [](const E&) { return std::vector<E::Addition>{}; };
  CHECK(run_to_finiteness<std::monostate>(idler, 3, 3, 50).status == RunStatus::fuel_exhausted);

  const auto too_deep = run_to_finiteness<std::monostate>(chain_growth<std::monostate>(5), 3, 1, 100);
  CHECK(too_deep.status == RunStatus::rejected);
  CHECK(too_deep.rejection->clause == EnumerationClause::bound);

  const auto too_wide = run_to_finiteness<std::monostate>(full_growth<std::monostate>(2, 3), 2, 2, 100);
  CHECK(too_wide.status == RunStatus::rejected);
  CHECK(too_wide.rejection->clause == EnumerationClause::branching);
}

TEST_CASE("every adversary is rejected at its first offense") {
  for (const auto& adv : family::clause3_adversaries()) {
    CAPTURE(adv.name);
    const auto r = run_to_finiteness<std::monostate>(replay(adv), 4, 4, 100);
    CHECK(r.status == RunStatus::rejected);
    REQUIRE(r.rejection);
    CHECK(r.rejection->clause == EnumerationClause::extends_terminal);
    CHECK(r.rejection->stage == adv.stages.size());
    CHECK(r.enumeration.stage_count() == adv.stages.size());
  }
}

TEST_CASE("capacity") {
  CHECK(bounded_tree_capacity(2, 2) == 27);
  CHECK(bounded_tree_capacity(0, 0) == 1);
  CHECK(bounded_tree_capacity(200, 9) == SIZE_MAX);
}

TEST_CASE("random bounded runs stay within (d+1)^(b+1) and grow monotonically") {
  SplitMix64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const std::size_t b = rng.uniform(5), d = rng.uniform(5);
    MonotoneEnumeration<Ordinal> start(Ordinal::natural(b + 1 + rng.uniform(3)));
    const auto r = run_to_finiteness<Ordinal>(random_ranked_growth(rng, b, d), b, d, 100000, start);
    REQUIRE(r.status == RunStatus::finished);
    const auto& e = r.enumeration;
    CHECK(e.current().size() <= bounded_tree_capacity(b, d));
    CHECK_FALSE(check_bounded(e, b));
    for (std::size_t s = 1; s < e.stage_count(); ++s) {
      for (const auto& n : e.stage(s - 1).nodes()) CHECK(e.stage(s).contains(n));
      CHECK(e.stage(s).size() == e.stage(s - 1).size() + e.delta(s).size());
    }
  }
}

TEST_CASE("enumeration log roundtrip") {
  const char* text =
      "# three stages\n"
      "bound=w\n"
      "stage 0\n"
      "add <> rank=5\n"
      "stage 1\n"
      "add 0 rank=3\n"
      "add 1 rank=w^(0)*2\n"
      "stage 2\n"
      "stage 3\n"
      "add 0.0 rank=1\n";
  std::istringstream in(text);
  const EnumerationLog log = read_enumeration_log(in);
  REQUIRE(log.stages.size() == 4);
  CHECK(log.stages[1][1].second == Ordinal::natural(2));
  const auto e = to_enumeration(log);
  CHECK(e.current().size() == 4);
  const auto ranks = ranks_of(log);
  CHECK(ranks.bound == Ordinal::omega());
  CHECK_FALSE(ranks.check(e.current()));
  std::ostringstream out;
  write_enumeration_log(out, to_log(e, log.bound));
  CHECK(out.str() ==
        "bound=w\nstage 0\nadd <> rank=5\nstage 1\nadd 0 rank=3\nadd 1 rank=2\nstage 2\nstage 3\nadd 0.0 rank=1\n");

  std::istringstream gap("stage 0\nadd <> rank=1\nstage 2\n");
  CHECK_THROWS(read_enumeration_log(gap));
  std::istringstream early("add 0 rank=1\n");
  CHECK_THROWS(read_enumeration_log(early));
  std::istringstream noroot("stage 0\nadd 0 rank=1\n");
  CHECK_THROWS_AS(to_enumeration(read_enumeration_log(noroot)), StepRejected);
  std::istringstream nobound("stage 0\nadd <> rank=w\n");
  CHECK(ranks_of(read_enumeration_log(nobound)).bound == parse_ordinal("w + 1"));
}

#include <doctest.h>

#include <random>

#include "fixlat/theorems.hpp"
#include "fixtures.hpp"

using namespace fixlat;
using namespace fixtures;

namespace {

Instance d4_instance() {
  auto p = d4();
  Elem a = p.index_of("a"), top = p.index_of("top");
  return {p, {a, top, top, top}, p.index_of("bot"), std::nullopt};
}

}  // namespace

TEST_CASE("diamond ascent converges at k=2 with trace bot,a,top,top") {
  auto inst = d4_instance();
  auto r = iterate(inst.poset, inst.f(), inst.a0, default_budget(4));
  REQUIRE(r.outcome.kind == OutcomeKind::Converged);
  CHECK(r.outcome.at == OrdinalIndex{0, 2});
  CHECK(r.outcome.value == inst.poset.index_of("top"));
  REQUIRE(r.trace.entries.size() == 4);
  CHECK(inst.poset.name(r.trace.entries[0].value) == "bot");
  CHECK(inst.poset.name(r.trace.entries[1].value) == "a");
  CHECK(inst.poset.name(r.trace.entries[2].value) == "top");
  CHECK(inst.poset.name(r.trace.entries[3].value) == "top");
}

TEST_CASE("v3 swap is divergent periodic after two limit steps") {
  auto p = v3();
  // f(a)=b, f(b)=a, f(t)=a
  auto f = map_of(p, {1, 0, 0});
  auto r = iterate(p, f, p.index_of("a"), default_budget(3));
  REQUIRE(r.outcome.kind == OutcomeKind::DivergentPeriodic);
  CHECK(p.name(r.outcome.value) == "t");
  CHECK(r.outcome.period_blocks == 1);
}

TEST_CASE("antichain swap hits an undefined limit at omega") {
  auto p = a2();
  auto f = map_of(p, {1, 0});
  auto r = iterate(p, f, 0, default_budget(2));
  REQUIRE(r.outcome.kind == OutcomeKind::UndefinedAtLimit);
  CHECK(r.outcome.at == OrdinalIndex{1, 0});
  CHECK(r.outcome.prefix_set == p.all());
}

TEST_CASE("budget exhaustion is an outcome") {
  auto p = v3();
  auto f = map_of(p, {1, 0, 0});
  auto r = iterate(p, f, p.index_of("a"), 2);
  CHECK(r.outcome.kind == OutcomeKind::BudgetExhausted);
  CHECK(r.outcome.budget == 2);
}

TEST_CASE("compute_A on the canonical examples") {
  auto inst = d4_instance();
  const auto& p = inst.poset;
  CHECK(compute_A(p, inst.f(), inst.a0, default_budget(4)) ==
        (set_single(p.index_of("bot")) | set_single(p.index_of("a")) |
         set_single(p.index_of("top"))));

  auto anti = v3();
  CHECK(compute_A(anti, identity(anti), 1, 10) == set_single(1));

  auto swapv = map_of(anti, {1, 0, 0});
  CHECK(compute_A(anti, swapv, anti.index_of("a"), default_budget(3)) == anti.all());
}

TEST_CASE("sequence monotonicity check") {
  auto inst = d4_instance();
  auto r = iterate(inst.poset, inst.f(), inst.a0, default_budget(4));
  CHECK(sequence_is_monotone(r.trace, inst.poset).ok);

  auto anti = v3();
  auto rv = iterate(anti, map_of(anti, {1, 0, 0}), 0, default_budget(3));
  auto m = sequence_is_monotone(rv.trace, anti);
  CHECK(!m.ok);
  CHECK(m.witness->first == OrdinalIndex{0, 0});
  CHECK(m.witness->second == OrdinalIndex{0, 1});

  auto one = iterate(anti, identity(anti), 2, 10);
  CHECK(sequence_is_monotone(one.trace, anti).ok);
}

TEST_CASE("ordinal display") {
  CHECK(OrdinalIndex{0, 3}.str() == "3");
  CHECK(OrdinalIndex{1, 0}.str() == "ω·1+0");
  CHECK(OrdinalIndex{2, 5}.str() == "ω·2+5");
  CHECK(OrdinalIndex{1, 0} > OrdinalIndex{0, 99});
}

TEST_CASE("property: extensive maps converge to a fixpoint") {
  std::mt19937_64 rng(31);
  int seen = 0;
  for (int round = 0; round < 4000 && seen < 300; ++round) {
    auto p = random_poset(rng, 1 + static_cast<int>(rng() % 6));
    auto f = random_map(rng, p);
    if (!is_extensive(f)) continue;
    ++seen;
    Elem a0 = static_cast<Elem>(rng() % p.size());
    auto r = iterate(p, f, a0, default_budget(p.size()));
    REQUIRE(r.outcome.kind == OutcomeKind::Converged);
    CHECK(f(r.outcome.value) == r.outcome.value);
  }
  CHECK(seen >= 300);
}

TEST_CASE("property: monotone from bottom of a lattice needs no limit step") {
  std::mt19937_64 rng(37);
  int seen = 0;
  for (int round = 0; round < 6000 && seen < 200; ++round) {
    auto p = random_poset(rng, 2 + static_cast<int>(rng() % 5));
    auto cls = classify_poset(p);
    if (!cls.is_complete_lattice) continue;
    auto f = random_map(rng, p);
    if (!is_monotone(f)) continue;
    ++seen;
    auto r = iterate(p, f, *p.bottom(), default_budget(p.size()));
    REQUIRE(r.outcome.kind == OutcomeKind::Converged);
    CHECK(r.outcome.at.limit_blocks == 0);
    CHECK(r.outcome.at.finite_offset <= p.size() - 1);
  }
  CHECK(seen >= 200);
}

TEST_CASE("property: monotone trace implies convergence, converged value is fixed") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 2000; ++round) {
    auto p = random_poset(rng, 1 + static_cast<int>(rng() % 6));
    auto f = random_map(rng, p);
    Elem a0 = static_cast<Elem>(rng() % p.size());
    auto r = iterate(p, f, a0, default_budget(p.size()));
    if (sequence_is_monotone(r.trace, p).ok) CHECK(r.outcome.kind == OutcomeKind::Converged);
    if (r.outcome.kind == OutcomeKind::Converged) CHECK(f(r.outcome.value) == r.outcome.value);
    if (r.outcome.kind == OutcomeKind::DivergentPeriodic) {
      // detection happens on the second or later limit step, so at least
      // one limit entry is already recorded
      CHECK(r.outcome.at.limit_blocks >= 1);
      int limits = 0;
      for (const auto& e : r.trace.entries) limits += e.is_limit ? 1 : 0;
      CHECK(limits >= 1);
    }
    if (r.outcome.kind == OutcomeKind::UndefinedAtLimit) {
      CHECK(!p.lub(r.outcome.prefix_set).has_value());
      CHECK(r.outcome.at.finite_offset == 0);
    }
  }
}

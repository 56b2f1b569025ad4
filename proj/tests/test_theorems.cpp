#include <doctest.h>

#include <random>

#include "fixlat/generate.hpp"
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

long budget_for(const Instance& inst) { return default_budget(inst.poset.size()); }

}  // namespace

TEST_CASE("LUBW_FIX passes on the diamond ascent") {
  auto inst = d4_instance();
  auto v = verify(TheoremId::LUBW_FIX, inst, budget_for(inst));
  CHECK(v.status == VerdictStatus::Pass);
  CHECK(v.hypotheses_hold);
  CHECK(v.conclusion_holds);
}

TEST_CASE("TARSKI_CL is vacuous when the carrier is not a lattice") {
  auto p = v3();
  Instance inst{p, {1, 0, 0}, p.index_of("a"), std::nullopt};
  auto v = verify(TheoremId::TARSKI_CL, inst, budget_for(inst));
  CHECK(v.status == VerdictStatus::Vacuous);
  CHECK(!v.hypotheses_hold);
}

TEST_CASE("MON_EXT: capped successor is vacuous, identity passes") {
  auto p = c3();
  Instance capped{p, {1, 2, 2}, 0, std::nullopt};
  CHECK(verify(TheoremId::MON_EXT, capped, budget_for(capped)).status == VerdictStatus::Vacuous);

  Instance id{p, {0, 1, 2}, 0, std::nullopt};
  CHECK(verify(TheoremId::MON_EXT, id, budget_for(id)).status == VerdictStatus::Pass);
}

TEST_CASE("NWA_EQ passes on the diamond ascent") {
  auto inst = d4_instance();
  auto v = verify(TheoremId::NWA_EQ, inst, budget_for(inst));
  CHECK(v.status == VerdictStatus::Pass);
}

TEST_CASE("each theorem exposes stable hypothesis names") {
  for (TheoremId id : all_theorems()) {
    CHECK(theorem_from_string(to_string(id)) == id);
    // names are distinct
    const auto& names = hypothesis_names(id);
    for (size_t i = 0; i < names.size(); ++i)
      for (size_t j = i + 1; j < names.size(); ++j) CHECK(names[i] != names[j]);
  }
  const auto& tarski = hypothesis_names(TheoremId::TARSKI_CL);
  REQUIRE(tarski.size() == 2);
  CHECK(tarski[0] == "complete_lattice");
  CHECK(tarski[1] == "monotone");
}

TEST_CASE("dropping an unknown hypothesis is an error") {
  auto inst = d4_instance();
  CHECK_THROWS_AS(verify(TheoremId::TARSKI_CL, inst, budget_for(inst), {"no_such_hypothesis"}),
                  DomainError);
}

TEST_CASE("g-theorems demand a g component") {
  auto inst = d4_instance();
  CHECK(requires_g(TheoremId::DEVIDE_JOIN));
  CHECK(requires_g(TheoremId::JOIN_REMARK));
  CHECK(!requires_g(TheoremId::TARSKI_CL));
  CHECK_THROWS_AS(verify(TheoremId::DEVIDE_JOIN, inst, budget_for(inst)), DomainError);
}

TEST_CASE("dropping complete_lattice from TARSKI_CL refutes on the antichain swap") {
  auto p = a2();
  Instance inst{p, {1, 0}, 0, std::nullopt};
  auto v = verify(TheoremId::TARSKI_CL, inst, budget_for(inst), {"complete_lattice"});
  CHECK(v.status == VerdictStatus::Refuted);
  CHECK(!v.witness.empty());
}

TEST_CASE("least-fixpoint oracles by direct scan") {
  auto inst = d4_instance();
  const auto& p = inst.poset;
  CHECK(oracle_least_fixpoint(p, inst.f()) == p.index_of("top"));
  CHECK(oracle_least_fixpoint_geq(p, inst.f(), p.index_of("a")) == p.index_of("top"));

  auto anti = a2();
  CHECK(!oracle_least_fixpoint(anti, map_of(anti, {1, 0})).has_value());
  // two incomparable fixpoints -> no least one
  CHECK(!oracle_least_fixpoint(anti, identity(anti)).has_value());
  CHECK(oracle_least_fixpoint_geq(anti, identity(anti), 1) == 1);
}

TEST_CASE("subset completeness helpers") {
  auto p = d4();
  CHECK(subset_is_complete_lattice(p, p.all()));
  CHECK(subset_is_complete_lattice(p, set_single(p.index_of("top"))));
  CHECK(!subset_is_complete_lattice(p, set_single(p.index_of("a")) | set_single(p.index_of("b"))));
  CHECK(subset_is_complete_semilattice(p, p.all()));
  CHECK(subset_is_chain_complete(p, p.all()));
  CHECK(!subset_is_chain_complete(p, 0));
  auto anti = v3();
  CHECK(!subset_is_chain_complete(anti, anti.all()));  // no least element
}

TEST_CASE("JOIN_REMARK against the identity join on the diamond") {
  auto p = d4();
  // g monotone; f(x) = x v g(x) exists everywhere in a lattice
  Elem a = p.index_of("a");
  Instance inst{p, {a, a, p.index_of("top"), p.index_of("top")}, p.index_of("bot"),
                std::vector<Elem>{a, a, p.index_of("top"), p.index_of("top")}};
  auto v = verify(TheoremId::JOIN_REMARK, inst, budget_for(inst));
  CHECK(v.status != VerdictStatus::Refuted);
}

TEST_CASE("DEVIDE_JOIN with a0 <= g(a0): the f and g traces coincide") {
  std::mt19937_64 rng(53);
  int seen = 0;
  for (int round = 0; round < 4000 && seen < 100; ++round) {
    auto inst = generate_instance(rng(), 2 + static_cast<int>(rng() % 4), Shape::RandomLattice,
                                  /*with_g=*/true);
    auto g = *inst.g();
    if (!is_monotone(g)) continue;
    if (!inst.poset.leq(inst.a0, g(inst.a0))) continue;
    ++seen;
    auto v = verify(TheoremId::DEVIDE_JOIN, inst, budget_for(inst));
    CHECK(v.status != VerdictStatus::Refuted);
  }
  CHECK(seen >= 100);
}

TEST_CASE("property: no theorem is refuted on random instances") {
  std::mt19937_64 rng(59);
  for (int round = 0; round < 150; ++round) {
    auto inst = generate_instance(rng(), 2 + static_cast<int>(rng() % 5),
                                  (round % 2) ? Shape::RandomLattice : Shape::RandomOrder,
                                  /*with_g=*/true);
    for (TheoremId id : all_theorems()) {
      try {
        auto v = verify(id, inst, budget_for(inst));
        CHECK(v.status != VerdictStatus::Refuted);
      } catch (const DomainError& e) {
        // joins absent for building f from g on non-lattices
        CHECK(e.kind() == "UnsupportedCarrier");
      }
    }
  }
}

TEST_CASE("property: KURATOWSKI_LEAST converged value matches the oracle") {
  std::mt19937_64 rng(61);
  int seen = 0;
  for (int round = 0; round < 6000 && seen < 200; ++round) {
    auto p = random_poset(rng, 1 + static_cast<int>(rng() % 5));
    auto f = random_map(rng, p);
    Elem a0 = static_cast<Elem>(rng() % p.size());
    if (!is_extensive(f) || !is_monotone(f)) continue;
    ++seen;
    Instance inst{p, f.mapping(), a0, std::nullopt};
    auto v = verify(TheoremId::KURATOWSKI_LEAST, inst, budget_for(inst));
    REQUIRE(v.status == VerdictStatus::Pass);
    auto r = iterate(p, f, a0, budget_for(inst));
    REQUIRE(r.outcome.kind == OutcomeKind::Converged);
    CHECK(oracle_least_fixpoint_geq(p, f, a0) == r.outcome.value);
  }
  CHECK(seen >= 200);
}

TEST_CASE("property: TARSKI_CL conclusion agrees with glb(post(f)) and the oracle") {
  std::mt19937_64 rng(67);
  int seen = 0;
  for (int round = 0; round < 6000 && seen < 150; ++round) {
    auto p = random_poset(rng, 2 + static_cast<int>(rng() % 4));
    if (!classify_poset(p).is_complete_lattice) continue;
    auto f = random_map(rng, p);
    if (!is_monotone(f)) continue;
    ++seen;
    Instance inst{p, f.mapping(), *p.bottom(), std::nullopt};
    auto v = verify(TheoremId::TARSKI_CL, inst, budget_for(inst));
    REQUIRE(v.status == VerdictStatus::Pass);
    auto fs = fixpoint_sets(f);
    auto lfp = p.glb(fs.post);
    REQUIRE(lfp.has_value());
    CHECK(set_contains(fs.fix, *lfp));
    CHECK(oracle_least_fixpoint(p, f) == *lfp);
  }
  CHECK(seen >= 150);
}

TEST_CASE("property: COUSOT_BOUND iterates stay under post-fixpoints above a0") {
  std::mt19937_64 rng(71);
  int seen = 0;
  for (int round = 0; round < 6000 && seen < 150; ++round) {
    auto p = random_poset(rng, 2 + static_cast<int>(rng() % 4));
    if (!classify_poset(p).is_complete_lattice) continue;
    auto f = random_map(rng, p);
    if (!is_monotone(f)) continue;
    Elem a0 = static_cast<Elem>(rng() % p.size());
    if (!p.leq(a0, f(a0))) continue;
    ++seen;
    Instance inst{p, f.mapping(), a0, std::nullopt};
    auto v = verify(TheoremId::COUSOT_BOUND, inst, budget_for(inst));
    REQUIRE(v.status == VerdictStatus::Pass);
    auto r = iterate(p, f, a0, budget_for(inst));
    for (Elem y = 0; y < p.size(); ++y) {
      if (!p.leq(f(y), y) || !p.leq(a0, y)) continue;
      for (const auto& e : r.trace.entries) CHECK(p.leq(e.value, y));
    }
  }
  CHECK(seen >= 150);
}

#include <doctest.h>

#include "fixlat/sweep.hpp"

using namespace fixlat;

namespace {

bool same_stats(const SweepStats& a, const SweepStats& b) {
  return a.instances == b.instances && a.verdicts == b.verdicts && a.passed == b.passed &&
         a.vacuous == b.vacuous && a.refuted == b.refuted &&
         a.refutations.size() == b.refutations.size();
}

}  // namespace

TEST_CASE("exhaustive sweep at size 2: no refutations, parallel matches serial") {
  auto serial = sweep_exhaustive(2, /*parallel=*/false);
  auto parallel = sweep_exhaustive(2, /*parallel=*/true);
  CHECK(serial.refuted == 0);
  CHECK(serial.instances > 0);
  CHECK(serial.verdicts > serial.instances);
  CHECK(same_stats(serial, parallel));
}

TEST_CASE("exhaustive sweep at size 3: no refutations, parallel matches serial") {
  auto serial = sweep_exhaustive(3, /*parallel=*/false);
  auto parallel = sweep_exhaustive(3, /*parallel=*/true);
  CHECK(serial.refuted == 0);
  CHECK(same_stats(serial, parallel));
}

TEST_CASE("random sweep: no refutations, parallel matches serial") {
  auto serial = sweep_random(2024, 60, 3, 6, /*parallel=*/false);
  auto parallel = sweep_random(2024, 60, 3, 6, /*parallel=*/true);
  CHECK(serial.instances == 60);
  CHECK(serial.refuted == 0);
  CHECK(same_stats(serial, parallel));
}

TEST_CASE("drop search finds the antichain swap for TARSKI_CL") {
  auto r = search_exhaustive(TheoremId::TARSKI_CL, {"complete_lattice"}, 2);
  REQUIRE(!r.witnesses.empty());
  const auto& w = r.witnesses.front();
  CHECK(w.inst.poset.size() == 2);
  CHECK(!w.inst.poset.leq(0, 1));
  CHECK(!w.inst.poset.leq(1, 0));
  CHECK(w.inst.f_map == std::vector<Elem>{1, 0});
}

TEST_CASE("drop search finds a MON_EXT witness off total orders") {
  auto r = search_exhaustive(TheoremId::MON_EXT, {"well_ordered"}, 3);
  REQUIRE(!r.witnesses.empty());
  for (const auto& w : r.witnesses) {
    auto f = w.inst.f();
    auto c = classify_map(f);
    CHECK(c.strictly_monotone);
    CHECK(!c.extensive);
  }
}

TEST_CASE("full-mode search over every theorem at size 2 finds nothing") {
  for (TheoremId id : all_theorems()) {
    auto r = search_exhaustive(id, {}, 2);
    CHECK(r.witnesses.empty());
    CHECK(r.examined > 0);
  }
}

TEST_CASE("witness cap stops the search early") {
  auto capped = search_exhaustive(TheoremId::TARSKI_CL, {"complete_lattice"}, 3, 1);
  CHECK(capped.witnesses.size() == 1);
  auto more = search_exhaustive(TheoremId::TARSKI_CL, {"complete_lattice"}, 3, 5);
  CHECK(more.witnesses.size() == 5);
  CHECK(capped.examined <= more.examined);
}

TEST_CASE("random drop search is reproducible") {
  auto a = search_random(TheoremId::TARSKI_CL, {"complete_lattice"}, 99, 300, 4,
                         Shape::RandomOrder);
  auto b = search_random(TheoremId::TARSKI_CL, {"complete_lattice"}, 99, 300, 4,
                         Shape::RandomOrder);
  CHECK(a.examined == b.examined);
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  for (size_t i = 0; i < a.witnesses.size(); ++i) {
    CHECK(a.witnesses[i].seed == b.witnesses[i].seed);
    CHECK(a.witnesses[i].inst.f_map == b.witnesses[i].inst.f_map);
  }
}

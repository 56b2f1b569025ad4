#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace fixlat;
using namespace fixtures;

TEST_CASE("two-element chain from hasse pairs") {
  auto p = c2();
  CHECK(p.size() == 2);
  CHECK(p.leq(0, 1));
  CHECK(!p.leq(1, 0));
  CHECK(p.leq(0, 0));
}

TEST_CASE("diamond covers are exactly the four hasse edges") {
  auto p = d4();
  auto expected = covers_oracle(p);
  CHECK(p.cover_pairs() == expected);
  CHECK(p.cover_pairs().size() == 4);
  // bot < top is in the order but not a cover
  CHECK(p.lt(p.index_of("bot"), p.index_of("top")));
  CHECK(!p.covers(p.index_of("bot"), p.index_of("top")));
}

TEST_CASE("antisymmetry violation is rejected") {
  CHECK_THROWS_AS(FinitePoset::build({"x", "y"}, {{"x", "y"}, {"y", "x"}}, RelationKind::Hasse),
                  DomainError);
}

TEST_CASE("full relation must satisfy the axioms") {
  // missing reflexive pair
  CHECK_THROWS_AS(FinitePoset::build({"x", "y"}, {{"x", "x"}, {"x", "y"}}, RelationKind::Full),
                  DomainError);
  // missing transitive edge
  CHECK_THROWS_AS(FinitePoset::build({"x", "y", "z"},
                                     {{"x", "x"}, {"y", "y"}, {"z", "z"}, {"x", "y"}, {"y", "z"}},
                                     RelationKind::Full),
                  DomainError);
}

TEST_CASE("unknown element names are rejected") {
  CHECK_THROWS_AS(FinitePoset::build({"x"}, {{"x", "w"}}, RelationKind::Hasse), DomainError);
}

TEST_CASE("lub and glb on the canonical posets") {
  auto dia = d4();
  Elem a = dia.index_of("a"), b = dia.index_of("b");
  CHECK(dia.lub(set_with(set_single(a), b)) == dia.index_of("top"));
  CHECK(dia.glb(set_with(set_single(a), b)) == dia.index_of("bot"));

  auto c = c3();
  CHECK(c.lub(set_single(1)) == 1);  // singleton
  CHECK(c.glb(c.all()) == 0);

  auto anti = a2();
  CHECK(!anti.lub(anti.all()).has_value());
  CHECK(!anti.glb(anti.all()).has_value());
}

TEST_CASE("lub of the empty set is the bottom when it exists") {
  CHECK(d4().lub(0) == d4().index_of("bot"));
  CHECK(!v3().lub(0).has_value());
}

TEST_CASE("classification of the canonical posets") {
  auto cd = classify_poset(d4());
  CHECK(cd.is_lattice);
  CHECK(cd.is_complete_lattice);
  CHECK(!cd.is_well_ordered);
  CHECK(cd.decided_exhaustively);

  auto cc = classify_poset(c3());
  CHECK(cc.is_lattice);
  CHECK(cc.is_complete_lattice);
  CHECK(cc.is_complete_semilattice);
  CHECK(cc.is_chain_complete);
  CHECK(cc.is_well_ordered);

  auto cv = classify_poset(v3());
  CHECK(!cv.is_lattice);
  CHECK(cv.is_complete_semilattice);
  CHECK(!cv.is_chain_complete);  // no bottom
  CHECK(!cv.is_complete_lattice);
}

TEST_CASE("chain enumeration") {
  auto dia = d4();
  auto chains2 = enumerate_chains(dia, 2);
  CHECK(chains2.size() == 7);
  for (ElemSet c : chains2) CHECK(dia.is_chain(c));
  for (ElemSet c : chains2) CHECK(set_size(c) < 4);  // no chain of size 4 in the diamond

  CHECK(enumerate_chains(a2(), 2).empty());
  CHECK(enumerate_chains(c2(), 0).size() == 4);  // {}, {0}, {1}, {0,1}
}

TEST_CASE("property: lub is an upper bound below every upper bound") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    auto p = random_poset(rng, 1 + static_cast<int>(rng() % 6));
    ElemSet s = rng() & p.all();
    auto l = p.lub(s);
    CHECK(l == lub_oracle(p, s));
    if (l && s != 0) {
      for_each_element(s, [&](Elem x) { CHECK(p.leq(x, *l)); });
      for (Elem u = 0; u < p.size(); ++u) {
        bool ub = true;
        for_each_element(s, [&](Elem x) {
          if (!p.leq(x, u)) ub = false;
        });
        if (ub) CHECK(p.leq(*l, u));
      }
    }
  }
}

TEST_CASE("property: lub in p equals glb in the reversed poset") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    auto p = random_poset(rng, 1 + static_cast<int>(rng() % 6));
    auto r = p.reversed();
    ElemSet s = rng() & p.all();
    if (s == 0) continue;  // empty-set conventions dualize bottom/top
    CHECK(p.lub(s) == r.glb(s));
    CHECK(p.glb(s) == r.lub(s));
  }
}

TEST_CASE("property: transitive closure of covers regenerates the order") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 100; ++round) {
    auto p = random_poset(rng, 1 + static_cast<int>(rng() % 7));
    std::vector<std::pair<Elem, Elem>> covers = p.cover_pairs();
    auto q = FinitePoset::build_indexed(p.size(), covers, RelationKind::Hasse);
    for (Elem x = 0; x < p.size(); ++x)
      for (Elem y = 0; y < p.size(); ++y) CHECK(p.leq(x, y) == q.leq(x, y));
  }
}

TEST_CASE("property: every finite non-empty poset is strictly inductive") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 100; ++round) {
    auto p = random_poset(rng, 1 + static_cast<int>(rng() % 7));
    CHECK(classify_poset(p).is_strictly_inductive);
  }
}

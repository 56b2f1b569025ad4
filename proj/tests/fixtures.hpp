#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "fixlat/chain_sets.hpp"
#include "fixlat/endomap.hpp"
#include "fixlat/poset.hpp"

namespace fixtures {

using namespace fixlat;

// two-element chain 0 < 1
inline FinitePoset c2() {
  return FinitePoset::build({"0", "1"}, {{"0", "1"}}, RelationKind::Hasse);
}

// three-element chain 0 < 1 < 2
inline FinitePoset c3() {
  return FinitePoset::build({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}}, RelationKind::Hasse);
}

inline FinitePoset chain(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(names[i], names[i + 1]);
  return FinitePoset::build(names, edges, RelationKind::Hasse);
}

// diamond bot < a,b < top
inline FinitePoset d4() {
  return FinitePoset::build({"bot", "a", "b", "top"},
                            {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}},
                            RelationKind::Hasse);
}

// a < t, b < t, a and b incomparable, no bottom
inline FinitePoset v3() {
  return FinitePoset::build({"a", "b", "t"}, {{"a", "t"}, {"b", "t"}}, RelationKind::Hasse);
}

// two-element antichain
inline FinitePoset a2() {
  return FinitePoset::build({"a", "b"}, {}, RelationKind::Hasse);
}

inline Endomap map_of(const FinitePoset& p, std::vector<Elem> m) {
  return Endomap::build(p, std::move(m));
}

inline Endomap identity(const FinitePoset& p) {
  std::vector<Elem> m(p.size());
  for (Elem x = 0; x < p.size(); ++x) m[x] = x;
  return Endomap::build(p, std::move(m));
}

// Oracle: least upper bound by scanning every element (no poset helpers
// beyond leq).
inline std::optional<Elem> lub_oracle(const FinitePoset& p, ElemSet s) {
  std::vector<Elem> ubs;
  for (Elem u = 0; u < p.size(); ++u) {
    bool ub = true;
    for_each_element(s, [&](Elem x) {
      if (!p.leq(x, u)) ub = false;
    });
    if (ub) ubs.push_back(u);
  }
  for (Elem u : ubs) {
    bool least = true;
    for (Elem v : ubs)
      if (!p.leq(u, v)) least = false;
    if (least) return u;
  }
  return std::nullopt;
}

// Oracle: transitive reduction by pairwise checking.
inline std::vector<std::pair<Elem, Elem>> covers_oracle(const FinitePoset& p) {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < p.size(); ++x)
    for (Elem y = 0; y < p.size(); ++y) {
      if (!p.lt(x, y)) continue;
      bool between = false;
      for (Elem z = 0; z < p.size(); ++z)
        if (p.lt(x, z) && p.lt(z, y)) between = true;
      if (!between) out.emplace_back(x, y);
    }
  return out;
}

// Oracle: every a0-chain by power-set scan (small posets only).
inline std::vector<ElemSet> a0_chains_oracle(const FinitePoset& p, const Endomap& f, Elem a0) {
  std::vector<ElemSet> out;
  const ElemSet full = p.all();
  for (ElemSet c = 1; c <= full; ++c)
    if (is_a0_chain(p, f, a0, c).ok) out.push_back(c);
  return out;
}

inline FinitePoset random_poset(std::mt19937_64& rng, int n) {
  std::vector<std::pair<Elem, Elem>> edges;
  for (Elem i = 0; i < n; ++i)
    for (Elem j = i + 1; j < n; ++j)
      if (rng() & 1) edges.emplace_back(i, j);
  return FinitePoset::build_indexed(n, edges, RelationKind::Hasse);
}

inline Endomap random_map(std::mt19937_64& rng, const FinitePoset& p) {
  std::vector<Elem> m(p.size());
  for (auto& v : m) v = static_cast<Elem>(rng() % p.size());
  return Endomap::build(p, std::move(m));
}

}  // namespace fixtures

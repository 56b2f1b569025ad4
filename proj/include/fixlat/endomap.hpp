#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fixlat/poset.hpp"

namespace fixlat {

// Total self-map on a poset's elements. Does not own the poset.
class Endomap {
public:
  static Endomap build(const FinitePoset& p, std::vector<Elem> mapping);

  const FinitePoset& poset() const { return *poset_; }
  Elem apply(Elem x) const { return mapping_[x]; }
  Elem operator()(Elem x) const { return mapping_[x]; }
  const std::vector<Elem>& mapping() const { return mapping_; }

private:
  const FinitePoset* poset_ = nullptr;
  std::vector<Elem> mapping_;
};

struct MapClassification {
  bool monotone = false;
  bool strictly_monotone = false;
  bool extensive = false;
  bool strictly_extensive = false;
  bool p2 = false;        // f(x) <= f(y) if x <= f(x) <= y
  bool p2_prime = false;  // same, with (x, f(x)) a covering pair
  std::optional<bool> p1_at;  // a0 <= f(a0), when a0 was supplied
};

// All flags by exhaustive quantification over pairs. The optional
// restriction limits the quantified x, y to a subset of X.
MapClassification classify_map(const Endomap& f, std::optional<Elem> a0 = std::nullopt,
                               std::optional<ElemSet> restriction = std::nullopt);

bool is_monotone(const Endomap& f);
bool is_extensive(const Endomap& f);
bool satisfies_p1(const Endomap& f, Elem a0);
bool satisfies_p2(const Endomap& f, std::optional<ElemSet> restriction = std::nullopt);
bool satisfies_p2_prime(const Endomap& f, std::optional<ElemSet> restriction = std::nullopt);

struct FixpointSets {
  ElemSet pre = 0;   // {x | x <= f(x)}
  ElemSet post = 0;  // {x | x >= f(x)}
  ElemSet fix = 0;   // pre & post
};

FixpointSets fixpoint_sets(const Endomap& f);

struct MonotoneOn {
  bool ok = true;
  std::optional<std::pair<Elem, Elem>> witness;  // first violating pair, index order
};

MonotoneOn monotone_on(const Endomap& f, ElemSet s);

}  // namespace fixlat

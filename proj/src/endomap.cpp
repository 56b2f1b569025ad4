#include "fixlat/endomap.hpp"

namespace fixlat {

Endomap Endomap::build(const FinitePoset& p, std::vector<Elem> mapping) {
  if (static_cast<int>(mapping.size()) != p.size())
    throw DomainError("PartialMap", "mapping must cover every element exactly once");
  for (Elem y : mapping) p.check_element(y);
  Endomap f;
  f.poset_ = &p;
  f.mapping_ = std::move(mapping);
  return f;
}

bool is_monotone(const Endomap& f) {
  const auto& p = f.poset();
  for (Elem x = 0; x < p.size(); ++x)
    for (Elem y = 0; y < p.size(); ++y)
      if (p.leq(x, y) && !p.leq(f(x), f(y))) return false;
  return true;
}

bool is_extensive(const Endomap& f) {
  const auto& p = f.poset();
  for (Elem x = 0; x < p.size(); ++x)
    if (!p.leq(x, f(x))) return false;
  return true;
}

bool satisfies_p1(const Endomap& f, Elem a0) {
  f.poset().check_element(a0);
  return f.poset().leq(a0, f(a0));
}

bool satisfies_p2(const Endomap& f, std::optional<ElemSet> restriction) {
  const auto& p = f.poset();
  const ElemSet dom = restriction.value_or(p.all());
  bool ok = true;
  for_each_element(dom, [&](Elem x) {
    if (!p.leq(x, f(x))) return;
    for_each_element(dom, [&](Elem y) {
      if (p.leq(f(x), y) && !p.leq(f(x), f(y))) ok = false;
    });
  });
  return ok;
}

bool satisfies_p2_prime(const Endomap& f, std::optional<ElemSet> restriction) {
  const auto& p = f.poset();
  const ElemSet dom = restriction.value_or(p.all());
  bool ok = true;
  for_each_element(dom, [&](Elem x) {
    // premise needs x < f(x) with (x, f(x)) a covering pair
    if (!p.covers(x, f(x))) return;
    for_each_element(dom, [&](Elem y) {
      if (p.leq(f(x), y) && !p.leq(f(x), f(y))) ok = false;
    });
  });
  return ok;
}

MapClassification classify_map(const Endomap& f, std::optional<Elem> a0,
                               std::optional<ElemSet> restriction) {
  const auto& p = f.poset();
  const ElemSet dom = restriction.value_or(p.all());
  MapClassification c;
  c.monotone = c.strictly_monotone = c.extensive = c.strictly_extensive = true;
  for_each_element(dom, [&](Elem x) {
    if (!p.leq(x, f(x))) c.extensive = false;
    if (!p.lt(x, f(x))) c.strictly_extensive = false;
    for_each_element(dom, [&](Elem y) {
      if (p.leq(x, y) && !p.leq(f(x), f(y))) c.monotone = false;
      if (p.lt(x, y) && !p.lt(f(x), f(y))) c.strictly_monotone = false;
    });
  });
  c.p2 = satisfies_p2(f, restriction);
  c.p2_prime = satisfies_p2_prime(f, restriction);
  if (a0) c.p1_at = satisfies_p1(f, *a0);
  return c;
}

FixpointSets fixpoint_sets(const Endomap& f) {
  const auto& p = f.poset();
  FixpointSets s;
  for (Elem x = 0; x < p.size(); ++x) {
    if (p.leq(x, f(x))) s.pre = set_with(s.pre, x);
    if (p.leq(f(x), x)) s.post = set_with(s.post, x);
  }
  s.fix = s.pre & s.post;
  return s;
}

MonotoneOn monotone_on(const Endomap& f, ElemSet s) {
  const auto& p = f.poset();
  if ((s & ~p.all()) != 0) throw unknown_element("subset contains out-of-range bits");
  MonotoneOn r;
  for (Elem x = 0; x < p.size() && r.ok; ++x) {
    if (!set_contains(s, x)) continue;
    for (Elem y = 0; y < p.size(); ++y) {
      if (!set_contains(s, y)) continue;
      if (p.leq(x, y) && !p.leq(f(x), f(y))) {
        r.ok = false;
        r.witness = {x, y};
        break;
      }
    }
  }
  return r;
}

}  // namespace fixlat

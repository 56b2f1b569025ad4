#include "fixlat/chain_sets.hpp"

namespace fixlat {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    case Tri::NotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

ChainCheck is_a0_chain(const FinitePoset& p, const Endomap& f, Elem a0, ElemSet c) {
  p.check_element(a0);
  if ((c & ~p.all()) != 0) throw unknown_element("subset contains out-of-range bits");
  ChainCheck r;
  if (!p.is_chain(c)) {
    r.ok = false;
    r.failed_clause = "totally_ordered";
    return r;
  }
  auto least = p.least_of(c);
  if (!least || *least != a0) {
    r.ok = false;
    r.failed_clause = "least_is_a0";
    return r;
  }
  // closed under non-empty lubs: automatic for finite chains, checked anyway
  for (ElemSet s = c; s != 0; s = (s - 1) & c) {
    auto l = p.lub(s);
    if (!l || !set_contains(c, *l)) {
      r.ok = false;
      r.failed_clause = "closed_under_lubs";
      return r;
    }
  }
  const Elem greatest = *p.greatest_of(c);
  ElemSet rest = c & ~set_single(greatest);
  ChainCheck out;
  for_each_element(rest, [&](Elem z) {
    if (!out.ok) return;
    if (!set_contains(c, f(z))) {
      out = {false, "image_in_chain", z};
      return;
    }
    if (!p.lt(z, f(z))) {
      out = {false, "strict_ascent", z};
      return;
    }
    bool between = false;
    for_each_element(c, [&](Elem y) {
      if (p.lt(z, y) && p.lt(y, f(z))) between = true;
    });
    if (between) out = {false, "no_member_between", z};
  });
  return out;
}

ElemSet compute_W(const FinitePoset& p, const Endomap& f, Elem a0) {
  p.check_element(a0);
  ElemSet w = set_single(a0);
  Elem cur = a0;
  while (p.lt(cur, f(cur))) {
    cur = f(cur);
    if (set_contains(w, cur)) break;  // cannot happen while strictly ascending
    w = set_with(w, cur);
  }
  return w;
}

NClosure compute_N(const FinitePoset& p, const Endomap& f, Elem a0, int exhaustive_bound) {
  p.check_element(a0);
  ElemSet z = set_single(a0);
  bool changed = true;
  while (changed) {
    changed = false;
    ElemSet next = z;
    for_each_element(z, [&](Elem x) { next = set_with(next, f(x)); });
    // u is the lub of some non-empty subset of z iff u = lub(z & down(u))
    for (Elem u = 0; u < p.size(); ++u) {
      if (set_contains(next, u)) continue;
      ElemSet below = z & p.down_set(u);
      if (below == 0) continue;
      auto l = p.lub(below);
      if (l && *l == u) next = set_with(next, u);
    }
    if (next != z) {
      z = next;
      changed = true;
    }
  }

  NClosure r;
  r.set = z;
  if (set_size(z) <= exhaustive_bound) {
    r.strict_decided_exhaustively = true;
    r.strict_lub_clause = true;
    for (ElemSet s = z; s != 0; s = (s - 1) & z)
      if (!p.lub(s)) {
        r.strict_lub_clause = false;
        break;
      }
  } else {
    // pairwise necessary condition only
    r.strict_lub_clause = true;
    auto v = set_to_vector(z);
    for (size_t i = 0; i < v.size() && r.strict_lub_clause; ++i)
      for (size_t j = i + 1; j < v.size(); ++j)
        if (!p.lub(set_with(set_single(v[i]), v[j]))) {
          r.strict_lub_clause = false;
          break;
        }
  }
  return r;
}

CanonicalSets compare_ANW(const FinitePoset& p, const Endomap& f, Elem a0, long budget) {
  CanonicalSets r;
  auto it = iterate(p, f, a0, budget);
  r.outcome = it.outcome;
  r.N = compute_N(p, f, a0).set;
  r.W = compute_W(p, f, a0);
  r.w_sub_n = (r.W & ~r.N) == 0;
  r.n_sub_w = (r.N & ~r.W) == 0;
  const bool a_defined = it.outcome.kind == OutcomeKind::Converged ||
                         it.outcome.kind == OutcomeKind::DivergentPeriodic;
  if (a_defined) {
    r.A = it.trace.distinct;
    r.a_sub_n = ((*r.A & ~r.N) == 0) ? Tri::True : Tri::False;
    r.n_sub_a = ((r.N & ~*r.A) == 0) ? Tri::True : Tri::False;
    r.all_equal = (*r.A == r.N && r.N == r.W) ? Tri::True : Tri::False;
  }
  return r;
}

bool w_steps_are_covering(const FinitePoset& p, const Endomap& f, Elem a0) {
  p.check_element(a0);
  Elem cur = a0;
  while (p.lt(cur, f(cur))) {
    if (!p.covers(cur, f(cur))) return false;
    cur = f(cur);
  }
  return true;
}

WStepReport w_step_closure(const FinitePoset& p, const Endomap& f, Elem a0) {
  WStepReport r;
  ElemSet w = compute_W(p, f, a0);
  for_each_element(w, [&](Elem x) {
    if (!set_contains(w, f(x))) {
      if (r.f_closed) {
        r.f_closed = false;
        r.f_closed_witness = x;
      }
      if (p.leq(x, f(x)) && r.conditional_holds) {
        r.conditional_holds = false;
        r.conditional_witness = x;
      }
    }
  });
  return r;
}

}  // namespace fixlat

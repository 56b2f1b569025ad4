#pragma once

#include <optional>
#include <string>

#include "fixlat/engine.hpp"

namespace fixlat {

struct ChainCheck {
  bool ok = true;
  std::string failed_clause;           // first failing clause name, empty when ok
  std::optional<Elem> witness;
};

// The four a0-chain clauses: totally ordered; least element a0; closed
// under non-empty lubs; every non-greatest z has f(z) in the chain as
// immediate successor with z < f(z).
ChainCheck is_a0_chain(const FinitePoset& p, const Endomap& f, Elem a0, ElemSet c);

// Lubs of a0-chains. Finite a0-chains are exactly the strictly
// ascending prefixes of the f-orbit from a0, so W is collected in
// linear time; a power-set reference enumerator cross-checks in tests.
ElemSet compute_W(const FinitePoset& p, const Endomap& f, Elem a0);

struct NClosure {
  ElemSet set = 0;
  // Whether every non-empty subset of N has an existing lub (the strict
  // reading of the closure definition); decided exhaustively only when
  // |N| <= exhaustive_bound.
  bool strict_lub_clause = false;
  bool strict_decided_exhaustively = false;
};

// Smallest superset of {a0} closed under f and under existing lubs of
// its non-empty subsets.
NClosure compute_N(const FinitePoset& p, const Endomap& f, Elem a0, int exhaustive_bound = 12);

enum class Tri { True, False, NotApplicable };
std::string to_string(Tri t);

struct CanonicalSets {
  std::optional<ElemSet> A;  // absent when iteration had no defined iterate set
  ElemSet N = 0;
  ElemSet W = 0;
  IterationOutcome outcome;
  Tri a_sub_n = Tri::NotApplicable;
  Tri n_sub_a = Tri::NotApplicable;
  bool w_sub_n = false;
  bool n_sub_w = false;
  Tri all_equal = Tri::NotApplicable;
};

CanonicalSets compare_ANW(const FinitePoset& p, const Endomap& f, Elem a0, long budget);

// Whether every non-maximal x in W has f(x) as an immediate successor
// in the carrier (x is covered by f(x) in X, not merely in W). (P2')
// constrains exactly these pairs, so the monotone-on-W lemma and its
// consequences need this side condition at finite scale.
bool w_steps_are_covering(const FinitePoset& p, const Endomap& f, Elem a0);

struct WStepReport {
  bool conditional_holds = true;  // x in W and x <= f(x) imply f(x) in W
  std::optional<Elem> conditional_witness;
  bool f_closed = true;  // f(W) subset of W outright
  std::optional<Elem> f_closed_witness;
};

WStepReport w_step_closure(const FinitePoset& p, const Endomap& f, Elem a0);

}  // namespace fixlat

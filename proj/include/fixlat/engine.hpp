#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fixlat/endomap.hpp"
#include "fixlat/poset.hpp"

namespace fixlat {

// Ordinal of shape omega*m + n. Ordering is lexicographic on (m, n).
struct OrdinalIndex {
  int limit_blocks = 0;
  int finite_offset = 0;
  auto operator<=>(const OrdinalIndex&) const = default;
  std::string str() const;  // "n" when m == 0, else "ω·m+n"
};

struct TraceEntry {
  OrdinalIndex index;
  Elem value = -1;
  bool is_limit = false;  // entry produced by a limit step
};

struct IterateTrace {
  std::vector<TraceEntry> entries;
  ElemSet distinct = 0;  // the set A accumulated so far
};

enum class OutcomeKind { Converged, UndefinedAtLimit, DivergentPeriodic, BudgetExhausted };

std::string to_string(OutcomeKind k);

struct IterationOutcome {
  OutcomeKind kind = OutcomeKind::BudgetExhausted;
  OrdinalIndex at;            // Converged: smallest k with a_{k+1} = a_k; UndefinedAtLimit: the limit
  Elem value = -1;            // converged value, or the repeated limit value for periodic
  ElemSet prefix_set = 0;     // UndefinedAtLimit: lub-less prefix; periodic: repeated state set
  int period_blocks = 0;      // DivergentPeriodic
  long budget = 0;            // BudgetExhausted
};

struct IterationResult {
  IterationOutcome outcome;
  IterateTrace trace;
};

inline long default_budget(int n) { return 10L * n * n; }

// Transfinite iteration of f from a0: successor steps apply f; when a
// block revisits a value without stabilizing, the limit step takes the
// lub of every iterate seen so far.
IterationResult iterate(const FinitePoset& p, const Endomap& f, Elem a0, long budget);

// Distinct iterates up to the outcome point (the set A at finite scale).
ElemSet compute_A(const FinitePoset& p, const Endomap& f, Elem a0, long budget);

struct SequenceMonotone {
  bool ok = true;
  std::optional<std::pair<OrdinalIndex, OrdinalIndex>> witness;
};

SequenceMonotone sequence_is_monotone(const IterateTrace& t, const FinitePoset& p);

std::string render_trace(const FinitePoset& p, const IterationResult& r);

// On-demand lattice for carriers too large to enumerate. The engine
// only runs ascending (monotone) iterations over these.
template <class T>
struct ImplicitLattice {
  std::function<bool(const T&, const T&)> leq;
  std::function<T(const T&, const T&)> join;
  std::function<bool(const T&, const T&)> equal;
  T bottom;
  std::optional<T> top;
  long height_bound = 0;
};

template <class T>
struct AscentResult {
  T value;
  long iterations = 0;
  bool converged = false;
};

// Kleene iteration over an implicit lattice. Ascent (a_k <= a_{k+1}) is
// asserted every step; a violation means the client's map is not
// monotone and raises a diagnostic.
template <class T>
AscentResult<T> iterate_ascending(const ImplicitLattice<T>& lat,
                                  const std::function<T(const T&)>& f, T a0, long budget) {
  if (budget < 1) throw DomainError("BadBudget", "budget must be >= 1");
  T cur = std::move(a0);
  for (long k = 0; k < budget; ++k) {
    T next = f(cur);
    if (lat.equal(next, cur)) return {std::move(cur), k, true};
    if (!lat.leq(cur, next))
      throw DomainError("AscentViolated",
                        "iteration step " + std::to_string(k) + " was not ascending");
    cur = std::move(next);
  }
  return {std::move(cur), budget, false};
}

}  // namespace fixlat

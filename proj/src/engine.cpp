#include "fixlat/engine.hpp"

#include <sstream>

namespace fixlat {

std::string OrdinalIndex::str() const {
  if (limit_blocks == 0) return std::to_string(finite_offset);
  return "ω·" + std::to_string(limit_blocks) + "+" + std::to_string(finite_offset);
}

std::string to_string(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::Converged: return "CONVERGED";
    case OutcomeKind::UndefinedAtLimit: return "UNDEFINED_AT_LIMIT";
    case OutcomeKind::DivergentPeriodic: return "DIVERGENT_PERIODIC";
    case OutcomeKind::BudgetExhausted: return "BUDGET_EXHAUSTED";
  }
  return "?";
}

IterationResult iterate(const FinitePoset& p, const Endomap& f, Elem a0, long budget) {
  p.check_element(a0);
  if (budget < 1) throw DomainError("BadBudget", "budget must be >= 1");

  IterationResult r;
  int m = 0, n = 0;
  Elem current = a0;
  ElemSet block_seen = 0;
  // (limit value, prefix set) per limit step, for periodicity detection
  std::vector<std::pair<Elem, ElemSet>> limit_states;
  long steps = 0;

  for (;;) {
    r.trace.entries.push_back({{m, n}, current, m > 0 && n == 0});
    r.trace.distinct = set_with(r.trace.distinct, current);
    block_seen = set_with(block_seen, current);

    if (steps >= budget) {
      r.outcome = {OutcomeKind::BudgetExhausted, {m, n}, -1, 0, 0, budget};
      return r;
    }

    Elem next = f(current);
    ++steps;
    if (next == current) {
      r.trace.entries.push_back({{m, n + 1}, next, false});
      r.outcome = {OutcomeKind::Converged, {m, n}, current, 0, 0, 0};
      return r;
    }
    if (set_contains(block_seen, next)) {
      // The block cycles: close it with a limit step over everything seen.
      ElemSet prefix = r.trace.distinct;
      auto lb = p.lub(prefix);
      ++steps;
      if (!lb) {
        r.outcome = {OutcomeKind::UndefinedAtLimit, {m + 1, 0}, -1, prefix, 0, 0};
        return r;
      }
      for (size_t i = 0; i < limit_states.size(); ++i) {
        if (limit_states[i] == std::make_pair(*lb, prefix)) {
          r.outcome = {OutcomeKind::DivergentPeriodic,
                       {static_cast<int>(i) + 1, 0},
                       *lb,
                       prefix,
                       static_cast<int>(limit_states.size() - i),
                       0};
          return r;
        }
      }
      limit_states.emplace_back(*lb, prefix);
      ++m;
      n = 0;
      current = *lb;
      block_seen = 0;
    } else {
      current = next;
      ++n;
    }
  }
}

ElemSet compute_A(const FinitePoset& p, const Endomap& f, Elem a0, long budget) {
  return iterate(p, f, a0, budget).trace.distinct;
}

SequenceMonotone sequence_is_monotone(const IterateTrace& t, const FinitePoset& p) {
  SequenceMonotone r;
  const auto& e = t.entries;
  for (size_t i = 0; i < e.size() && r.ok; ++i)
    for (size_t j = i + 1; j < e.size(); ++j)
      if (!p.leq(e[i].value, e[j].value)) {
        r.ok = false;
        r.witness = {e[i].index, e[j].index};
        break;
      }
  return r;
}

std::string render_trace(const FinitePoset& p, const IterationResult& r) {
  std::ostringstream os;
  for (const auto& e : r.trace.entries)
    os << e.index.str() << ": " << p.name(e.value) << "\n";
  const auto& o = r.outcome;
  os << to_string(o.kind);
  switch (o.kind) {
    case OutcomeKind::Converged:
      os << " at " << o.at.str() << " value " << p.name(o.value);
      break;
    case OutcomeKind::UndefinedAtLimit:
      os << " at " << o.at.str() << " prefix " << render_set(p, o.prefix_set);
      break;
    case OutcomeKind::DivergentPeriodic:
      os << " first limit " << o.at.str() << " value " << p.name(o.value) << " period "
         << o.period_blocks;
      break;
    case OutcomeKind::BudgetExhausted:
      os << " budget " << o.budget;
      break;
  }
  os << "\n";
  return os.str();
}

}  // namespace fixlat

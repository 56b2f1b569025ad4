#include "fixlat/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace fixlat {

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = {
      TheoremId::MON_EXT,      TheoremId::A_MONOTONE,   TheoremId::HARTOGS_STAB,
      TheoremId::ABIAN_W,      TheoremId::LUBW_FIX,     TheoremId::P2P_MONO_W,
      TheoremId::W_SUB_N,      TheoremId::N_SUB_W,      TheoremId::A_SUB_N,
      TheoremId::N_SUB_A,      TheoremId::NWA_EQ,       TheoremId::BOURBAKI_EXT,
      TheoremId::KURATOWSKI_LEAST, TheoremId::TARSKI_CL, TheoremId::KLEENE_OMEGA,
      TheoremId::WARD_SEMI,    TheoremId::MARKOWSKY_CC, TheoremId::COUSOT_BOUND,
      TheoremId::DEVIDE_JOIN,  TheoremId::JOIN_REMARK,  TheoremId::SALINAS_P2,
      TheoremId::SALINAS_MUB,  TheoremId::STRICT_ON_W,
  };
  return ids;
}

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::MON_EXT: return "MON_EXT";
    case TheoremId::A_MONOTONE: return "A_MONOTONE";
    case TheoremId::HARTOGS_STAB: return "HARTOGS_STAB";
    case TheoremId::ABIAN_W: return "ABIAN_W";
    case TheoremId::LUBW_FIX: return "LUBW_FIX";
    case TheoremId::P2P_MONO_W: return "P2P_MONO_W";
    case TheoremId::W_SUB_N: return "W_SUB_N";
    case TheoremId::N_SUB_W: return "N_SUB_W";
    case TheoremId::A_SUB_N: return "A_SUB_N";
    case TheoremId::N_SUB_A: return "N_SUB_A";
    case TheoremId::NWA_EQ: return "NWA_EQ";
    case TheoremId::BOURBAKI_EXT: return "BOURBAKI_EXT";
    case TheoremId::KURATOWSKI_LEAST: return "KURATOWSKI_LEAST";
    case TheoremId::TARSKI_CL: return "TARSKI_CL";
    case TheoremId::KLEENE_OMEGA: return "KLEENE_OMEGA";
    case TheoremId::WARD_SEMI: return "WARD_SEMI";
    case TheoremId::MARKOWSKY_CC: return "MARKOWSKY_CC";
    case TheoremId::COUSOT_BOUND: return "COUSOT_BOUND";
    case TheoremId::DEVIDE_JOIN: return "DEVIDE_JOIN";
    case TheoremId::JOIN_REMARK: return "JOIN_REMARK";
    case TheoremId::SALINAS_P2: return "SALINAS_P2";
    case TheoremId::SALINAS_MUB: return "SALINAS_MUB";
    case TheoremId::STRICT_ON_W: return "STRICT_ON_W";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_string(const std::string& s) {
  for (TheoremId id : all_theorems())
    if (to_string(id) == s) return id;
  return std::nullopt;
}

bool requires_g(TheoremId id) {
  return id == TheoremId::DEVIDE_JOIN || id == TheoremId::JOIN_REMARK;
}

const std::vector<std::string>& hypothesis_names(TheoremId id) {
  static const std::map<TheoremId, std::vector<std::string>> names = {
      {TheoremId::MON_EXT, {"well_ordered", "strictly_monotone"}},
      {TheoremId::A_MONOTONE, {"p1", "p2_on_A"}},
      {TheoremId::HARTOGS_STAB, {"sequence_monotone"}},
      {TheoremId::ABIAN_W, {}},
      {TheoremId::LUBW_FIX, {"strictly_inductive", "p1", "monotone_on_W"}},
      {TheoremId::P2P_MONO_W, {"p2_prime", "w_steps_covering"}},
      {TheoremId::W_SUB_N, {}},
      {TheoremId::N_SUB_W, {"strictly_inductive", "p1", "monotone_on_W"}},
      {TheoremId::A_SUB_N, {"a_defined"}},
      {TheoremId::N_SUB_A, {"a_defined", "sequence_monotone"}},
      {TheoremId::NWA_EQ, {"strictly_inductive", "p1", "p2_prime", "w_steps_covering"}},
      {TheoremId::BOURBAKI_EXT, {"strictly_inductive", "extensive"}},
      {TheoremId::KURATOWSKI_LEAST, {"strictly_inductive", "extensive", "monotone"}},
      {TheoremId::TARSKI_CL, {"complete_lattice", "monotone"}},
      {TheoremId::KLEENE_OMEGA, {"complete_lattice", "monotone", "a0_is_bottom"}},
      {TheoremId::WARD_SEMI, {"complete_semilattice", "monotone"}},
      {TheoremId::MARKOWSKY_CC, {"chain_complete", "monotone"}},
      {TheoremId::COUSOT_BOUND, {"complete_lattice", "monotone"}},
      {TheoremId::DEVIDE_JOIN, {"complete_lattice", "g_monotone"}},
      {TheoremId::JOIN_REMARK, {"complete_lattice", "g_monotone"}},
      {TheoremId::SALINAS_P2, {"strictly_inductive", "p1", "p2"}},
      {TheoremId::SALINAS_MUB, {"chain_ub_minimal", "p1", "p2", "glb_with_image"}},
      {TheoremId::STRICT_ON_W, {"lub_W_exists"}},
  };
  return names.at(id);
}

std::optional<Elem> oracle_least_fixpoint(const FinitePoset& p, const Endomap& f) {
  ElemSet fix = 0;
  for (Elem x = 0; x < p.size(); ++x)
    if (f(x) == x) fix = set_with(fix, x);
  return p.least_of(fix);
}

std::optional<Elem> oracle_least_fixpoint_geq(const FinitePoset& p, const Endomap& f, Elem a0) {
  ElemSet fix = 0;
  for (Elem x = 0; x < p.size(); ++x)
    if (f(x) == x && p.leq(a0, x)) fix = set_with(fix, x);
  return p.least_of(fix);
}

namespace {

// lub of s taken inside the subposet carried by `carrier`
std::optional<Elem> lub_within(const FinitePoset& p, ElemSet carrier, ElemSet s) {
  ElemSet ub = carrier;
  for_each_element(s, [&](Elem x) { ub &= p.up_set(x); });
  return p.least_of(ub);
}

bool all_subset_lubs_within(const FinitePoset& p, ElemSet carrier, bool include_empty) {
  const int sz = set_size(carrier);
  if (sz <= 16) {
    if (include_empty && !p.least_of(carrier)) return false;
    for (ElemSet s = carrier; s != 0; s = (s - 1) & carrier)
      if (!lub_within(p, carrier, s)) return false;
    return true;
  }
  // large carriers: pairwise joins + extrema are equivalent at finite scale
  if (!p.least_of(carrier) && include_empty) return false;
  if (!p.greatest_of(carrier)) return false;
  auto v = set_to_vector(carrier);
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (!lub_within(p, carrier, set_with(set_single(v[i]), v[j]))) return false;
  return true;
}

}  // namespace

bool subset_is_complete_lattice(const FinitePoset& p, ElemSet s) {
  return s != 0 && all_subset_lubs_within(p, s, true);
}

bool subset_is_complete_semilattice(const FinitePoset& p, ElemSet s) {
  return s != 0 && all_subset_lubs_within(p, s, false);
}

bool subset_is_chain_complete(const FinitePoset& p, ElemSet s) {
  // A non-empty finite chain peaks at its maximum, which is the lub
  // inside the subset; only the empty chain constrains anything, and it
  // demands a least element.
  return s != 0 && p.least_of(s).has_value();
}

namespace {

using Hyps = std::vector<std::pair<std::string, bool>>;
using Concl = std::function<std::pair<bool, std::string>()>;

struct Eval {
  Hyps hyps;
  Concl conclusion;
};

std::string pair_witness(const FinitePoset& p, Elem x, Elem y) {
  return "(" + p.name(x) + "," + p.name(y) + ")";
}

Endomap join_with_const(const FinitePoset& p, const Endomap& g, Elem a0) {
  std::vector<Elem> m(p.size());
  for (Elem x = 0; x < p.size(); ++x) {
    auto j = p.lub(set_with(set_single(a0), g(x)));
    if (!j) throw unsupported_carrier("join a0 v g(x) undefined at x=" + p.name(x));
    m[x] = *j;
  }
  return Endomap::build(p, std::move(m));
}

Endomap join_with_identity(const FinitePoset& p, const Endomap& g) {
  std::vector<Elem> m(p.size());
  for (Elem x = 0; x < p.size(); ++x) {
    auto j = p.lub(set_with(set_single(x), g(x)));
    if (!j) throw unsupported_carrier("join x v g(x) undefined at x=" + p.name(x));
    m[x] = *j;
  }
  return Endomap::build(p, std::move(m));
}

bool traces_equal(const IterateTrace& a, const IterateTrace& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (size_t i = 0; i < a.entries.size(); ++i)
    if (a.entries[i].index != b.entries[i].index || a.entries[i].value != b.entries[i].value)
      return false;
  return true;
}

Eval make_eval(TheoremId id, const FinitePoset& p, const Endomap& f, Elem a0,
               const std::optional<Endomap>& g, long budget) {
  const auto cls = classify_poset(p);
  const int n = p.size();

  switch (id) {
    case TheoremId::MON_EXT: {
      auto mc = classify_map(f);
      return {{{"well_ordered", cls.is_well_ordered}, {"strictly_monotone", mc.strictly_monotone}},
              [&p, &f]() -> std::pair<bool, std::string> {
                for (Elem x = 0; x < p.size(); ++x)
                  if (!p.leq(x, f(x))) return {false, "f not extensive at " + p.name(x)};
                return {true, ""};
              }};
    }
    case TheoremId::A_MONOTONE: {
      auto it = iterate(p, f, a0, budget);
      bool p1 = satisfies_p1(f, a0);
      bool p2a = satisfies_p2(f, it.trace.distinct);
      return {{{"p1", p1}, {"p2_on_A", p2a}}, [&p, it = std::move(it)]() -> std::pair<bool, std::string> {
                auto m = sequence_is_monotone(it.trace, p);
                if (m.ok) return {true, ""};
                return {false, "indices " + m.witness->first.str() + " < " + m.witness->second.str()};
              }};
    }
    case TheoremId::HARTOGS_STAB: {
      auto it = iterate(p, f, a0, budget);
      bool mono = sequence_is_monotone(it.trace, p).ok;
      return {{{"sequence_monotone", mono}}, [it = std::move(it)]() -> std::pair<bool, std::string> {
                if (it.outcome.kind == OutcomeKind::Converged) return {true, ""};
                return {false, "outcome " + to_string(it.outcome.kind)};
              }};
    }
    case TheoremId::ABIAN_W: {
      return {{}, [&p, &f, a0]() -> std::pair<bool, std::string> {
                ElemSet w = compute_W(p, f, a0);
                if (!p.is_chain(w)) return {false, "W not totally ordered"};
                auto least = p.least_of(w);
                if (!least || *least != a0) return {false, "least of W is not a0"};
                auto xi = p.lub(w);
                if (xi) {
                  auto chk = is_a0_chain(p, f, a0, w);
                  if (!set_contains(w, *xi)) {
                    // lub lies outside W: the a0-chain clause applies to W itself
                    return {false, "lub(W) outside W"};
                  }
                  if (!chk.ok) return {false, "W not an a0-chain: " + chk.failed_clause};
                  if (p.lt(*xi, f(*xi))) return {false, "xi < f(xi)"};
                }
                return {true, ""};
              }};
    }
    case TheoremId::LUBW_FIX: {
      ElemSet w = compute_W(p, f, a0);
      return {{{"strictly_inductive", cls.is_strictly_inductive},
               {"p1", satisfies_p1(f, a0)},
               {"monotone_on_W", monotone_on(f, w).ok}},
              [&p, &f, w]() -> std::pair<bool, std::string> {
                auto xi = p.lub(w);
                if (!xi) return {false, "lub(W) missing"};
                if (f(*xi) != *xi) return {false, "f(lub(W)) != lub(W)"};
                return {true, ""};
              }};
    }
    case TheoremId::P2P_MONO_W: {
      // (P2') only constrains pairs (x, f(x)) that are covering in the
      // carrier, so the lemma needs every W-step to be one.
      return {{{"p2_prime", satisfies_p2_prime(f)},
               {"w_steps_covering", w_steps_are_covering(p, f, a0)}},
              [&p, &f, a0]() -> std::pair<bool, std::string> {
                auto m = monotone_on(f, compute_W(p, f, a0));
                if (m.ok) return {true, ""};
                return {false, "pair " + pair_witness(p, m.witness->first, m.witness->second)};
              }};
    }
    case TheoremId::W_SUB_N: {
      return {{}, [&p, &f, a0]() -> std::pair<bool, std::string> {
                ElemSet w = compute_W(p, f, a0);
                ElemSet nn = compute_N(p, f, a0).set;
                if ((w & ~nn) == 0) return {true, ""};
                return {false, "W \\ N = " + render_set(p, w & ~nn)};
              }};
    }
    case TheoremId::N_SUB_W: {
      ElemSet w = compute_W(p, f, a0);
      return {{{"strictly_inductive", cls.is_strictly_inductive},
               {"p1", satisfies_p1(f, a0)},
               {"monotone_on_W", monotone_on(f, w).ok}},
              [&p, &f, a0, w]() -> std::pair<bool, std::string> {
                ElemSet nn = compute_N(p, f, a0).set;
                if ((nn & ~w) == 0) return {true, ""};
                return {false, "N \\ W = " + render_set(p, nn & ~w)};
              }};
    }
    case TheoremId::A_SUB_N:
    case TheoremId::N_SUB_A: {
      auto it = iterate(p, f, a0, budget);
      bool a_defined = it.outcome.kind == OutcomeKind::Converged ||
                       it.outcome.kind == OutcomeKind::DivergentPeriodic;
      Hyps h{{"a_defined", a_defined}};
      if (id == TheoremId::N_SUB_A)
        h.emplace_back("sequence_monotone", sequence_is_monotone(it.trace, p).ok);
      ElemSet a = it.trace.distinct;
      bool a_sub_n = id == TheoremId::A_SUB_N;
      return {std::move(h), [&p, &f, a0, a, a_sub_n]() -> std::pair<bool, std::string> {
                ElemSet nn = compute_N(p, f, a0).set;
                ElemSet diff = a_sub_n ? (a & ~nn) : (nn & ~a);
                if (diff == 0) return {true, ""};
                return {false, "difference " + render_set(p, diff)};
              }};
    }
    case TheoremId::NWA_EQ: {
      return {{{"strictly_inductive", cls.is_strictly_inductive},
               {"p1", satisfies_p1(f, a0)},
               {"p2_prime", satisfies_p2_prime(f)},
               {"w_steps_covering", w_steps_are_covering(p, f, a0)}},
              [&p, &f, a0, budget]() -> std::pair<bool, std::string> {
                auto sets = compare_ANW(p, f, a0, budget);
                if (sets.N != sets.W)
                  return {false, "N=" + render_set(p, sets.N) + " differs from W=" +
                                     render_set(p, sets.W)};
                if (sets.outcome.kind != OutcomeKind::Converged)
                  return {false, "outcome " + to_string(sets.outcome.kind)};
                if (sets.all_equal != Tri::True)
                  return {false, "A=" + render_set(p, *sets.A) + " N=" + render_set(p, sets.N) +
                                     " W=" + render_set(p, sets.W)};
                auto ln = p.lub(sets.N);
                if (!ln || *ln != sets.outcome.value) return {false, "lub(N) differs"};
                if (f(sets.outcome.value) != sets.outcome.value)
                  return {false, "converged value not fixed"};
                if (!p.leq(a0, sets.outcome.value))
                  return {false, "converged value below a0"};
                // The "least fixpoint >= a0" reading holds when f is
                // monotone everywhere; with only local (P2') conditions
                // an incomparable or smaller fixpoint may exist.
                if (is_monotone(f)) {
                  auto least = oracle_least_fixpoint_geq(p, f, a0);
                  if (!least || *least != sets.outcome.value)
                    return {false, "converged value is not the least fixpoint >= a0"};
                }
                return {true, ""};
              }};
    }
    case TheoremId::BOURBAKI_EXT: {
      return {{{"strictly_inductive", cls.is_strictly_inductive}, {"extensive", is_extensive(f)}},
              [&p, &f, a0, budget]() -> std::pair<bool, std::string> {
                auto it = iterate(p, f, a0, budget);
                if (it.outcome.kind != OutcomeKind::Converged)
                  return {false, "outcome " + to_string(it.outcome.kind)};
                if (f(it.outcome.value) != it.outcome.value) return {false, "value not fixed"};
                ElemSet nn = compute_N(p, f, a0).set;
                auto ln = p.lub(nn);
                if (!ln) return {false, "lub(N) missing"};
                if (f(*ln) != *ln) return {false, "lub(N) not fixed"};
                return {true, ""};
              }};
    }
    case TheoremId::KURATOWSKI_LEAST: {
      return {{{"strictly_inductive", cls.is_strictly_inductive},
               {"extensive", is_extensive(f)},
               {"monotone", is_monotone(f)}},
              [&p, &f, a0, budget]() -> std::pair<bool, std::string> {
                auto least = oracle_least_fixpoint_geq(p, f, a0);
                if (!least) return {false, "no least fixpoint >= a0"};
                ElemSet nn = compute_N(p, f, a0).set;
                auto ln = p.lub(nn);
                if (!ln || *ln != *least) return {false, "lub(N) is not the least fixpoint >= a0"};
                auto it = iterate(p, f, a0, budget);
                if (it.outcome.kind != OutcomeKind::Converged || it.outcome.value != *least)
                  return {false, "iteration does not reach it"};
                return {true, ""};
              }};
    }
    case TheoremId::TARSKI_CL: {
      return {{{"complete_lattice", cls.is_complete_lattice}, {"monotone", is_monotone(f)}},
              [&p, &f]() -> std::pair<bool, std::string> {
                auto fs = fixpoint_sets(f);
                if (fs.fix == 0) return {false, "fix(f) empty"};
                if (!subset_is_complete_lattice(p, fs.fix))
                  return {false, "fix(f) not a complete lattice"};
                auto gp = p.glb(fs.post);
                if (!gp) return {false, "glb(post(f)) missing"};
                if (f(*gp) != *gp) return {false, "glb(post(f)) not fixed"};
                auto least = oracle_least_fixpoint(p, f);
                if (!least || *least != *gp)
                  return {false, "glb(post(f)) is not the least fixpoint"};
                return {true, ""};
              }};
    }
    case TheoremId::KLEENE_OMEGA: {
      auto bot = p.bottom();
      return {{{"complete_lattice", cls.is_complete_lattice},
               {"monotone", is_monotone(f)},
               {"a0_is_bottom", bot && *bot == a0}},
              [&p, &f, a0, budget, n]() -> std::pair<bool, std::string> {
                auto it = iterate(p, f, a0, budget);
                if (it.outcome.kind != OutcomeKind::Converged)
                  return {false, "outcome " + to_string(it.outcome.kind)};
                if (it.outcome.at.limit_blocks != 0) return {false, "needed a limit step"};
                if (it.outcome.at.finite_offset > n - 1)
                  return {false, "took more than |X|-1 successor steps"};
                return {true, ""};
              }};
    }
    case TheoremId::WARD_SEMI: {
      return {{{"complete_semilattice", cls.is_complete_semilattice}, {"monotone", is_monotone(f)}},
              [&p, &f]() -> std::pair<bool, std::string> {
                auto fs = fixpoint_sets(f);
                if (fs.fix == 0) return {false, "fix(f) empty"};
                if (!subset_is_complete_semilattice(p, fs.fix))
                  return {false, "fix(f) not a complete semilattice"};
                return {true, ""};
              }};
    }
    case TheoremId::MARKOWSKY_CC: {
      return {{{"chain_complete", cls.is_chain_complete}, {"monotone", is_monotone(f)}},
              [&p, &f]() -> std::pair<bool, std::string> {
                auto fs = fixpoint_sets(f);
                if (!subset_is_chain_complete(p, fs.fix))
                  return {false, "fix(f) not chain-complete"};
                return {true, ""};
              }};
    }
    case TheoremId::COUSOT_BOUND: {
      return {{{"complete_lattice", cls.is_complete_lattice}, {"monotone", is_monotone(f)}},
              [&p, &f, a0, budget]() -> std::pair<bool, std::string> {
                auto it = iterate(p, f, a0, budget);
                for (Elem y = 0; y < p.size(); ++y) {
                  if (!p.leq(f(y), y) || !p.leq(a0, y)) continue;
                  for (const auto& e : it.trace.entries)
                    if (!p.leq(e.value, y))
                      return {false, "iterate " + p.name(e.value) +
                                         " above post-fixpoint " + p.name(y)};
                }
                auto fs = fixpoint_sets(f);
                if (!subset_is_complete_lattice(p, fs.pre))
                  return {false, "pre(f) not a complete lattice"};
                if (!subset_is_complete_lattice(p, fs.post))
                  return {false, "post(f) not a complete lattice"};
                if (p.leq(a0, f(a0))) {
                  auto least = oracle_least_fixpoint_geq(p, f, a0);
                  if (it.outcome.kind != OutcomeKind::Converged || !least ||
                      it.outcome.value != *least)
                    return {false, "ascending start does not converge to least fixpoint >= a0"};
                }
                return {true, ""};
              }};
    }
    case TheoremId::DEVIDE_JOIN: {
      if (!g) throw missing_g("DEVIDE_JOIN needs a map g");
      return {{{"complete_lattice", cls.is_complete_lattice}, {"g_monotone", is_monotone(*g)}},
              [&p, &g, a0, budget]() -> std::pair<bool, std::string> {
                Endomap fd = join_with_const(p, *g, a0);
                auto itf = iterate(p, fd, a0, budget);
                if (itf.outcome.kind != OutcomeKind::Converged)
                  return {false, "derived f does not stabilize"};
                if (p.leq(a0, (*g)(a0))) {
                  for (Elem x = 0; x < p.size(); ++x) {
                    if (!p.leq(a0, x)) continue;
                    if ((fd(x) == x) != ((*g)(x) == x))
                      return {false, "fixpoints >= a0 differ at " + p.name(x)};
                  }
                  auto itg = iterate(p, *g, a0, budget);
                  if (!traces_equal(itf.trace, itg.trace))
                    return {false, "iterates of f and g differ"};
                }
                return {true, ""};
              }};
    }
    case TheoremId::JOIN_REMARK: {
      if (!g) throw missing_g("JOIN_REMARK needs a map g");
      return {{{"complete_lattice", cls.is_complete_lattice}, {"g_monotone", is_monotone(*g)}},
              [&p, &g, a0, budget]() -> std::pair<bool, std::string> {
                Endomap fj = join_with_identity(p, *g);
                if (!is_monotone(fj)) return {false, "x v g(x) not monotone"};
                if (!is_extensive(fj)) return {false, "x v g(x) not extensive"};
                auto fsg = fixpoint_sets(*g);
                auto fsf = fixpoint_sets(fj);
                for (Elem x = 0; x < p.size(); ++x)
                  if (p.leq(x, (*g)(x)) && fj(x) != (*g)(x))
                    return {false, "f and g differ on pre(g) at " + p.name(x)};
                if ((fsg.fix & ~fsf.fix) != 0) return {false, "fix(g) not within fix(f)"};
                if (fsf.fix != fsg.post) return {false, "fix(f) != post(g)"};
                auto lf = oracle_least_fixpoint(p, fj);
                auto lg = oracle_least_fixpoint(p, *g);
                if (!lf || !lg || *lf != *lg) return {false, "least fixpoints differ"};
                if (p.leq(a0, (*g)(a0))) {
                  auto itf = iterate(p, fj, a0, budget);
                  auto itg = iterate(p, *g, a0, budget);
                  if (!traces_equal(itf.trace, itg.trace))
                    return {false, "iterates of f and g differ"};
                }
                return {true, ""};
              }};
    }
    case TheoremId::SALINAS_P2: {
      return {{{"strictly_inductive", cls.is_strictly_inductive},
               {"p1", satisfies_p1(f, a0)},
               {"p2", satisfies_p2(f)}},
              [&p, &f, a0, budget]() -> std::pair<bool, std::string> {
                auto it = iterate(p, f, a0, budget);
                if (it.outcome.kind != OutcomeKind::Converged)
                  return {false, "outcome " + to_string(it.outcome.kind)};
                auto fs = fixpoint_sets(f);
                if (fs.fix == 0) return {false, "fix(f) empty"};
                // Pasini: fix(f) has a maximal element
                bool maximal = false;
                for_each_element(fs.fix, [&](Elem x) {
                  bool dominated = false;
                  for_each_element(fs.fix, [&](Elem y) {
                    if (p.lt(x, y)) dominated = true;
                  });
                  if (!dominated) maximal = true;
                });
                if (!maximal) return {false, "fix(f) has no maximal element"};
                return {true, ""};
              }};
    }
    case TheoremId::SALINAS_MUB: {
      // A finite chain's upper bounds are those of its maximum, and any
      // non-empty finite set has a minimal element.
      bool ub_minimal = true;
      for (Elem x = 0; x < n; ++x)
        if (p.up_set(x) == 0) ub_minimal = false;
      bool glbs = true;
      for (Elem x = 0; x < n; ++x)
        if (!p.glb(set_with(set_single(x), f(x)))) glbs = false;
      return {{{"chain_ub_minimal", ub_minimal},
               {"p1", satisfies_p1(f, a0)},
               {"p2", satisfies_p2(f)},
               {"glb_with_image", glbs}},
              [&f]() -> std::pair<bool, std::string> {
                if (fixpoint_sets(f).fix == 0) return {false, "fix(f) empty"};
                return {true, ""};
              }};
    }
    case TheoremId::STRICT_ON_W: {
      ElemSet w = compute_W(p, f, a0);
      auto xi = p.lub(w);
      return {{{"lub_W_exists", xi.has_value()}},
              [&p, &f, w, xi]() -> std::pair<bool, std::string> {
                ElemSet v = w & ~set_single(*xi);
                auto failed = std::pair<bool, std::string>{true, ""};
                for_each_element(v, [&](Elem x) {
                  if (!p.lt(x, f(x)))
                    failed = {false, "not strictly extensive at " + p.name(x)};
                  for_each_element(v, [&](Elem y) {
                    if (p.lt(x, y) && !p.lt(f(x), f(y)))
                      failed = {false, "not strictly monotone at " + pair_witness(p, x, y)};
                  });
                });
                return failed;
              }};
    }
  }
  throw DomainError("BadTheorem", "unhandled theorem id");
}

}  // namespace

Verdict verify(TheoremId id, const Instance& inst, long budget,
               const std::set<std::string>& dropped) {
  const auto& known = hypothesis_names(id);
  for (const auto& d : dropped)
    if (std::find(known.begin(), known.end(), d) == known.end())
      throw unknown_hypothesis("'" + d + "' is not a hypothesis of " + to_string(id));

  const FinitePoset& p = inst.poset;
  p.check_element(inst.a0);
  Endomap f = inst.f();
  std::optional<Endomap> g = inst.g();
  if (requires_g(id) && !g) throw missing_g(to_string(id) + " needs a map g");

  Eval ev = make_eval(id, p, f, inst.a0, g, budget);

  Verdict v;
  v.theorem = id;
  v.hypotheses_hold = true;
  for (const auto& [name, held] : ev.hyps)
    if (!dropped.count(name) && !held) v.hypotheses_hold = false;
  if (!v.hypotheses_hold) {
    v.status = VerdictStatus::Vacuous;
    return v;
  }
  auto [ok, witness] = ev.conclusion();
  v.conclusion_holds = ok;
  v.witness = witness;
  v.status = ok ? VerdictStatus::Pass : VerdictStatus::Refuted;
  return v;
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Pass: return "PASS";
    case VerdictStatus::Vacuous: return "VACUOUS";
    case VerdictStatus::Refuted: return "REFUTED";
  }
  return "?";
}

}  // namespace fixlat

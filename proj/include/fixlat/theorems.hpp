#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fixlat/chain_sets.hpp"
#include "fixlat/engine.hpp"

namespace fixlat {

enum class TheoremId {
  MON_EXT,
  A_MONOTONE,
  HARTOGS_STAB,
  ABIAN_W,
  LUBW_FIX,
  P2P_MONO_W,
  W_SUB_N,
  N_SUB_W,
  A_SUB_N,
  N_SUB_A,
  NWA_EQ,
  BOURBAKI_EXT,
  KURATOWSKI_LEAST,
  TARSKI_CL,
  KLEENE_OMEGA,
  WARD_SEMI,
  MARKOWSKY_CC,
  COUSOT_BOUND,
  DEVIDE_JOIN,
  JOIN_REMARK,
  SALINAS_P2,
  SALINAS_MUB,
  STRICT_ON_W,
};

const std::vector<TheoremId>& all_theorems();
std::string to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(const std::string& s);
bool requires_g(TheoremId id);
// Stable hypothesis names, in evaluation order (the --drop contract).
const std::vector<std::string>& hypothesis_names(TheoremId id);

enum class VerdictStatus { Pass, Vacuous, Refuted };
std::string to_string(VerdictStatus s);

struct Verdict {
  TheoremId theorem;
  bool hypotheses_hold = false;
  bool conclusion_holds = false;
  VerdictStatus status = VerdictStatus::Vacuous;
  std::string witness;  // failing clause / counterexample, empty on PASS
};

struct Instance {
  FinitePoset poset;
  std::vector<Elem> f_map;
  Elem a0 = 0;
  std::optional<std::vector<Elem>> g_map;

  Endomap f() const { return Endomap::build(poset, f_map); }
  std::optional<Endomap> g() const {
    if (!g_map) return std::nullopt;
    return Endomap::build(poset, *g_map);
  }
};

// Replay one theorem on one instance. Dropped hypotheses are removed
// from the premise conjunction (for falsification searches); an unknown
// name raises UnknownHypothesis. DEVIDE_JOIN / JOIN_REMARK build their
// map from g and raise UnsupportedCarrier when a needed join does not
// exist in the carrier.
Verdict verify(TheoremId id, const Instance& inst, long budget,
               const std::set<std::string>& dropped = {});

// Exhaustive least-fixpoint oracles (direct scans, independent of the
// iteration engine).
std::optional<Elem> oracle_least_fixpoint(const FinitePoset& p, const Endomap& f);
std::optional<Elem> oracle_least_fixpoint_geq(const FinitePoset& p, const Endomap& f, Elem a0);

// Completeness of a subset in the induced order.
bool subset_is_complete_lattice(const FinitePoset& p, ElemSet s);
bool subset_is_complete_semilattice(const FinitePoset& p, ElemSet s);
bool subset_is_chain_complete(const FinitePoset& p, ElemSet s);

}  // namespace fixlat

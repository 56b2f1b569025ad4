#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fixlat/error.hpp"

namespace fixlat {

using Elem = int;

// Subsets are bitmasks; the element cap keeps them in one word.
using ElemSet = std::uint64_t;
inline constexpr int kMaxElements = 64;

inline bool set_contains(ElemSet s, Elem x) { return (s >> x) & 1u; }
inline ElemSet set_with(ElemSet s, Elem x) { return s | (ElemSet{1} << x); }
inline ElemSet set_single(Elem x) { return ElemSet{1} << x; }
inline int set_size(ElemSet s) { return __builtin_popcountll(s); }

template <class Fn>
void for_each_element(ElemSet s, Fn&& fn) {
  while (s != 0) {
    Elem x = __builtin_ctzll(s);
    fn(x);
    s &= s - 1;
  }
}

std::vector<Elem> set_to_vector(ElemSet s);

enum class RelationKind { Hasse, Full };

// Explicit finite partial order. Immutable after construction; all
// queries are pure, so instances may be shared freely across threads.
class FinitePoset {
public:
  // `pairs` are (lower, upper). Hasse input is closed reflexively and
  // transitively; Full input must already satisfy the axioms.
  static FinitePoset build(std::vector<std::string> names,
                           const std::vector<std::pair<std::string, std::string>>& pairs,
                           RelationKind kind);
  static FinitePoset build_indexed(int n, const std::vector<std::pair<Elem, Elem>>& pairs,
                                   RelationKind kind);
  // Order given as a dense n*n row-major leq matrix (Full semantics).
  static FinitePoset from_matrix(int n, std::vector<std::uint8_t> leq);

  int size() const { return n_; }
  const std::string& name(Elem x) const { return names_[x]; }
  Elem index_of(std::string_view name) const;  // throws UnknownElement
  void check_element(Elem x) const;

  bool leq(Elem x, Elem y) const { return leq_[x * n_ + y] != 0; }
  bool lt(Elem x, Elem y) const { return x != y && leq(x, y); }
  bool comparable(Elem x, Elem y) const { return leq(x, y) || leq(y, x); }
  // Covering relation x -< y: x < y with nothing strictly between.
  bool covers(Elem x, Elem y) const { return covers_[x * n_ + y] != 0; }
  std::vector<std::pair<Elem, Elem>> cover_pairs() const;

  ElemSet all() const { return n_ == 64 ? ~ElemSet{0} : (ElemSet{1} << n_) - 1; }
  ElemSet up_set(Elem x) const { return up_[x]; }    // {y | x <= y}
  ElemSet down_set(Elem x) const { return down_[x]; }  // {y | y <= x}

  // lub(empty) is the bottom element when one exists, NONE otherwise.
  std::optional<Elem> lub(ElemSet s) const;
  std::optional<Elem> glb(ElemSet s) const;
  std::optional<Elem> bottom() const;
  std::optional<Elem> top() const;

  ElemSet upper_bounds(ElemSet s) const;
  ElemSet lower_bounds(ElemSet s) const;
  std::optional<Elem> least_of(ElemSet s) const;
  std::optional<Elem> greatest_of(ElemSet s) const;

  bool is_chain(ElemSet s) const;

  FinitePoset reversed() const;

private:
  FinitePoset() = default;
  void finish_construction();  // derives covers/up/down, checks axioms done by callers

  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;     // dense n*n
  std::vector<std::uint8_t> covers_;  // transitive reduction of <
  std::vector<ElemSet> up_, down_;
};

struct PosetClassification {
  bool is_lattice = false;
  bool is_complete_lattice = false;
  bool is_complete_semilattice = false;  // every non-empty subset has a lub
  bool is_chain_complete = false;        // every chain, including the empty one
  bool is_strictly_inductive = false;    // always true on finite non-empty posets
  bool is_well_ordered = false;          // total order
  bool has_bottom = false;
  bool has_top = false;
  bool decided_exhaustively = false;  // subset flags scanned over the full power set
};

// Flags come from exhaustive subset/chain scans when size <= exhaustive_bound,
// otherwise from pairwise joins/meets (equivalent on finite carriers).
PosetClassification classify_poset(const FinitePoset& p, int exhaustive_bound = 12);

// Every totally ordered subset with at least min_size elements, each once.
void for_each_chain(const FinitePoset& p, int min_size,
                    const std::function<void(ElemSet)>& fn);
std::vector<ElemSet> enumerate_chains(const FinitePoset& p, int min_size);

std::string render_set(const FinitePoset& p, ElemSet s);

}  // namespace fixlat

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "fixlat/generate.hpp"
#include "fixlat/theorems.hpp"

namespace fixlat {

struct WitnessRecord {
  Instance inst;
  TheoremId theorem;
  std::string witness;
  // provenance: either a seed (random source) or -1 with an ordinal
  // position in the exhaustive stream
  std::int64_t seed = -1;
  long position = 0;
  int size = 0;
  Shape shape = Shape::RandomOrder;
  bool exhaustive = false;
};

struct SweepStats {
  long instances = 0;
  long verdicts = 0;
  long passed = 0;
  long vacuous = 0;
  long refuted = 0;
  std::vector<WitnessRecord> refutations;  // deterministic order

  void absorb(const SweepStats& o);
};

// Every theorem over every labeled instance with |X| <= max_size
// (g enumerated where a theorem needs it). The parallel kernel and the
// serial reference produce identical stats; results merge in instance
// order either way.
SweepStats sweep_exhaustive(int max_size, bool parallel);

// verify-all over seeded random instances. Sizes cycle over
// [min_size, max_size], shapes alternate RANDOM_ORDER / RANDOM_LATTICE.
SweepStats sweep_random(std::uint64_t seed0, int count, int min_size, int max_size,
                        bool parallel, int lattice_cap = 24);

struct SearchReport {
  std::vector<WitnessRecord> witnesses;
  long examined = 0;
};

// Falsification search: weakened hypotheses hold, conclusion fails.
// With an empty dropped set this is FULL mode (witnesses = refutations,
// of which the theorems guarantee there are none).
SearchReport search_exhaustive(TheoremId id, const std::set<std::string>& dropped,
                               int max_size, int max_witnesses = 5);
SearchReport search_random(TheoremId id, const std::set<std::string>& dropped,
                           std::uint64_t seed0, int count, int size, Shape shape,
                           int max_witnesses = 5);

}  // namespace fixlat

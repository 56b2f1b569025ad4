#include "fixlat/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fixlat {

void SweepStats::absorb(const SweepStats& o) {
  instances += o.instances;
  verdicts += o.verdicts;
  passed += o.passed;
  vacuous += o.vacuous;
  refuted += o.refuted;
  refutations.insert(refutations.end(), o.refutations.begin(), o.refutations.end());
}

namespace {

void count(SweepStats& st, const Verdict& v) {
  ++st.verdicts;
  switch (v.status) {
    case VerdictStatus::Pass: ++st.passed; break;
    case VerdictStatus::Vacuous: ++st.vacuous; break;
    case VerdictStatus::Refuted: ++st.refuted; break;
  }
}

// All theorems on one labeled poset, all maps and starting points.
SweepStats sweep_one_poset(const FinitePoset& p, int size) {
  SweepStats st;
  const int n = p.size();
  std::uint64_t maps = 1;
  for (int i = 0; i < n; ++i) maps *= static_cast<std::uint64_t>(n);
  const long budget = default_budget(n);

  std::vector<std::vector<Elem>> all_maps(maps, std::vector<Elem>(n));
  for (std::uint64_t c = 0; c < maps; ++c) {
    std::uint64_t v = c;
    for (int i = 0; i < n; ++i) {
      all_maps[c][i] = static_cast<Elem>(v % n);
      v /= n;
    }
  }

  for (std::uint64_t fc = 0; fc < maps; ++fc) {
    for (Elem a0 = 0; a0 < n; ++a0) {
      Instance inst{p, all_maps[fc], a0, std::nullopt};
      ++st.instances;
      for (TheoremId id : all_theorems()) {
        if (requires_g(id)) continue;
        Verdict v = verify(id, inst, budget);
        count(st, v);
        if (v.status == VerdictStatus::Refuted)
          st.refutations.push_back(
              {inst, id, v.witness, -1, st.instances, size, Shape::RandomOrder, true});
      }
      for (std::uint64_t gc = 0; gc < maps; ++gc) {
        Instance gi{p, all_maps[fc], a0, all_maps[gc]};
        for (TheoremId id : all_theorems()) {
          if (!requires_g(id)) continue;
          Verdict v = verify(id, gi, budget);
          count(st, v);
          if (v.status == VerdictStatus::Refuted)
            st.refutations.push_back(
                {gi, id, v.witness, -1, st.instances, size, Shape::RandomOrder, true});
        }
      }
    }
  }
  return st;
}

}  // namespace

SweepStats sweep_exhaustive(int max_size, bool parallel) {
  SweepStats total;
  for (int n = 1; n <= max_size; ++n) {
    auto posets = all_labeled_posets(n);
    std::vector<SweepStats> per(posets.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
      for (long i = 0; i < static_cast<long>(posets.size()); ++i)
        per[i] = sweep_one_poset(posets[i], n);
    } else {
      for (size_t i = 0; i < posets.size(); ++i) per[i] = sweep_one_poset(posets[i], n);
    }
    for (const auto& st : per) total.absorb(st);
  }
  return total;
}

namespace {

SweepStats verify_all_on(const Instance& inst, std::uint64_t seed, int size, Shape shape) {
  SweepStats st;
  ++st.instances;
  const long budget = default_budget(inst.poset.size());
  for (TheoremId id : all_theorems()) {
    if (requires_g(id) && !inst.g_map) continue;
    Verdict v = verify(id, inst, budget);
    count(st, v);
    if (v.status == VerdictStatus::Refuted)
      st.refutations.push_back(
          {inst, id, v.witness, static_cast<std::int64_t>(seed), 0, size, shape, false});
  }
  return st;
}

}  // namespace

SweepStats sweep_random(std::uint64_t seed0, int count, int min_size, int max_size,
                        bool parallel, int lattice_cap) {
  const int span = max_size - min_size + 1;
  std::vector<SweepStats> per(count);
  auto run_one = [&](int i) {
    std::uint64_t seed = seed0 + static_cast<std::uint64_t>(i);
    int size = min_size + (i % span);
    Shape shape = (i / span) % 2 == 0 ? Shape::RandomOrder : Shape::RandomLattice;
    int cap = shape == Shape::RandomLattice ? lattice_cap : kMaxElements;
    Instance inst = generate_instance(seed, size, shape, /*with_g=*/true, cap);
    per[i] = verify_all_on(inst, seed, size, shape);
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) run_one(i);
  } else {
    for (int i = 0; i < count; ++i) run_one(i);
  }
  SweepStats total;
  for (const auto& st : per) total.absorb(st);
  return total;
}

SearchReport search_exhaustive(TheoremId id, const std::set<std::string>& dropped,
                               int max_size, int max_witnesses) {
  SearchReport rep;
  for (int n = 1; n <= max_size; ++n) {
    const long budget = default_budget(n);
    bool done = false;
    for_each_instance(n, requires_g(id), [&](const Instance& inst) {
      ++rep.examined;
      try {
        Verdict v = verify(id, inst, budget, dropped);
        if (v.status == VerdictStatus::Refuted) {
          rep.witnesses.push_back({inst, id, v.witness, -1, rep.examined, n,
                                   Shape::RandomOrder, true});
          if (static_cast<int>(rep.witnesses.size()) >= max_witnesses) {
            done = true;
            return false;
          }
        }
      } catch (const DomainError& e) {
        if (e.kind() != "UnsupportedCarrier") throw;  // join needed by the build step missing
      }
      return true;
    });
    if (done) break;
  }
  return rep;
}

SearchReport search_random(TheoremId id, const std::set<std::string>& dropped,
                           std::uint64_t seed0, int count, int size, Shape shape,
                           int max_witnesses) {
  SearchReport rep;
  for (int i = 0; i < count; ++i) {
    std::uint64_t seed = seed0 + static_cast<std::uint64_t>(i);
    Instance inst = generate_instance(seed, size, shape, requires_g(id));
    ++rep.examined;
    try {
      Verdict v = verify(id, inst, default_budget(inst.poset.size()), dropped);
      if (v.status == VerdictStatus::Refuted) {
        rep.witnesses.push_back(
            {inst, id, v.witness, static_cast<std::int64_t>(seed), 0, size, shape, false});
        if (static_cast<int>(rep.witnesses.size()) >= max_witnesses) break;
      }
    } catch (const DomainError& e) {
      if (e.kind() != "UnsupportedCarrier") throw;
    }
  }
  return rep;
}

}  // namespace fixlat

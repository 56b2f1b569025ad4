#include "fixlat/generate.hpp"

#include <algorithm>
#include <random>

namespace fixlat {

std::string to_string(Shape s) {
  switch (s) {
    case Shape::RandomOrder: return "RANDOM_ORDER";
    case Shape::RandomLattice: return "RANDOM_LATTICE";
    case Shape::Chain: return "CHAIN";
    case Shape::AntichainTower: return "ANTICHAIN_TOWER";
  }
  return "?";
}

std::optional<Shape> shape_from_string(const std::string& s) {
  if (s == "RANDOM_ORDER") return Shape::RandomOrder;
  if (s == "RANDOM_LATTICE") return Shape::RandomLattice;
  if (s == "CHAIN") return Shape::Chain;
  if (s == "ANTICHAIN_TOWER") return Shape::AntichainTower;
  return std::nullopt;
}

namespace {

std::uint64_t split_seed(std::uint64_t seed) {
  // splitmix64 step, for deterministic retry sub-seeds
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int pick(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % n); }

FinitePoset random_order(std::mt19937_64& rng, int size) {
  std::vector<std::pair<Elem, Elem>> edges;
  for (Elem i = 0; i < size; ++i)
    for (Elem j = i + 1; j < size; ++j)
      if (rng() & 1) edges.emplace_back(i, j);
  return FinitePoset::build_indexed(size, edges, RelationKind::Hasse);
}

// Dedekind-MacNeille cuts of p, ordered by inclusion.
std::vector<ElemSet> dm_cuts(const FinitePoset& p) {
  std::vector<ElemSet> cuts;
  const ElemSet full = p.all();
  auto add = [&](ElemSet c) {
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
  };
  for (ElemSet s = 0;; ++s) {
    add(p.lower_bounds(p.upper_bounds(s)));
    if (s == full) break;
  }
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

FinitePoset completion_lattice(const FinitePoset& base) {
  auto cuts = dm_cuts(base);
  const int n = static_cast<int>(cuts.size());
  if (n > kMaxElements) throw size_cap("completion too large");
  std::vector<std::uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((cuts[i] & ~cuts[j]) == 0) leq[i * n + j] = 1;
  return FinitePoset::from_matrix(n, std::move(leq));
}

}  // namespace

Instance generate_instance(std::uint64_t seed, int size, Shape shape, bool with_g,
                           int cap, int retry_limit) {
  if (size < 1 || size > cap || size > kMaxElements)
    throw size_cap("size out of range");

  std::optional<FinitePoset> poset;
  std::uint64_t s = seed;
  if (shape == Shape::RandomLattice) {
    for (int attempt = 0; attempt <= retry_limit && !poset; ++attempt) {
      std::mt19937_64 rng(s);
      FinitePoset base = random_order(rng, size);
      auto cuts = dm_cuts(base);
      if (static_cast<int>(cuts.size()) <= cap)
        poset = completion_lattice(base);
      else
        s = split_seed(s);
    }
    if (!poset) throw size_cap("lattice completion exceeded the element cap on every retry");
  } else if (shape == Shape::RandomOrder) {
    std::mt19937_64 rng(s);
    poset = random_order(rng, size);
  } else if (shape == Shape::Chain) {
    std::vector<std::pair<Elem, Elem>> edges;
    for (Elem i = 0; i + 1 < size; ++i) edges.emplace_back(i, i + 1);
    poset = FinitePoset::build_indexed(size, edges, RelationKind::Hasse);
  } else {  // AntichainTower: antichain pairs stacked level over level
    std::vector<std::pair<Elem, Elem>> edges;
    for (Elem i = 0; i < size; ++i) {
      Elem level = i / 2;
      for (Elem j = 0; j < size; ++j)
        if (j / 2 == level + 1) edges.emplace_back(i, j);
    }
    poset = FinitePoset::build_indexed(size, edges, RelationKind::Hasse);
  }

  const int n = poset->size();
  std::mt19937_64 rng(split_seed(s ^ 0x5bf0a8b1ULL));
  Instance inst{std::move(*poset), {}, 0, std::nullopt};
  inst.f_map.resize(n);
  if (n == 1) {
    inst.f_map[0] = 0;  // the only self-map
    inst.a0 = 0;
    if (with_g) inst.g_map = std::vector<Elem>{0};
    return inst;
  }
  for (int i = 0; i < n; ++i) inst.f_map[i] = pick(rng, n);
  inst.a0 = pick(rng, n);
  if (with_g) {
    std::vector<Elem> g(n);
    for (int i = 0; i < n; ++i) g[i] = pick(rng, n);
    inst.g_map = std::move(g);
  }
  return inst;
}

std::vector<FinitePoset> all_labeled_posets(int n) {
  std::vector<FinitePoset> out;
  const int pairs = n * (n - 1);
  std::vector<std::pair<Elem, Elem>> index;
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      if (i != j) index.emplace_back(i, j);
  std::vector<std::uint8_t> leq(static_cast<size_t>(n) * n);
  for (std::uint64_t code = 0; code < (1ULL << pairs); ++code) {
    std::fill(leq.begin(), leq.end(), 0);
    for (Elem i = 0; i < n; ++i) leq[i * n + i] = 1;
    for (int k = 0; k < pairs; ++k)
      if ((code >> k) & 1) leq[index[k].first * n + index[k].second] = 1;
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x)
      for (Elem y = 0; y < n && ok; ++y) {
        if (x != y && leq[x * n + y] && leq[y * n + x]) ok = false;
        if (!leq[x * n + y]) continue;
        for (Elem z = 0; z < n; ++z)
          if (leq[y * n + z] && !leq[x * n + z]) {
            ok = false;
            break;
          }
      }
    if (ok) out.push_back(FinitePoset::from_matrix(n, leq));
  }
  return out;
}

void for_each_instance(int n, bool with_g, const std::function<bool(const Instance&)>& fn) {
  auto posets = all_labeled_posets(n);
  std::uint64_t maps = 1;
  for (int i = 0; i < n; ++i) maps *= static_cast<std::uint64_t>(n);
  for (const auto& p : posets) {
    for (std::uint64_t fc = 0; fc < maps; ++fc) {
      std::vector<Elem> fmap(n);
      std::uint64_t c = fc;
      for (int i = 0; i < n; ++i) {
        fmap[i] = static_cast<Elem>(c % n);
        c /= n;
      }
      for (Elem a0 = 0; a0 < n; ++a0) {
        if (!with_g) {
          if (!fn(Instance{p, fmap, a0, std::nullopt})) return;
          continue;
        }
        for (std::uint64_t gc = 0; gc < maps; ++gc) {
          std::vector<Elem> gmap(n);
          std::uint64_t d = gc;
          for (int i = 0; i < n; ++i) {
            gmap[i] = static_cast<Elem>(d % n);
            d /= n;
          }
          if (!fn(Instance{p, fmap, a0, gmap})) return;
        }
      }
    }
  }
}

}  // namespace fixlat

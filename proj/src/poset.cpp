#include "fixlat/poset.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace fixlat {

std::vector<Elem> set_to_vector(ElemSet s) {
  std::vector<Elem> out;
  for_each_element(s, [&](Elem x) { out.push_back(x); });
  return out;
}

Elem FinitePoset::index_of(std::string_view name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  throw unknown_element("no element named '" + std::string(name) + "'");
}

void FinitePoset::check_element(Elem x) const {
  if (x < 0 || x >= n_) throw unknown_element("index " + std::to_string(x) + " out of range");
}

void FinitePoset::finish_construction() {
  covers_.assign(static_cast<size_t>(n_) * n_, 0);
  up_.assign(n_, 0);
  down_.assign(n_, 0);
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y)
      if (leq(x, y)) {
        up_[x] = set_with(up_[x], y);
        down_[y] = set_with(down_[y], x);
      }
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y) {
      if (!lt(x, y)) continue;
      bool between = false;
      for (Elem z = 0; z < n_ && !between; ++z)
        if (lt(x, z) && lt(z, y)) between = true;
      if (!between) covers_[x * n_ + y] = 1;
    }
}

FinitePoset FinitePoset::build_indexed(int n, const std::vector<std::pair<Elem, Elem>>& pairs,
                                       RelationKind kind) {
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
  std::vector<std::pair<std::string, std::string>> named;
  named.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw unknown_element("pair index out of range");
    named.emplace_back(names[a], names[b]);
  }
  return build(std::move(names), named, kind);
}

FinitePoset FinitePoset::build(std::vector<std::string> names,
                               const std::vector<std::pair<std::string, std::string>>& pairs,
                               RelationKind kind) {
  if (names.empty()) throw DomainError("EmptyPoset", "a poset needs at least one element");
  if (static_cast<int>(names.size()) > kMaxElements)
    throw size_cap("at most " + std::to_string(kMaxElements) + " elements supported");
  std::unordered_map<std::string, Elem> index;
  for (size_t i = 0; i < names.size(); ++i)
    if (!index.emplace(names[i], static_cast<Elem>(i)).second)
      throw DomainError("DuplicateElement", "element '" + names[i] + "' listed twice");

  FinitePoset p;
  p.n_ = static_cast<int>(names.size());
  p.names_ = std::move(names);
  const int n = p.n_;
  p.leq_.assign(static_cast<size_t>(n) * n, 0);
  auto at = [&](Elem x, Elem y) -> std::uint8_t& { return p.leq_[x * n + y]; };

  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw unknown_element("'" + a + "' in relation");
    if (ib == index.end()) throw unknown_element("'" + b + "' in relation");
    at(ia->second, ib->second) = 1;
  }

  if (kind == RelationKind::Hasse) {
    for (Elem x = 0; x < n; ++x) at(x, x) = 1;
    // Warshall closure.
    for (Elem k = 0; k < n; ++k)
      for (Elem x = 0; x < n; ++x)
        if (at(x, k))
          for (Elem y = 0; y < n; ++y)
            if (at(k, y)) at(x, y) = 1;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = x + 1; y < n; ++y)
        if (at(x, y) && at(y, x))
          throw cycle_detected("'" + p.names_[x] + "' and '" + p.names_[y] +
                               "' are mutually below each other");
  } else {
    for (Elem x = 0; x < n; ++x)
      if (!at(x, x)) throw not_reflexive("missing " + p.names_[x] + " <= " + p.names_[x]);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (x != y && at(x, y) && at(y, x))
          throw cycle_detected("'" + p.names_[x] + "' and '" + p.names_[y] +
                               "' violate antisymmetry");
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (at(x, y))
          for (Elem z = 0; z < n; ++z)
            if (at(y, z) && !at(x, z))
              throw not_transitive(p.names_[x] + " <= " + p.names_[y] + " <= " + p.names_[z] +
                                   " but not " + p.names_[x] + " <= " + p.names_[z]);
  }

  p.finish_construction();
  return p;
}

FinitePoset FinitePoset::from_matrix(int n, std::vector<std::uint8_t> leq) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (leq[x * n + y]) pairs.emplace_back(x, y);
  return build_indexed(n, pairs, RelationKind::Full);
}

std::vector<std::pair<Elem, Elem>> FinitePoset::cover_pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y)
      if (covers(x, y)) out.emplace_back(x, y);
  return out;
}

ElemSet FinitePoset::upper_bounds(ElemSet s) const {
  ElemSet ub = all();
  for_each_element(s, [&](Elem x) { ub &= up_[x]; });
  return ub;
}

ElemSet FinitePoset::lower_bounds(ElemSet s) const {
  ElemSet lb = all();
  for_each_element(s, [&](Elem x) { lb &= down_[x]; });
  return lb;
}

std::optional<Elem> FinitePoset::least_of(ElemSet s) const {
  std::optional<Elem> out;
  // x is least iff every member of s is above x.
  for_each_element(s, [&](Elem x) {
    if (out) return;
    if ((s & ~up_[x]) == 0) out = x;
  });
  return out;
}

std::optional<Elem> FinitePoset::greatest_of(ElemSet s) const {
  std::optional<Elem> out;
  for_each_element(s, [&](Elem x) {
    if (out) return;
    if ((s & ~down_[x]) == 0) out = x;
  });
  return out;
}

std::optional<Elem> FinitePoset::lub(ElemSet s) const {
  if ((s & ~all()) != 0) throw unknown_element("subset contains out-of-range bits");
  if (s == 0) return bottom();
  return least_of(upper_bounds(s));
}

std::optional<Elem> FinitePoset::glb(ElemSet s) const {
  if ((s & ~all()) != 0) throw unknown_element("subset contains out-of-range bits");
  if (s == 0) return top();
  return greatest_of(lower_bounds(s));
}

std::optional<Elem> FinitePoset::bottom() const { return least_of(all()); }
std::optional<Elem> FinitePoset::top() const { return greatest_of(all()); }

bool FinitePoset::is_chain(ElemSet s) const {
  auto v = set_to_vector(s);
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (!comparable(v[i], v[j])) return false;
  return true;
}

FinitePoset FinitePoset::reversed() const {
  FinitePoset p;
  p.n_ = n_;
  p.names_ = names_;
  p.leq_.assign(leq_.size(), 0);
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y) p.leq_[x * n_ + y] = leq_[y * n_ + x];
  p.finish_construction();
  return p;
}

PosetClassification classify_poset(const FinitePoset& p, int exhaustive_bound) {
  PosetClassification c;
  const int n = p.size();
  c.has_bottom = p.bottom().has_value();
  c.has_top = p.top().has_value();
  c.is_strictly_inductive = true;  // finite non-empty chains peak at their maximum
  c.is_well_ordered = true;
  for (Elem x = 0; x < n && c.is_well_ordered; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (!p.comparable(x, y)) {
        c.is_well_ordered = false;
        break;
      }
  c.is_chain_complete = c.has_bottom;  // empty chain's lub is the bottom

  if (n <= exhaustive_bound) {
    c.decided_exhaustively = true;
    bool all_lubs = true, all_glbs = true;
    const ElemSet full = p.all();
    for (ElemSet s = 1; s <= full; ++s) {
      if (!p.lub(s)) all_lubs = false;
      if (!p.glb(s)) all_glbs = false;
      if (!all_lubs && !all_glbs) break;
    }
    c.is_complete_semilattice = all_lubs;
    c.is_lattice = all_lubs && all_glbs;
    c.is_complete_lattice = c.is_lattice && c.has_bottom && c.has_top;
  } else {
    // Pairwise joins/meets decide the lattice flags on finite carriers.
    bool joins = true, meets = true;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = x + 1; y < n; ++y) {
        if (!p.lub(set_with(set_single(x), y))) joins = false;
        if (!p.glb(set_with(set_single(x), y))) meets = false;
      }
    c.is_complete_semilattice = joins;
    c.is_lattice = joins && meets;
    c.is_complete_lattice = c.is_lattice && c.has_bottom && c.has_top;
  }
  return c;
}

namespace {
void extend_chain(const FinitePoset& p, ElemSet chain, Elem next_min, int min_size,
                  const std::function<void(ElemSet)>& fn) {
  if (set_size(chain) >= min_size) fn(chain);
  for (Elem x = next_min; x < p.size(); ++x) {
    bool ok = true;
    for_each_element(chain, [&](Elem y) {
      if (!p.comparable(x, y)) ok = false;
    });
    if (ok) extend_chain(p, set_with(chain, x), x + 1, min_size, fn);
  }
}
}  // namespace

void for_each_chain(const FinitePoset& p, int min_size,
                    const std::function<void(ElemSet)>& fn) {
  extend_chain(p, 0, 0, min_size, fn);
}

std::vector<ElemSet> enumerate_chains(const FinitePoset& p, int min_size) {
  std::vector<ElemSet> out;
  for_each_chain(p, min_size, [&](ElemSet c) { out.push_back(c); });
  return out;
}

std::string render_set(const FinitePoset& p, ElemSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each_element(s, [&](Elem x) {
    if (!first) os << ',';
    first = false;
    os << p.name(x);
  });
  os << '}';
  return os.str();
}

}  // namespace fixlat

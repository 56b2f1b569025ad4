#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fixlat/theorems.hpp"

namespace fixlat {

enum class Shape { RandomOrder, RandomLattice, Chain, AntichainTower };
std::string to_string(Shape s);
std::optional<Shape> shape_from_string(const std::string& s);

// Deterministic in (seed, size, shape). RandomLattice completes a random
// order into a lattice (Dedekind-MacNeille cuts); when the completion
// overflows the element cap it retries with a derived sub-seed.
Instance generate_instance(std::uint64_t seed, int size, Shape shape, bool with_g = false,
                           int size_cap = kMaxElements, int retry_limit = 32);

// Every partial order on n labeled elements (n small; 1 -> 1, 2 -> 3,
// 3 -> 19, 4 -> 219, 5 -> 4231 orders).
std::vector<FinitePoset> all_labeled_posets(int n);

// All (poset, f, a0[, g]) instances on n labeled elements, in a fixed
// deterministic order. Return false from the callback to stop early.
void for_each_instance(int n, bool with_g, const std::function<bool(const Instance&)>& fn);

}  // namespace fixlat

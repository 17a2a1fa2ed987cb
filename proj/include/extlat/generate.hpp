#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "extlat/poset.hpp"

namespace extlat {

// Every labeled poset on n elements, in a fixed deterministic order.
// Throws CapExceeded above the exhaustive cap (n <= 6 unless slow mode).
std::vector<Poset> enumerate_posets(int n);
void for_each_poset(int n, const std::function<void(const Poset&)>& visit);

// Deterministic for a given seed: a random natural order is drawn, then each
// pair compatible with it is related with probability `density`.
Poset random_poset(int n, double density, std::uint64_t seed);

// All permutations of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> all_permutations(int n);

}  // namespace extlat

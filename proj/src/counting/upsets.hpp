#pragma once

#include <functional>
#include <unordered_map>
#include <vector>

#include "extlat/poset.hpp"

namespace extlat::detail {

// All upper ideals of a poset, each with the list of upper ideals it contains.
struct UpsetLattice {
  std::vector<Mask> sets;
  std::vector<std::vector<int>> contained;  // indices, including the set itself
  std::unordered_map<Mask, int> index;
  int whole = 0;  // index of the full ground set
};

UpsetLattice build_upset_lattice(const Poset& p);
// Upper ideals of p that are subsets of `within` (itself an upper ideal).
void for_each_upset_within(const Poset& p, Mask within, const std::function<void(Mask)>& visit);

}  // namespace extlat::detail

#include "upsets.hpp"

#include <algorithm>

#include "extlat/arith.hpp"
#include "extlat/caps.hpp"

namespace extlat::detail {

namespace {
void descend(const Poset& p, Mask undecided, Mask chosen, const std::function<void(Mask)>& visit) {
  if (!undecided) {
    visit(chosen);
    return;
  }
  int x = std::countr_zero(undecided);
  Mask with = chosen | bit(x) | p.above(x);
  descend(p, undecided & ~with, with, visit);
  descend(p, undecided & ~(bit(x) | p.below(x)), chosen, visit);
}
}  // namespace

void for_each_upset_within(const Poset& p, Mask within, const std::function<void(Mask)>& visit) {
  descend(p, within, 0, visit);
}

UpsetLattice build_upset_lattice(const Poset& p) {
  UpsetLattice lat;
  for_each_upset_within(p, p.all(), [&](Mask m) {
    if (lat.sets.size() >= caps().ideal_states) throw CapExceeded("upper ideal lattice exceeds cap");
    lat.sets.push_back(m);
  });
  std::sort(lat.sets.begin(), lat.sets.end(), [](Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (int i = 0; i < static_cast<int>(lat.sets.size()); ++i) lat.index.emplace(lat.sets[i], i);
  lat.whole = lat.index.at(p.all());
  lat.contained.resize(lat.sets.size());
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < lat.sets.size(); ++i) {
    for_each_upset_within(p, lat.sets[i], [&](Mask m) { lat.contained[i].push_back(lat.index.at(m)); });
    pairs += lat.contained[i].size();
    if (pairs > caps().ideal_states) throw CapExceeded("upper ideal containment pairs exceed cap");
  }
  return lat;
}

}  // namespace extlat::detail

#pragma once

#include <optional>
#include <vector>

#include "extlat/counting.hpp"

namespace extlat::detail {

// Same maps as deletion_lift / deletion_lower, on the subposet induced by `active`.
// Value vectors are indexed by ground element; entries outside `active` are ignored.
Values lift_within(const Poset& p, Mask active, int y, const Values& reduced);
std::optional<Values> lower_within(const Poset& p, Mask active, int y, const Values& extension);
std::vector<int> chain_within(const Poset& p, Mask active, const Values& extension);

}  // namespace extlat::detail

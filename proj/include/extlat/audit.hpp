#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "extlat/arith.hpp"
#include "extlat/poset.hpp"

namespace extlat {

// The lattice [t]^X ordered coordinate-wise on Y and reversed on Z, where Z
// is the complement of Y. The support is the set of maps order-preserving on
// each block separately.
// Each check runs over every point (pair, triple) while the count fits its
// budget, and over `samples` random draws otherwise.
struct SheppOptions {
  std::size_t pair_budget = 1u << 16;
  std::size_t triple_budget = 1u << 15;
  std::size_t samples = 4096;
  std::uint64_t seed = 1;
};

struct SheppReport {
  std::size_t lattice_size = 0;
  std::size_t support = 0;
  Count expected_support = 0;
  bool meet_join_ok = true;        // meet/join are glb/lub
  bool distributive_ok = true;
  bool log_supermodular_ok = true;
  bool certificate_ok = true;      // per-relation closure under meet and join
  bool exhaustive_pairs = false;
  bool exhaustive_triples = false;
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  bool ok() const {
    return meet_join_ok && distributive_ok && log_supermodular_ok && certificate_ok && Count(support) == expected_support;
  }
};

// Throws CapExceeded when t^n exceeds the lattice cap.
SheppReport shepp_audit(const Poset& p, Mask y_block, int t, const SheppOptions& options = {});

// Bipartite graph between E(P,x,a)^2 and E(P,x,a-1) x E(P,x,a+1); edges move
// a common element across x by a positional demotion in the first word and a
// promotion in the second.
struct MatchingReport {
  std::size_t left = 0;   // |E(P,x,a)|^2
  std::size_t right = 0;  // |E(P,x,a-1)| * |E(P,x,a+1)|
  std::size_t edges = 0;
  std::size_t matching = 0;
  std::size_t isolated_right = 0;
  bool saturated() const { return matching == right; }
};
MatchingReport matching_check(const Poset& p, int x, int a);

// Groups the labeled posets on n elements by comparability graph and checks
// that e(P) and Omega(P, t), t <= t_max, are constant on each group.
struct ClassReport {
  int n = 0;
  std::size_t posets = 0;
  std::size_t classes = 0;
  bool invariant = true;
  std::vector<std::string> failures;
};
ClassReport comparability_class_check(int n, int t_max = 4);

}  // namespace extlat

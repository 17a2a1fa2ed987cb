#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace extlat {

// Subsets of the ground set. Element x is bit x.
using Mask = std::uint64_t;
inline constexpr int kMaxElements = 64;

constexpr Mask bit(int x) { return Mask{1} << x; }
constexpr Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline int popcount(Mask m) { return std::popcount(m); }

class CycleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Finite strict partial order on {0, ..., n-1}. The label shown to users is
// index + 1. The transitive closure is stored in both directions.
class Poset {
 public:
  Poset() = default;
  explicit Poset(int n);  // antichain

  // Closes the given relations (x < y) transitively. Throws CycleError when
  // the closure is not antisymmetric.
  static Poset from_relations(int n, std::span<const std::pair<int, int>> less_pairs);
  // Takes an already closed strict order; validates it.
  static Poset from_closed(int n, std::vector<Mask> above);

  int size() const { return n_; }
  Mask all() const { return full_mask(n_); }

  bool less(int x, int y) const { return (up_[x] >> y) & 1u; }
  bool leq(int x, int y) const { return x == y || less(x, y); }
  bool comparable(int x, int y) const { return x == y || less(x, y) || less(y, x); }
  bool incomparable(int x, int y) const { return !comparable(x, y); }

  Mask above(int x) const { return up_[x]; }
  Mask below(int x) const { return down_[x]; }
  Mask comparable_to(int x) const { return up_[x] | down_[x] | bit(x); }
  Mask upper_covers(int x) const;
  Mask lower_covers(int x) const;
  Mask minimal_elements() const;
  Mask maximal_elements() const;

  bool is_upset(Mask m) const;
  bool is_downset(Mask m) const;
  bool is_chain(Mask m) const;
  bool is_antichain(Mask m) const;
  // i < j whenever element i precedes element j.
  bool is_natural_labeling() const;

  std::vector<std::pair<int, int>> cover_pairs() const;
  const std::vector<Mask>& above_rows() const { return up_; }

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  int n_ = 0;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
};

Poset chain(int n);
Poset antichain(int n);
Poset diamond();  // C2 x C2

Poset dual(const Poset& p);
// Left operand keeps labels; right operand is shifted by left.size().
Poset disjoint_sum(const Poset& left, const Poset& right);
// Every element of left lies below every element of right.
Poset linear_sum(const Poset& left, const Poset& right);
// Element (x, y) is index x * right.size() + y.
Poset product(const Poset& left, const Poset& right);
// Induced subposet on `keep`, relabeled in increasing order.
Poset restrict_to(const Poset& p, Mask keep);
Poset remove_elements(const Poset& p, Mask drop);
// Element x of p becomes element new_label[x].
Poset relabel(const Poset& p, std::span<const int> new_label);

// Two-dimensional poset of a permutation given by 0-based values:
// i < j iff i < j and perm[i] < perm[j].
Poset permutation_poset(std::span<const int> perm);
// Poset of the reversed word.
Poset reversed_permutation_poset(std::span<const int> perm);
// Companion on the same ground set: i < j iff i < j and perm[i] > perm[j].
// Its comparability graph is the complement of permutation_poset(perm)'s.
// It is isomorphic to reversed_permutation_poset(perm) via i -> n-1-i.
Poset inversion_poset(std::span<const int> perm);

struct ElementStats {
  int lower = 0;  // #{y <= x}
  int upper = 0;  // #{y >= x}
};
ElementStats element_stats(const Poset& p, int x);
// Number of elements strictly between x and y. Requires x < y.
int interval_count(const Poset& p, int x, int y);

struct StructureReport {
  int width = 0;
  int height = 0;
  bool series_parallel = false;
  bool ordered_forest = false;
  int maximal_count = 0;
  int minimal_count = 0;
};
StructureReport structure(const Poset& p);
int width(const Poset& p);
int height(const Poset& p);
bool is_series_parallel(const Poset& p);
bool is_ordered_forest(const Poset& p);
// Largest set that is a chain in both posets (same ground set).
int common_chain_number(const Poset& p, const Poset& q);

// Compact one-line form, e.g. "4:1<2,1<3,2<4,3<4" (cover pairs, 1-based).
std::string describe(const Poset& p);

}  // namespace extlat

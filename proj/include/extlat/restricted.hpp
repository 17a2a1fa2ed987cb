#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "extlat/counting.hpp"

namespace extlat {

// A chained restriction: u[0] < u[1] < ... in the poset, at strictly
// increasing positions a[0] < a[1] < ... (1-based).

enum class InfeasibleReason {
  ElementBetweenAdjacent,  // adjacent positions but something lies between the two elements
  BoundaryNotExtreme,      // position 1 (or n) demanded of a non-minimal (non-maximal) element
  NotAChain,               // restricted elements do not form a chain in position order
};
std::string to_string(InfeasibleReason r);

struct Infeasible {
  InfeasibleReason reason;
  std::string detail;
};

// Equivalent instance with no two restricted positions adjacent and none at
// either end. An extension of `reduced` maps back to one of the original
// poset through `lift_word`.
struct NormalizedSpec {
  Poset reduced;
  RestrictionSpec spec;
  std::vector<std::vector<int>> groups;  // reduced element -> original elements in order
  std::vector<int> prefix;               // original elements forced to the front
  std::vector<int> suffix;               // original elements forced to the back
  Word lift_word(const Word& reduced_word) const;
};

// Throws std::invalid_argument for malformed specs (range, duplicates, size).
std::variant<NormalizedSpec, Infeasible> normalize_spec(const Poset& p, const RestrictionSpec& spec);

// Elements and positions sorted by position, validated for range.
RestrictionSpec sorted_spec(const Poset& p, const RestrictionSpec& spec);

// Polynomial-time decision of E(P, u, a) != empty. Throws std::domain_error
// when the restricted elements are not a chain.
bool vanishing_decide(const Poset& p, const RestrictionSpec& spec);

struct FindStats {
  long steps = 0;
};
class NoExtension : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
// Constructs an element of E(P, u, a) by moving restricted elements into
// place one position at a time. Throws NoExtension when none exists.
Word restricted_find(const Poset& p, const RestrictionSpec& spec, FindStats* stats = nullptr);

// Given some f in E(P, u, a), decides whether it is the only one.
bool uniqueness_decide(const Poset& p, const RestrictionSpec& spec, const Word& f);
// Combined: false when the set is empty.
bool is_unique(const Poset& p, const RestrictionSpec& spec);

}  // namespace extlat

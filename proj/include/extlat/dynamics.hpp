#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "extlat/caps.hpp"
#include "extlat/counting.hpp"

namespace extlat {

// Actions on linear extensions in word form. Positions are 1-based and the
// action is on the right: a product g1 g2 applies g1 first.

Word promote(const Poset& p, const Word& word);
Word demote(const Poset& p, const Word& word);
Word evacuate(const Poset& p, const Word& word);
// Promotion restricted to the first `prefix` positions.
Word promote_prefix(const Poset& p, const Word& word, int prefix);

// Elements moved by promotion: starts at the first letter, then repeatedly
// the earliest element above the previous one.
std::vector<int> promotion_chain(const Poset& p, const Word& word);

struct Generator {
  enum class Kind { Tau, TauPair, Sigma, DeltaUp, DeltaDown };
  Kind kind = Kind::Tau;
  int first = 0;   // Tau: i. TauPair: i. Sigma: centre j. DeltaUp: i. DeltaDown: j.
  int second = 0;  // TauPair: j. DeltaUp: j. DeltaDown: i.

  static Generator tau(int i) { return {Kind::Tau, i, i + 1}; }
  static Generator tau_pair(int i, int j) { return {Kind::TauPair, i, j}; }
  static Generator sigma(int centre) { return {Kind::Sigma, centre, 0}; }
  // tau_i tau_{i+1} ... tau_{j-1}
  static Generator delta_up(int i, int j) { return {Kind::DeltaUp, i, j}; }
  // tau_{j-1} ... tau_{i+1} tau_i
  static Generator delta_down(int j, int i) { return {Kind::DeltaDown, j, i}; }

  std::string to_string() const;
  friend bool operator==(const Generator&, const Generator&) = default;
};

// Swaps at positions i, i+1 when the letters are incomparable.
Word apply_tau(const Poset& p, Word word, int i);
// Throws std::out_of_range if a position is outside 1..n.
Word apply_generator(const Poset& p, const Word& word, const Generator& g);
Word apply_generators(const Poset& p, Word word, std::span<const Generator> gens);

// Coxeter-type generators tau_1..tau_{n-1}.
std::vector<Generator> adjacent_generators(int n);
// tau_i with i, i+1 outside the fixed positions, plus sigma at each fixed position.
std::vector<Generator> fixed_position_generators(int n, const std::vector<int>& fixed);
// tau_{ij} for all i < j outside the fixed positions.
std::vector<Generator> pair_generators(int n, const std::vector<int>& fixed);

struct OrbitReport {
  std::size_t orbit_count = 0;
  std::vector<std::size_t> orbit_sizes;  // in order of first seed reached
  std::size_t states = 0;
  bool transitive() const { return orbit_count <= 1; }
};

// Orbits of the group generated by `gens` on the closure of `seeds`.
OrbitReport orbits(const Poset& p, const std::vector<Word>& seeds, std::span<const Generator> gens,
                   std::size_t limit = caps().orbit_states);

}  // namespace extlat

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "extlat/counting.hpp"

namespace extlat {

class NotAntichain : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NotNaturalLabeling : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Counts of pairs not covered by an explicit injection, with the closed-form
// value they must equal.
struct WitnessReport {
  Count uncovered = 0;
  Count formula = 0;
  Count domain = 0;  // size of the codomain that was scanned
  std::vector<std::string> samples;
  bool agrees() const { return uncovered == formula; }
};

// ---- hook-length injection: bijections -> E(P) x upper maps -------------

// upper[x] is some element >= x.
using UpperMap = std::vector<int>;

struct HookImage {
  Values extension;
  UpperMap upper;
  friend bool operator==(const HookImage&, const HookImage&) = default;
};

void for_each_upper_map(const Poset& p, const std::function<void(const UpperMap&)>& visit);
Count upper_map_count(const Poset& p);

// `bijection` is any X -> [n] in value form.
HookImage hook_forward(const Poset& p, const Values& bijection);
// Undoes hook_forward step by step; defined on every pair but only a left
// inverse on the image.
Values hook_replay(const Poset& p, const Values& extension, const UpperMap& upper);
// The preimage, or nullopt when the pair is outside the image.
std::optional<Values> hook_inverse(const Poset& p, const Values& extension, const UpperMap& upper);
// Uncovered pairs must number e(P) * prod upper(x) - n!.
WitnessReport hook_witness(const Poset& p, std::size_t max_samples = 4);

// ---- order polynomial injection -----------------------------------------

// color[x] in 1..t; order-preserving for the elements of Omega(P, t).
using ColorMap = std::vector<int>;
// block_of[v - 1] in 1..t for each value v in 1..n.
using BlockMap = std::vector<int>;
// A permutation of 1..n written as a sequence.
using Arrangement = std::vector<int>;

void for_each_order_preserving(const Poset& p, int t, const std::function<void(const ColorMap&)>& visit);

struct ColorImage {
  ColorMap color;
  Arrangement arrangement;
  friend bool operator==(const ColorImage&, const ColorImage&) = default;
};
struct ColorPreimage {
  Values extension;  // a linear extension only when in_image
  BlockMap blocks;
  bool in_image = false;
};

// Requires a natural labeling. Throws NotNaturalLabeling otherwise.
ColorImage color_forward(const Poset& p, const Values& extension, const BlockMap& blocks, int t);
ColorPreimage color_inverse(const Poset& p, const ColorMap& color, const Arrangement& arrangement, int t);
// Uncovered pairs must number Omega(P,t) * n! - e(P) * t^n. Relabels the
// poset naturally first, which leaves both sides unchanged.
WitnessReport color_witness(const Poset& p, int t, std::size_t max_samples = 4);

// Pairs (g, beta) with g in Omega(P,t), beta in {0..k-1}^X whose refinement
// k(g-1)+beta+1 is not order-preserving. Must equal Omega(P,t) k^n - Omega(P,kt).
WitnessReport refinement_witness(const Poset& p, int t, int k, std::size_t max_samples = 4);

// ---- deletion bijection ---------------------------------------------------

// Maps an extension of P - y (values 1..n-1 on the other elements; the entry
// for y is ignored) to an extension g of P whose promotion chain contains y.
Values deletion_lift(const Poset& p, int y, const Values& reduced);
// Inverse of deletion_lift; nullopt when y is not on the promotion chain of g.
std::optional<Values> deletion_lower(const Poset& p, int y, const Values& extension);
// Promotion chain of an extension given in value form.
std::vector<int> promotion_chain_values(const Poset& p, const Values& extension);

// True when the antichain meets every maximal chain.
bool antichain_is_cut(const Poset& p, Mask antichain);

// ---- two-dimensional posets -----------------------------------------------

// For a permutation (0-based values), P = permutation_poset(perm) and
// Q = inversion_poset(perm). `order` is a word listing every element once.
std::pair<Values, Values> sid_beta(const std::vector<int>& perm, const Word& order);
std::optional<Word> sid_beta_inverse(const std::vector<int>& perm, const Values& f, const Values& g);
// Uncovered pairs must number e(P) e(Q) - n!.
WitnessReport sid_witness(const std::vector<int>& perm, std::size_t max_samples = 4);

}  // namespace extlat

#pragma once

#include <functional>
#include <vector>

#include "extlat/arith.hpp"
#include "extlat/poset.hpp"
#include "extlat/qpoly.hpp"

namespace extlat {

// A linear extension as a word: word[p - 1] is the element at position p.
using Word = std::vector<int>;
// Value form of a bijection X -> [n]: values[x] in 1..n.
using Values = std::vector<int>;

Values to_values(const Word& word);
Word to_word(const Values& values);
bool is_linear_extension(const Poset& p, const Word& word);
bool is_order_preserving_values(const Poset& p, const Values& values);  // weak: x < y => v(x) <= v(y)

Count count_extensions(const Poset& p);
// Lexicographic order of words.
std::vector<Word> enumerate_extensions(const Poset& p);
void for_each_extension(const Poset& p, const std::function<void(const Word&)>& visit);
Word first_extension(const Poset& p);

// Positions are 1-based. u[i] must sit at position a[i]. No order or chain
// assumption is made here; any pair list is accepted.
struct RestrictionSpec {
  std::vector<int> u;
  std::vector<int> a;
  friend bool operator==(const RestrictionSpec&, const RestrictionSpec&) = default;
};
Count restricted_count(const Poset& p, const RestrictionSpec& spec);
void for_each_restricted_extension(const Poset& p, const RestrictionSpec& spec,
                                   const std::function<void(const Word&)>& visit);
std::vector<Word> enumerate_restricted_extensions(const Poset& p, const RestrictionSpec& spec);

// counts[m] = number of strict chains of upper ideals from empty to the whole
// poset with m steps (equivalently, surjective order-preserving maps onto [m]).
struct IdealChainProfile {
  std::vector<Count> counts;
};
IdealChainProfile ideal_chain_profile(const Poset& p);

Count order_polynomial(const IdealChainProfile& profile, long t);
Count order_polynomial(const Poset& p, long t);
// Monomial coefficients of the order polynomial, lowest degree first.
std::vector<Rational> order_polynomial_coefficients(const Poset& p);

// Sum over order-preserving g: X -> [t] of q^{sum g(x)} divided by q^n.
QPoly q_order_polynomial(const Poset& p, int t);

// Order-preserving g: X -> [t] with g(x) = a.
Count graham_count(const Poset& p, int t, int x, int a);

// Generating function of order-preserving maps X -> {0,1,2,...} by total
// value, truncated after q^max_degree.
QPoly p_partition_coeffs(const Poset& p, int max_degree);
// prod_x 1 / (1 - q^{upper(x)}), truncated after q^max_degree.
QPoly hook_series_coeffs(const Poset& p, int max_degree);

// sum over k-subsets J of e(P|J) * e(Q|complement of J); P and Q share a ground set.
Count mixed_count(const Poset& p, const Poset& q, int k);

}  // namespace extlat

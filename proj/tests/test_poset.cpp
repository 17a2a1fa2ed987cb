#include <doctest.h>

#include <algorithm>
#include <set>

#include "extlat/arith.hpp"
#include "extlat/caps.hpp"
#include "extlat/generate.hpp"
#include "extlat/poset.hpp"
#include "extlat/poset_io.hpp"
#include "oracles.hpp"

using namespace extlat;

namespace {

std::set<std::vector<Mask>> as_set(const std::vector<Poset>& v) {
  std::set<std::vector<Mask>> s;
  for (const auto& p : v) s.insert(p.above_rows());
  return s;
}

}  // namespace

TEST_CASE("closure and cycle detection") {
  std::vector<std::pair<int, int>> rel{{0, 1}, {1, 2}};
  Poset p = Poset::from_relations(3, rel);
  CHECK(p.less(0, 2));
  CHECK_FALSE(p.less(2, 0));
  CHECK(p.is_chain(p.all()));
  std::vector<std::pair<int, int>> cyc{{0, 1}, {1, 2}, {2, 0}};
  CHECK_THROWS_AS(Poset::from_relations(3, cyc), CycleError);
  std::vector<std::pair<int, int>> self{{1, 1}};
  CHECK_THROWS_AS(Poset::from_relations(2, self), CycleError);
  CHECK_THROWS(Poset::from_closed(2, {bit(1), bit(0)}));
}

TEST_CASE("standard families") {
  CHECK(chain(4).is_chain(full_mask(4)));
  CHECK(antichain(4).is_antichain(full_mask(4)));
  Poset d = diamond();
  CHECK(d.size() == 4);
  CHECK(popcount(d.minimal_elements()) == 1);
  CHECK(popcount(d.maximal_elements()) == 1);
  CHECK(width(d) == 2);
  CHECK(height(d) == 3);
  CHECK(dual(dual(d)) == d);
  CHECK(linear_sum(chain(1), antichain(2)).less(0, 2));
  CHECK(disjoint_sum(chain(2), chain(1)).incomparable(1, 2));
  CHECK(product(chain(2), chain(3)).size() == 6);
  CHECK(product(chain(2), chain(3)).less(0, 5));
}

TEST_CASE("covers, ideals and stats") {
  Poset d = diamond();  // 0 < 1, 2 < 3
  CHECK(d.upper_covers(0) == (bit(1) | bit(2)));
  CHECK(d.lower_covers(3) == (bit(1) | bit(2)));
  CHECK(d.cover_pairs().size() == 4);
  CHECK(element_stats(d, 0).upper == 4);
  CHECK(element_stats(d, 0).lower == 1);
  CHECK(element_stats(d, 3).lower == 4);
  CHECK(interval_count(d, 0, 3) == 2);
  CHECK_THROWS(interval_count(d, 1, 2));
  CHECK(d.is_upset(bit(1) | bit(3)));
  CHECK_FALSE(d.is_upset(bit(1)));
  CHECK(d.is_downset(bit(0) | bit(2)));
  CHECK(d.is_natural_labeling());
  std::vector<int> swap{3, 1, 2, 0};
  CHECK_FALSE(relabel(d, swap).is_natural_labeling());
}

TEST_CASE("restriction and removal") {
  Poset d = diamond();
  Poset r = restrict_to(d, bit(0) | bit(3));
  CHECK(r == chain(2));
  CHECK(remove_elements(d, bit(0) | bit(3)) == antichain(2));
}

TEST_CASE("exhaustive generation matches brute-force relation search") {
  const int known[] = {1, 1, 3, 19, 219, 4231};
  for (int n = 0; n <= 5; ++n) {
    auto gen = enumerate_posets(n);
    CHECK(gen.size() == static_cast<std::size_t>(known[n]));
    CHECK(as_set(gen).size() == gen.size());
    if (n <= 4) CHECK(as_set(gen) == as_set(oracle::all_posets(n)));
  }
  CHECK(enumerate_posets(6).size() == 130023);
}

TEST_CASE("exhaustive generation respects the cap") {
  Caps saved = caps();
  Caps tight = saved;
  tight.exhaustive_poset_n = 3;
  set_caps(tight);
  CHECK_THROWS_AS(enumerate_posets(4), CapExceeded);
  set_caps(saved);
}

TEST_CASE("random posets are deterministic and valid") {
  Poset a = random_poset(8, 0.5, 42), b = random_poset(8, 0.5, 42);
  CHECK(a == b);
  CHECK(random_poset(6, 0.0, 1) == antichain(6));
  CHECK(random_poset(6, 1.0, 1).is_chain(full_mask(6)));
  bool differs = false;
  for (std::uint64_t s = 1; s < 20 && !differs; ++s) differs = random_poset(8, 0.5, s) != a;
  CHECK(differs);
}

TEST_CASE("structural predicates agree with independent definitions") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n)) {
      CHECK(is_series_parallel(p) == oracle::n_free(p));
      CHECK(is_ordered_forest(p) == oracle::downsets_are_chains(p));
      CHECK(width(p) == oracle::width(p));
    }
}

TEST_CASE("permutation posets and their companions") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& perm : all_permutations(n)) {
      Poset p = permutation_poset(perm), q = inversion_poset(perm);
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) CHECK(p.comparable(x, y) != q.comparable(x, y));
      CHECK(common_chain_number(p, q) == 1);
      std::vector<int> flip(n);
      for (int i = 0; i < n; ++i) flip[i] = n - 1 - i;
      std::vector<int> complement(perm.size());
      for (int i = 0; i < n; ++i) complement[i] = n - 1 - perm[i];
      CHECK(q == permutation_poset(complement));
      CHECK(dual(relabel(q, flip)) == reversed_permutation_poset(perm));
    }
  std::vector<int> n_shape{1, 3, 0, 2};
  CHECK_FALSE(is_series_parallel(permutation_poset(n_shape)));
}

TEST_CASE("common chain number") {
  auto all4 = enumerate_posets(4);
  for (std::size_t i = 0; i < all4.size(); i += 7)
    for (std::size_t j = 0; j < all4.size(); j += 11)
      CHECK(common_chain_number(all4[i], all4[j]) == oracle::common_chain(all4[i], all4[j]));
}

TEST_CASE("text round trip") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n)) CHECK(parse_poset(to_text(p)) == p);
  Poset r = random_poset(12, 0.3, 7);
  CHECK(parse_poset(to_text(r)) == r);
  CHECK(to_text(chain(2)) == "poset v1\nn 2\ncover 1 2\n");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_poset(""), ParseError);
  CHECK_THROWS_AS(parse_poset("poset v2\nn 2\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("poset v1\nn 2\ncover 1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("poset v1\nn 2\ncover 1 2\ncover 2 1\n"), CycleError);
  CHECK_THROWS_AS(parse_poset("poset v1\nn x\n"), ParseError);
  CHECK(parse_poset("poset v1  n 3\ncover 1 2\n\ncover 1 2\n").less(0, 1));
  CHECK_THROWS_AS(parse_poset("poset v1\nn 3\nedge 1 2\n"), ParseError);
}

TEST_CASE("describe") {
  CHECK(describe(diamond()) == "4:1<2,1<3,2<4,3<4");
  CHECK(describe(antichain(2)) == "2:");
}

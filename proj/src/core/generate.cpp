#include "extlat/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "extlat/arith.hpp"
#include "extlat/caps.hpp"

namespace extlat {

namespace {

void extend(int n, const std::vector<Mask>& up, const std::vector<Mask>& down, const std::function<void(const Poset&)>& visit) {
  int m = static_cast<int>(up.size());
  if (m == n) {
    visit(Poset::from_closed(n, up));
    return;
  }
  // New element m sits above `lo` and below `hi`.
  std::vector<Mask> downsets, upsets;
  for (Mask s = 0; s <= full_mask(m); ++s) {
    bool is_down = true, is_up = true;
    for (Mask r = s; r; r &= r - 1) {
      int x = std::countr_zero(r);
      if (down[x] & ~s) is_down = false;
      if (up[x] & ~s) is_up = false;
    }
    if (is_down) downsets.push_back(s);
    if (is_up) upsets.push_back(s);
    if (s == full_mask(m)) break;
  }
  for (Mask lo : downsets) {
    for (Mask hi : upsets) {
      if (lo & hi) continue;
      bool ok = true;
      for (Mask r = lo; r && ok; r &= r - 1)
        if (hi & ~up[std::countr_zero(r)]) ok = false;
      if (!ok) continue;
      std::vector<Mask> up2 = up, down2 = down;
      for (Mask r = lo; r; r &= r - 1) up2[std::countr_zero(r)] |= bit(m);
      for (Mask r = hi; r; r &= r - 1) down2[std::countr_zero(r)] |= bit(m);
      up2.push_back(hi);
      down2.push_back(lo);
      extend(n, up2, down2, visit);
    }
  }
}

// Unbiased bounded integer from a 64-bit generator.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do v = rng();
  while (v >= limit);
  return v % bound;
}

}  // namespace

void for_each_poset(int n, const std::function<void(const Poset&)>& visit) {
  if (n < 0) throw std::invalid_argument("negative size");
  if (n > caps().exhaustive_poset_n)
    throw CapExceeded("exhaustive generation capped at n <= " + std::to_string(caps().exhaustive_poset_n));
  extend(n, {}, {}, visit);
}

std::vector<Poset> enumerate_posets(int n) {
  std::vector<Poset> out;
  for_each_poset(n, [&](const Poset& p) { out.push_back(p); });
  return out;
}

Poset random_poset(int n, double density, std::uint64_t seed) {
  if (n < 0 || n > kMaxElements) throw std::invalid_argument("poset size out of range");
  std::mt19937_64 rng(seed);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[bounded(rng, static_cast<std::uint64_t>(i) + 1)]);
  // Compare against a 53-bit uniform draw; identical on every platform.
  auto threshold = static_cast<std::uint64_t>(std::clamp(density, 0.0, 1.0) * 9007199254740992.0);
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((rng() >> 11) < threshold) rel.emplace_back(order[i], order[j]);
  return Poset::from_relations(n, rel);
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace extlat

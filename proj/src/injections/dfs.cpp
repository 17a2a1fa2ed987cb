#include <algorithm>
#include <deque>

#include "deletion.hpp"
#include "extlat/injections.hpp"

namespace extlat {

namespace detail {

Values lift_within(const Poset& p, Mask active, int y, const Values& reduced) {
  Values g(reduced.size(), 0);
  for (Mask r = active & ~bit(y); r; r &= r - 1) {
    int z = std::countr_zero(r);
    g[z] = reduced[z] + 1;
  }
  // Walk down from y, each time to the latest element below; every value on
  // the walk moves up one step and the bottom of the walk becomes first.
  int c = y;
  while (true) {
    int next = -1;
    for (Mask r = p.below(c) & active; r; r &= r - 1) {
      int z = std::countr_zero(r);
      if (next < 0 || reduced[z] > reduced[next]) next = z;
    }
    if (next < 0) {
      g[c] = 1;
      break;
    }
    g[c] = reduced[next] + 1;
    c = next;
  }
  return g;
}

std::vector<int> chain_within(const Poset& p, Mask active, const Values& extension) {
  std::vector<int> chain;
  int c = -1;
  for (Mask r = active; r; r &= r - 1) {
    int z = std::countr_zero(r);
    if (extension[z] == 1) c = z;
  }
  if (c < 0) return chain;
  chain.push_back(c);
  while (true) {
    int next = -1;
    for (Mask r = p.above(c) & active; r; r &= r - 1) {
      int z = std::countr_zero(r);
      if (next < 0 || extension[z] < extension[next]) next = z;
    }
    if (next < 0) break;
    chain.push_back(c = next);
  }
  return chain;
}

std::optional<Values> lower_within(const Poset& p, Mask active, int y, const Values& extension) {
  auto chain = chain_within(p, active, extension);
  auto at = std::find(chain.begin(), chain.end(), y);
  if (at == chain.end()) return std::nullopt;
  Values f(extension.size(), 0);
  for (Mask r = active; r; r &= r - 1) {
    int z = std::countr_zero(r);
    f[z] = extension[z] - 1;
  }
  for (auto it = chain.begin(); it != at; ++it) f[*it] = extension[*std::next(it)] - 1;
  f[y] = 0;
  return f;
}

}  // namespace detail

Values deletion_lift(const Poset& p, int y, const Values& reduced) {
  if (y < 0 || y >= p.size()) throw std::out_of_range("element out of range");
  if (static_cast<int>(reduced.size()) != p.size()) throw std::invalid_argument("size mismatch");
  return detail::lift_within(p, p.all(), y, reduced);
}

std::optional<Values> deletion_lower(const Poset& p, int y, const Values& extension) {
  if (y < 0 || y >= p.size()) throw std::out_of_range("element out of range");
  if (static_cast<int>(extension.size()) != p.size()) throw std::invalid_argument("size mismatch");
  return detail::lower_within(p, p.all(), y, extension);
}

std::vector<int> promotion_chain_values(const Poset& p, const Values& extension) {
  return detail::chain_within(p, p.all(), extension);
}

bool antichain_is_cut(const Poset& p, Mask antichain) {
  antichain &= p.all();
  if (!p.is_antichain(antichain)) throw NotAntichain("set is not an antichain");
  if (p.size() == 0) return false;
  // A maximal chain avoiding the set is a cover path from a minimal to a
  // maximal element through the complement.
  Mask open = p.all() & ~antichain;
  Mask seen = p.minimal_elements() & open;
  std::deque<int> queue;
  for (Mask r = seen; r; r &= r - 1) queue.push_back(std::countr_zero(r));
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    if (!p.above(c)) return false;
    for (Mask r = p.upper_covers(c) & open & ~seen; r; r &= r - 1) {
      int z = std::countr_zero(r);
      seen |= bit(z);
      queue.push_back(z);
    }
  }
  return true;
}

}  // namespace extlat

#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracle {

Rel relation(const Poset& p) {
  int n = p.size();
  Rel r(n, std::vector<bool>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) r[x][y] = p.less(x, y);
  return r;
}

u64 factorial(int n) {
  u64 f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<u64>(i);
  return f;
}

std::vector<std::vector<int>> linear_extensions(const Poset& p) {
  int n = p.size();
  Rel r = relation(p);
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if (r[w[j]][w[i]]) ok = false;
    if (ok) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

u64 extensions(const Poset& p) { return linear_extensions(p).size(); }

namespace {

// Calls visit on every map X -> [lo, hi].
void for_each_map(int n, int lo, int hi, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> v(n, lo);
  while (true) {
    visit(v);
    int i = 0;
    while (i < n && v[i] == hi) v[i++] = lo;
    if (i == n) return;
    ++v[i];
  }
}

bool weakly_preserving(const Rel& r, const std::vector<int>& v) {
  int n = static_cast<int>(v.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (r[x][y] && v[x] > v[y]) return false;
  return true;
}

}  // namespace

u64 order_polynomial(const Poset& p, int t) {
  if (t <= 0) return p.size() == 0 ? 1 : 0;
  Rel r = relation(p);
  u64 c = 0;
  for_each_map(p.size(), 1, t, [&](const std::vector<int>& v) { c += weakly_preserving(r, v); });
  return c;
}

std::vector<u64> q_order_polynomial(const Poset& p, int t) {
  int n = p.size();
  std::vector<u64> c;
  if (t <= 0) {
    if (n == 0) c = {1};
    return c;
  }
  Rel r = relation(p);
  c.assign(static_cast<std::size_t>(n * (t - 1) + 1), 0);
  for_each_map(n, 1, t, [&](const std::vector<int>& v) {
    if (weakly_preserving(r, v)) ++c[std::accumulate(v.begin(), v.end(), 0) - n];
  });
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

u64 restricted_count(const Poset& p, const std::vector<int>& u, const std::vector<int>& a) {
  u64 c = 0;
  for (const auto& w : linear_extensions(p)) {
    bool ok = true;
    for (std::size_t i = 0; i < u.size() && ok; ++i)
      if (a[i] < 1 || a[i] > p.size() || w[a[i] - 1] != u[i]) ok = false;
    c += ok;
  }
  return c;
}

u64 graham(const Poset& p, int t, int x, int a) {
  if (t <= 0) return 0;
  Rel r = relation(p);
  u64 c = 0;
  for_each_map(p.size(), 1, t, [&](const std::vector<int>& v) { c += v[x] == a && weakly_preserving(r, v); });
  return c;
}

std::vector<u64> p_partitions(const Poset& p, int max_degree) {
  std::vector<u64> c(static_cast<std::size_t>(max_degree + 1), 0);
  Rel r = relation(p);
  for_each_map(p.size(), 0, max_degree, [&](const std::vector<int>& v) {
    int s = std::accumulate(v.begin(), v.end(), 0);
    if (s <= max_degree && weakly_preserving(r, v)) ++c[s];
  });
  return c;
}

u64 mixed(const Poset& p, const Poset& q, int k) {
  int n = p.size();
  u64 total = 0;
  for (Mask j = 0; j < (Mask{1} << n); ++j) {
    if (extlat::popcount(j) != k) continue;
    total += extensions(extlat::restrict_to(p, j)) * extensions(extlat::restrict_to(q, extlat::full_mask(n) & ~j));
  }
  return total;
}

std::vector<Poset> all_posets(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) slots.emplace_back(x, y);
  std::vector<Poset> out;
  const u64 limit = u64{1} << slots.size();
  for (u64 s = 0; s < limit; ++s) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((s >> i) & 1u) r[slots[i].first][slots[i].second] = true;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        if (r[x][y] && r[y][x]) ok = false;
        for (int z = 0; z < n && ok; ++z)
          if (r[x][y] && r[y][z] && !r[x][z]) ok = false;
      }
    if (!ok) continue;
    std::vector<Mask> above(n, 0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (r[x][y]) above[x] |= extlat::bit(y);
    out.push_back(Poset::from_closed(n, above));
  }
  return out;
}

bool n_free(const Poset& p) {
  // Induced N: a < c, b < c, b < d, with a, d incomparable, a || b, c || d.
  int n = p.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          if (p.less(a, c) && p.less(b, c) && p.less(b, d) && p.incomparable(a, d) && p.incomparable(a, b) &&
              p.incomparable(c, d))
            return false;
        }
  return true;
}

bool downsets_are_chains(const Poset& p) {
  for (int x = 0; x < p.size(); ++x) {
    Mask d = p.below(x);
    for (int y = 0; y < p.size(); ++y)
      for (int z = 0; z < p.size(); ++z)
        if (y != z && ((d >> y) & 1u) && ((d >> z) & 1u) && p.incomparable(y, z)) return false;
  }
  return true;
}

int width(const Poset& p) {
  int best = 0;
  for (Mask s = 0; s < (Mask{1} << p.size()); ++s) {
    bool anti = true;
    for (int x = 0; x < p.size() && anti; ++x)
      if (((s >> x) & 1u) && (p.above(x) & s)) anti = false;
    if (anti) best = std::max(best, extlat::popcount(s));
  }
  return best;
}

int common_chain(const Poset& p, const Poset& q) {
  int best = 0;
  for (Mask s = 0; s < (Mask{1} << p.size()); ++s) {
    bool ok = true;
    for (int x = 0; x < p.size() && ok; ++x)
      for (int y = x + 1; y < p.size() && ok; ++y)
        if (((s >> x) & 1u) && ((s >> y) & 1u) && (p.incomparable(x, y) || q.incomparable(x, y))) ok = false;
    if (ok) best = std::max(best, extlat::popcount(s));
  }
  return best;
}

bool meets_every_maximal_chain(const Poset& p, Mask a) {
  // A chain is maximal when no element can be added to it.
  int n = p.size();
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    bool chain = true;
    for (int x = 0; x < n && chain; ++x)
      for (int y = x + 1; y < n && chain; ++y)
        if (((s >> x) & 1u) && ((s >> y) & 1u) && p.incomparable(x, y)) chain = false;
    if (!chain) continue;
    bool maximal = true;
    for (int z = 0; z < n && maximal; ++z) {
      if ((s >> z) & 1u) continue;
      bool fits = true;
      for (int x = 0; x < n && fits; ++x)
        if (((s >> x) & 1u) && p.incomparable(x, z)) fits = false;
      if (fits) maximal = false;
    }
    if (maximal && !(s & a)) return false;
  }
  return true;
}

}  // namespace oracle

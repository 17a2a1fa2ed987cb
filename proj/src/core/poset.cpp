#include "extlat/poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace extlat {

namespace {

void check_size(int n) {
  if (n < 0 || n > kMaxElements) throw std::invalid_argument("poset size out of range");
}

// Connected components of the graph restricted to `mask`, adjacency given by adj.
template <class Adj>
std::vector<Mask> components(Mask mask, Adj adj) {
  std::vector<Mask> out;
  while (mask) {
    Mask comp = mask & -mask;
    Mask frontier = comp;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      Mask fresh = adj(v) & mask & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    out.push_back(comp);
    mask &= ~comp;
  }
  return out;
}

bool series_parallel_on(const Poset& p, Mask mask) {
  if (popcount(mask) <= 1) return true;
  auto comparable_adj = [&](int v) { return p.above(v) | p.below(v); };
  auto parts = components(mask, comparable_adj);
  if (parts.size() == 1) {
    auto incomparable_adj = [&](int v) { return ~p.comparable_to(v); };
    parts = components(mask, incomparable_adj);
    if (parts.size() == 1) return false;
  }
  return std::all_of(parts.begin(), parts.end(), [&](Mask m) { return series_parallel_on(p, m); });
}

int max_clique(const std::vector<Mask>& adj, Mask candidates, int size_so_far, int best) {
  if (!candidates) return std::max(best, size_so_far);
  while (candidates) {
    if (size_so_far + popcount(candidates) <= best) return best;
    int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    best = max_clique(adj, candidates & adj[v], size_so_far + 1, best);
  }
  return std::max(best, size_so_far);
}

}  // namespace

Poset::Poset(int n) : n_(n), up_(static_cast<std::size_t>(n), 0), down_(static_cast<std::size_t>(n), 0) {
  check_size(n);
}

Poset Poset::from_relations(int n, std::span<const std::pair<int, int>> less_pairs) {
  check_size(n);
  std::vector<Mask> up(static_cast<std::size_t>(n), 0);
  for (auto [x, y] : less_pairs) {
    if (x < 0 || y < 0 || x >= n || y >= n) throw std::out_of_range("relation element out of range");
    up[x] |= bit(y);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if ((up[i] >> k) & 1u) up[i] |= up[k];
  for (int i = 0; i < n; ++i)
    if ((up[i] >> i) & 1u) throw CycleError("relations contain a cycle through element " + std::to_string(i + 1));
  return from_closed(n, std::move(up));
}

Poset Poset::from_closed(int n, std::vector<Mask> above) {
  check_size(n);
  if (static_cast<int>(above.size()) != n) throw std::invalid_argument("row count mismatch");
  Poset p;
  p.n_ = n;
  p.up_ = std::move(above);
  p.down_.assign(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    if (p.up_[x] & ~full_mask(n)) throw std::invalid_argument("relation outside ground set");
    if ((p.up_[x] >> x) & 1u) throw CycleError("reflexive relation");
    for (Mask m = p.up_[x]; m; m &= m - 1) {
      int y = std::countr_zero(m);
      if (p.up_[y] & ~p.up_[x]) throw std::invalid_argument("relation is not transitively closed");
      p.down_[y] |= bit(x);
    }
  }
  for (int x = 0; x < n; ++x)
    if (p.up_[x] & p.down_[x]) throw CycleError("relation is not antisymmetric");
  return p;
}

Mask Poset::upper_covers(int x) const {
  Mask indirect = 0;
  for (Mask m = up_[x]; m; m &= m - 1) indirect |= up_[std::countr_zero(m)];
  return up_[x] & ~indirect;
}

Mask Poset::lower_covers(int x) const {
  Mask indirect = 0;
  for (Mask m = down_[x]; m; m &= m - 1) indirect |= down_[std::countr_zero(m)];
  return down_[x] & ~indirect;
}

Mask Poset::minimal_elements() const {
  Mask out = 0;
  for (int x = 0; x < n_; ++x)
    if (!down_[x]) out |= bit(x);
  return out;
}

Mask Poset::maximal_elements() const {
  Mask out = 0;
  for (int x = 0; x < n_; ++x)
    if (!up_[x]) out |= bit(x);
  return out;
}

bool Poset::is_upset(Mask m) const {
  for (Mask r = m; r; r &= r - 1)
    if (up_[std::countr_zero(r)] & ~m) return false;
  return true;
}

bool Poset::is_downset(Mask m) const {
  for (Mask r = m; r; r &= r - 1)
    if (down_[std::countr_zero(r)] & ~m) return false;
  return true;
}

bool Poset::is_chain(Mask m) const {
  for (Mask r = m; r; r &= r - 1) {
    int x = std::countr_zero(r);
    if (m & ~comparable_to(x)) return false;
  }
  return true;
}

bool Poset::is_antichain(Mask m) const {
  for (Mask r = m; r; r &= r - 1)
    if (m & up_[std::countr_zero(r)]) return false;
  return true;
}

bool Poset::is_natural_labeling() const {
  for (int x = 0; x < n_; ++x)
    if (up_[x] & full_mask(x + 1)) return false;
  return true;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x)
    for (Mask m = upper_covers(x); m; m &= m - 1) out.emplace_back(x, std::countr_zero(m));
  return out;
}

Poset chain(int n) {
  std::vector<Mask> up(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) up[x] = full_mask(n) & ~full_mask(x + 1);
  return Poset::from_closed(n, std::move(up));
}

Poset antichain(int n) { return Poset(n); }

Poset diamond() { return product(chain(2), chain(2)); }

Poset dual(const Poset& p) {
  std::vector<Mask> up(static_cast<std::size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) up[x] = p.below(x);
  return Poset::from_closed(p.size(), std::move(up));
}

Poset disjoint_sum(const Poset& left, const Poset& right) {
  int a = left.size(), n = a + right.size();
  check_size(n);
  std::vector<Mask> up(static_cast<std::size_t>(n));
  for (int x = 0; x < a; ++x) up[x] = left.above(x);
  for (int y = 0; y < right.size(); ++y) up[a + y] = right.above(y) << a;
  return Poset::from_closed(n, std::move(up));
}

Poset linear_sum(const Poset& left, const Poset& right) {
  int a = left.size(), n = a + right.size();
  check_size(n);
  std::vector<Mask> up(static_cast<std::size_t>(n));
  Mask right_block = full_mask(n) & ~full_mask(a);
  for (int x = 0; x < a; ++x) up[x] = left.above(x) | right_block;
  for (int y = 0; y < right.size(); ++y) up[a + y] = right.above(y) << a;
  return Poset::from_closed(n, std::move(up));
}

Poset product(const Poset& left, const Poset& right) {
  int m = right.size(), n = left.size() * m;
  check_size(n);
  std::vector<Mask> up(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < left.size(); ++x)
    for (int y = 0; y < m; ++y)
      for (int x2 = 0; x2 < left.size(); ++x2)
        for (int y2 = 0; y2 < m; ++y2)
          if (left.leq(x, x2) && right.leq(y, y2) && (x != x2 || y != y2)) up[x * m + y] |= bit(x2 * m + y2);
  return Poset::from_closed(n, std::move(up));
}

Poset restrict_to(const Poset& p, Mask keep) {
  keep &= p.all();
  std::vector<int> index(static_cast<std::size_t>(p.size()), -1);
  int k = 0;
  for (int x = 0; x < p.size(); ++x)
    if ((keep >> x) & 1u) index[x] = k++;
  std::vector<Mask> up(static_cast<std::size_t>(k), 0);
  for (int x = 0; x < p.size(); ++x) {
    if (index[x] < 0) continue;
    for (Mask m = p.above(x) & keep; m; m &= m - 1) up[index[x]] |= bit(index[std::countr_zero(m)]);
  }
  return Poset::from_closed(k, std::move(up));
}

Poset remove_elements(const Poset& p, Mask drop) { return restrict_to(p, p.all() & ~drop); }

Poset relabel(const Poset& p, std::span<const int> new_label) {
  int n = p.size();
  if (static_cast<int>(new_label.size()) != n) throw std::invalid_argument("relabel size mismatch");
  std::vector<Mask> up(static_cast<std::size_t>(n), 0);
  Mask seen = 0;
  for (int x = 0; x < n; ++x) {
    int nx = new_label[x];
    if (nx < 0 || nx >= n || ((seen >> nx) & 1u)) throw std::invalid_argument("relabel is not a bijection");
    seen |= bit(nx);
    for (Mask m = p.above(x); m; m &= m - 1) up[nx] |= bit(new_label[std::countr_zero(m)]);
  }
  return Poset::from_closed(n, std::move(up));
}

namespace {
void check_permutation(std::span<const int> perm) {
  Mask seen = 0;
  int n = static_cast<int>(perm.size());
  check_size(n);
  for (int v : perm) {
    if (v < 0 || v >= n || ((seen >> v) & 1u)) throw std::invalid_argument("not a permutation");
    seen |= bit(v);
  }
}
}  // namespace

Poset permutation_poset(std::span<const int> perm) {
  check_permutation(perm);
  int n = static_cast<int>(perm.size());
  std::vector<Mask> up(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (perm[i] < perm[j]) up[i] |= bit(j);
  return Poset::from_closed(n, std::move(up));
}

Poset reversed_permutation_poset(std::span<const int> perm) {
  std::vector<int> rev(perm.rbegin(), perm.rend());
  return permutation_poset(rev);
}

Poset inversion_poset(std::span<const int> perm) {
  check_permutation(perm);
  int n = static_cast<int>(perm.size());
  std::vector<Mask> up(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (perm[i] > perm[j]) up[i] |= bit(j);
  return Poset::from_closed(n, std::move(up));
}

ElementStats element_stats(const Poset& p, int x) {
  if (x < 0 || x >= p.size()) throw std::out_of_range("element out of range");
  return {popcount(p.below(x)) + 1, popcount(p.above(x)) + 1};
}

int interval_count(const Poset& p, int x, int y) {
  if (x < 0 || y < 0 || x >= p.size() || y >= p.size()) throw std::out_of_range("element out of range");
  if (!p.less(x, y)) throw std::invalid_argument("interval requires x < y");
  return popcount(p.above(x) & p.below(y));
}

int width(const Poset& p) {
  // Dilworth: n minus a maximum matching in the strict-order bipartite graph.
  int n = p.size();
  std::vector<int> match_right(static_cast<std::size_t>(n), -1);
  int matched = 0;
  for (int x = 0; x < n; ++x) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    auto augment = [&](auto&& self, int u) -> bool {
      for (Mask m = p.above(u); m; m &= m - 1) {
        int v = std::countr_zero(m);
        if (seen[v]) continue;
        seen[v] = 1;
        if (match_right[v] < 0 || self(self, match_right[v])) {
          match_right[v] = u;
          return true;
        }
      }
      return false;
    };
    if (augment(augment, x)) ++matched;
  }
  return n - matched;
}

int height(const Poset& p) {
  int n = p.size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return popcount(p.below(a)) < popcount(p.below(b)); });
  std::vector<int> longest(static_cast<std::size_t>(n), 1);
  int best = 0;
  for (int x : order) {
    for (Mask m = p.below(x); m; m &= m - 1) longest[x] = std::max(longest[x], longest[std::countr_zero(m)] + 1);
    best = std::max(best, longest[x]);
  }
  return best;
}

bool is_series_parallel(const Poset& p) { return series_parallel_on(p, p.all()); }

bool is_ordered_forest(const Poset& p) {
  for (int x = 0; x < p.size(); ++x)
    if (popcount(p.lower_covers(x)) > 1) return false;
  return true;
}

StructureReport structure(const Poset& p) {
  return {width(p), height(p), is_series_parallel(p), is_ordered_forest(p), popcount(p.maximal_elements()),
          popcount(p.minimal_elements())};
}

int common_chain_number(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) throw std::invalid_argument("posets on different ground sets");
  int n = p.size();
  std::vector<Mask> adj(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) adj[x] = (p.above(x) | p.below(x)) & (q.above(x) | q.below(x));
  return max_clique(adj, p.all(), 0, 0);
}

std::string describe(const Poset& p) {
  std::ostringstream os;
  os << p.size() << ':';
  bool first = true;
  for (auto [x, y] : p.cover_pairs()) {
    os << (first ? "" : ",") << x + 1 << '<' << y + 1;
    first = false;
  }
  return os.str();
}

}  // namespace extlat

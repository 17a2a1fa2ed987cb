#include "extlat/restricted.hpp"

#include <algorithm>
#include <numeric>

namespace extlat {

std::string to_string(InfeasibleReason r) {
  switch (r) {
    case InfeasibleReason::ElementBetweenAdjacent: return "element-between-adjacent";
    case InfeasibleReason::BoundaryNotExtreme: return "boundary-not-extreme";
    case InfeasibleReason::NotAChain: return "not-a-chain";
  }
  return "unknown";
}

Word NormalizedSpec::lift_word(const Word& reduced_word) const {
  Word out = prefix;
  for (int z : reduced_word) out.insert(out.end(), groups[z].begin(), groups[z].end());
  out.insert(out.end(), suffix.begin(), suffix.end());
  return out;
}

RestrictionSpec sorted_spec(const Poset& p, const RestrictionSpec& spec) {
  if (spec.u.size() != spec.a.size()) throw std::invalid_argument("restriction spec size mismatch");
  std::vector<std::size_t> idx(spec.u.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return spec.a[i] < spec.a[j]; });
  RestrictionSpec out;
  Mask used = 0;
  for (std::size_t i : idx) {
    int x = spec.u[i], a = spec.a[i];
    if (x < 0 || x >= p.size()) throw std::out_of_range("restricted element out of range");
    if (a < 1 || a > p.size()) throw std::out_of_range("restricted position out of range");
    if ((used >> x) & 1u) throw std::invalid_argument("element restricted twice");
    if (!out.a.empty() && out.a.back() == a) throw std::invalid_argument("position restricted twice");
    used |= bit(x);
    out.u.push_back(x);
    out.a.push_back(a);
  }
  return out;
}

namespace {

// Removes element `gone` and renumbers; returns the old -> new index map.
std::vector<int> drop_index(int n, int gone) {
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  for (int x = 0, k = 0; x < n; ++x)
    if (x != gone) map[x] = k++;
  return map;
}

void remove_element(NormalizedSpec& st, int gone, std::size_t spec_entry, int position_shift_from) {
  auto map = drop_index(st.reduced.size(), gone);
  st.reduced = remove_elements(st.reduced, bit(gone));
  std::vector<std::vector<int>> groups;
  for (int x = 0; x < static_cast<int>(st.groups.size()); ++x)
    if (x != gone) groups.push_back(std::move(st.groups[x]));
  st.groups = std::move(groups);
  st.spec.u.erase(st.spec.u.begin() + static_cast<long>(spec_entry));
  st.spec.a.erase(st.spec.a.begin() + static_cast<long>(spec_entry));
  for (auto& u : st.spec.u) u = map[u];
  for (auto& a : st.spec.a)
    if (a > position_shift_from) --a;
}

}  // namespace

std::variant<NormalizedSpec, Infeasible> normalize_spec(const Poset& p, const RestrictionSpec& spec) {
  NormalizedSpec st;
  st.spec = sorted_spec(p, spec);
  for (std::size_t i = 0; i + 1 < st.spec.u.size(); ++i)
    if (!p.less(st.spec.u[i], st.spec.u[i + 1]))
      return Infeasible{InfeasibleReason::NotAChain, "restricted elements are not increasing in position order"};
  st.reduced = p;
  for (int x = 0; x < p.size(); ++x) st.groups.push_back({x});

  // Adjacent positions: the two elements must be consecutive, so contract them.
  for (std::size_t i = 0; i + 1 < st.spec.u.size();) {
    if (st.spec.a[i] + 1 != st.spec.a[i + 1]) {
      ++i;
      continue;
    }
    const Poset& q = st.reduced;
    int lo = st.spec.u[i], hi = st.spec.u[i + 1];
    if (q.above(lo) & q.below(hi))
      return Infeasible{InfeasibleReason::ElementBetweenAdjacent, "an element lies between restricted neighbours"};
    auto map = drop_index(q.size(), hi);
    map[hi] = map[lo];
    std::vector<std::pair<int, int>> rel;
    for (int x = 0; x < q.size(); ++x)
      for (Mask r = q.above(x); r; r &= r - 1) {
        int y = std::countr_zero(r);
        if (map[x] != map[y]) rel.emplace_back(map[x], map[y]);
      }
    Poset merged = Poset::from_relations(q.size() - 1, rel);
    st.groups[lo].insert(st.groups[lo].end(), st.groups[hi].begin(), st.groups[hi].end());
    std::vector<std::vector<int>> groups;
    for (int x = 0; x < q.size(); ++x)
      if (x != hi) groups.push_back(std::move(st.groups[x]));
    st.groups = std::move(groups);
    int pos = st.spec.a[i];
    st.spec.u.erase(st.spec.u.begin() + static_cast<long>(i) + 1);
    st.spec.a.erase(st.spec.a.begin() + static_cast<long>(i) + 1);
    for (auto& u : st.spec.u) u = map[u];
    for (auto& a : st.spec.a)
      if (a > pos) --a;
    st.reduced = std::move(merged);
  }

  while (!st.spec.u.empty() && st.spec.a.front() == 1) {
    int x = st.spec.u.front();
    if (st.reduced.below(x))
      return Infeasible{InfeasibleReason::BoundaryNotExtreme, "first position needs a minimal element"};
    st.prefix.insert(st.prefix.end(), st.groups[x].begin(), st.groups[x].end());
    remove_element(st, x, 0, 0);
  }
  while (!st.spec.u.empty() && st.spec.a.back() == st.reduced.size()) {
    int x = st.spec.u.back();
    if (st.reduced.above(x))
      return Infeasible{InfeasibleReason::BoundaryNotExtreme, "last position needs a maximal element"};
    st.suffix.insert(st.suffix.begin(), st.groups[x].begin(), st.groups[x].end());
    remove_element(st, x, st.spec.u.size() - 1, st.reduced.size());
  }
  return st;
}

namespace {

// Adds a bottom and a top element and pins them to the first and last
// positions; the vanishing test then reads a_j - a_i > h(u_i, u_j) for all pairs.
bool spacing_condition(const Poset& q, const RestrictionSpec& spec) {
  int m = q.size();
  std::vector<std::pair<int, int>> rel;
  for (auto [x, y] : q.cover_pairs()) rel.emplace_back(x, y);
  for (int x = 0; x < m; ++x) {
    rel.emplace_back(m, x);
    rel.emplace_back(x, m + 1);
  }
  rel.emplace_back(m, m + 1);
  Poset bounded = Poset::from_relations(m + 2, rel);
  std::vector<int> u{m}, a{1};
  for (std::size_t i = 0; i < spec.u.size(); ++i) {
    u.push_back(spec.u[i]);
    a.push_back(spec.a[i] + 1);
  }
  u.push_back(m + 1);
  a.push_back(m + 2);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (a[j] - a[i] <= interval_count(bounded, u[i], u[j])) return false;
  return true;
}

}  // namespace

bool vanishing_decide(const Poset& p, const RestrictionSpec& spec) {
  auto norm = normalize_spec(p, spec);
  if (auto* bad = std::get_if<Infeasible>(&norm)) {
    if (bad->reason == InfeasibleReason::NotAChain) throw std::domain_error(bad->detail);
    return false;
  }
  const auto& st = std::get<NormalizedSpec>(norm);
  return spacing_condition(st.reduced, st.spec);
}

namespace {

class Mover {
 public:
  Mover(const Poset& q, Word word, long& steps) : q_(q), w_(std::move(word)), steps_(steps) {}

  int position(int x) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      ++steps_;
      if (w_[i] == x) return static_cast<int>(i) + 1;
    }
    throw std::logic_error("element missing from word");
  }
  int at(int pos) const { return w_[pos - 1]; }
  const Word& word() const { return w_; }

  // Element at `from` travels up to `to` (from < to), everything between shifts down.
  void carry_up(int from, int to) {
    for (int k = from; k < to; ++k) swap_checked(k);
  }
  // Element at `from` travels down to `to` (from > to).
  void carry_down(int from, int to) {
    for (int k = from - 1; k >= to; --k) swap_checked(k);
  }

  int first_incomparable_after(int pos, int x) const {
    for (int k = pos + 1; k <= static_cast<int>(w_.size()); ++k) {
      ++steps_;
      if (q_.incomparable(at(k), x)) return k;
    }
    throw std::logic_error("no incomparable element after position");
  }
  int last_incomparable_before(int pos, int x) const {
    for (int k = pos - 1; k >= 1; --k) {
      ++steps_;
      if (q_.incomparable(at(k), x)) return k;
    }
    throw std::logic_error("no incomparable element before position");
  }

 private:
  void swap_checked(int k) {
    ++steps_;
    if (!q_.incomparable(w_[k - 1], w_[k])) throw std::logic_error("blocked transposition while moving");
    std::swap(w_[k - 1], w_[k]);
  }

  const Poset& q_;
  Word w_;
  long& steps_;
};

int first_above(const std::vector<int>& a, int limit, int pos) {
  for (int r = 0; r < limit; ++r)
    if (pos < a[r]) return r;
  return limit;
}

Word construct(const Poset& q, const RestrictionSpec& spec, long& steps) {
  Word base = first_extension(q);
  if (spec.u.empty()) return base;
  const auto& u = spec.u;
  const auto& a = spec.a;
  int k = static_cast<int>(u.size());

  // First restricted element: its strict down-set, then the incomparables,
  // then its strict up-set, with the element inserted at its position.
  Word w, mid, top;
  for (int z : base) {
    if (z == u[0]) continue;
    if (q.less(z, u[0])) w.push_back(z);
    else if (q.less(u[0], z)) top.push_back(z);
    else mid.push_back(z);
  }
  w.insert(w.end(), mid.begin(), mid.end());
  w.insert(w.end(), top.begin(), top.end());
  w.insert(w.begin() + (a[0] - 1), u[0]);
  Mover mv(q, w, steps);

  for (int j = 1; j < k; ++j) {
    int x = u[j];
    int p;
    while ((p = mv.position(x)) != a[j]) {
      if (p < a[j]) {
        mv.carry_down(mv.first_incomparable_after(p, x), p);
      } else {
        int i0 = mv.last_incomparable_before(p, x);
        if (i0 > a[j - 1]) {
          mv.carry_up(i0, p);
        } else {
          // The incomparable element sits below some earlier restricted
          // positions. Carry it past x, then restore each displaced
          // restricted element with the first element after it that it
          // does not compare to.
          int r = first_above(a, j, i0);
          std::vector<int> repair(static_cast<std::size_t>(k), 0);
          for (int t = r; t < j; ++t) {
            repair[t] = mv.first_incomparable_after(a[t], u[t]);
            if (repair[t] >= p) throw std::logic_error("repair element beyond moving element");
          }
          mv.carry_up(i0, p);
          int cur = r;
          while (true) {
            mv.carry_down(repair[cur] - 1, a[cur] - 1);
            if (repair[cur] > a[j - 1]) break;
            cur = first_above(a, j, repair[cur]);
          }
        }
      }
      int now = mv.position(x);
      if (std::abs(now - p) != 1) throw std::logic_error("restricted element did not move by one");
      for (int t = 0; t < j; ++t)
        if (mv.at(a[t]) != u[t]) throw std::logic_error("earlier restricted element displaced");
    }
  }
  return mv.word();
}

}  // namespace

Word restricted_find(const Poset& p, const RestrictionSpec& spec, FindStats* stats) {
  auto norm = normalize_spec(p, spec);
  if (auto* bad = std::get_if<Infeasible>(&norm)) {
    if (bad->reason == InfeasibleReason::NotAChain) throw std::domain_error(bad->detail);
    throw NoExtension(bad->detail);
  }
  const auto& st = std::get<NormalizedSpec>(norm);
  if (!spacing_condition(st.reduced, st.spec)) throw NoExtension("spacing condition fails");
  long steps = 0;
  Word w = st.lift_word(construct(st.reduced, st.spec, steps));
  if (stats) stats->steps = steps;
  return w;
}

bool uniqueness_decide(const Poset& p, const RestrictionSpec& spec, const Word& f) {
  RestrictionSpec s = sorted_spec(p, spec);
  int n = p.size();
  if (!is_linear_extension(p, f)) throw std::invalid_argument("word is not a linear extension");
  for (std::size_t i = 0; i < s.u.size(); ++i)
    if (f[s.a[i] - 1] != s.u[i]) throw std::invalid_argument("word violates the restriction");
  std::vector<int> a{0};
  a.insert(a.end(), s.a.begin(), s.a.end());
  a.push_back(n + 1);
  int k = static_cast<int>(s.u.size());
  // Every stretch between consecutive fixed positions is a chain.
  for (int i = 0; i <= k; ++i) {
    Mask gap = 0;
    for (int pos = a[i] + 1; pos < a[i + 1]; ++pos) gap |= bit(f[pos - 1]);
    if (!p.is_chain(gap)) return false;
  }
  // No pair of neighbours outside a run of fixed blocks can swap across it.
  for (int i = 1; i <= k; ++i) {
    if (a[i] - 1 < 1) continue;
    int v = f[a[i] - 2];
    for (int j = i; j <= k; ++j) {
      if (a[j] + 1 > n) continue;
      int w = f[a[j]];
      if (!p.incomparable(v, w)) continue;
      bool free = true;
      for (int pos = a[i]; pos <= a[j] && free; ++pos) {
        int z = f[pos - 1];
        if (!p.incomparable(v, z) || !p.incomparable(w, z)) free = false;
      }
      if (free) return false;
    }
  }
  return true;
}

bool is_unique(const Poset& p, const RestrictionSpec& spec) {
  if (!vanishing_decide(p, spec)) return false;
  return uniqueness_decide(p, spec, restricted_find(p, spec));
}

}  // namespace extlat

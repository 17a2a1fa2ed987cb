#include <algorithm>
#include <unordered_map>

#include "extlat/caps.hpp"
#include "extlat/counting.hpp"

namespace extlat {

Values to_values(const Word& word) {
  Values v(word.size(), 0);
  for (std::size_t i = 0; i < word.size(); ++i) v[word[i]] = static_cast<int>(i) + 1;
  return v;
}

Word to_word(const Values& values) {
  Word w(values.size(), -1);
  for (std::size_t x = 0; x < values.size(); ++x) w[values[x] - 1] = static_cast<int>(x);
  return w;
}

bool is_linear_extension(const Poset& p, const Word& word) {
  if (static_cast<int>(word.size()) != p.size()) return false;
  Mask placed = 0;
  for (int x : word) {
    if (x < 0 || x >= p.size() || ((placed >> x) & 1u)) return false;
    if (p.below(x) & ~placed) return false;
    placed |= bit(x);
  }
  return true;
}

bool is_order_preserving_values(const Poset& p, const Values& values) {
  if (static_cast<int>(values.size()) != p.size()) return false;
  for (int x = 0; x < p.size(); ++x)
    for (Mask m = p.above(x); m; m &= m - 1)
      if (values[x] > values[std::countr_zero(m)]) return false;
  return true;
}

namespace {

// Counts words built one position at a time; `allowed(pos, x)` filters which
// element may occupy 1-based position pos.
template <class Allowed>
Count count_paths(const Poset& p, Allowed allowed) {
  int n = p.size();
  if (n <= 16) {
    std::vector<Count> dp(std::size_t{1} << n);
    dp[0] = 1;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      if (dp[s] == 0) continue;
      int pos = popcount(s) + 1;
      for (Mask free = p.all() & ~s; free; free &= free - 1) {
        int x = std::countr_zero(free);
        if ((p.below(x) & ~s) == 0 && allowed(pos, x)) dp[s | bit(x)] += dp[s];
      }
    }
    return dp[p.all()];
  }
  std::unordered_map<Mask, Count> layer{{0, 1}};
  for (int pos = 1; pos <= n; ++pos) {
    std::unordered_map<Mask, Count> next;
    for (const auto& [s, c] : layer) {
      for (Mask free = p.all() & ~s; free; free &= free - 1) {
        int x = std::countr_zero(free);
        if ((p.below(x) & ~s) == 0 && allowed(pos, x)) next[s | bit(x)] += c;
      }
    }
    if (next.size() > caps().ideal_states) throw CapExceeded("lower ideal layer exceeds cap");
    layer = std::move(next);
  }
  auto it = layer.find(p.all());
  return it == layer.end() ? Count(0) : it->second;
}

template <class Allowed>
void walk(const Poset& p, Allowed& allowed, Mask placed, Word& word, const std::function<void(const Word&)>& visit) {
  if (static_cast<int>(word.size()) == p.size()) {
    visit(word);
    return;
  }
  int pos = static_cast<int>(word.size()) + 1;
  for (Mask free = p.all() & ~placed; free; free &= free - 1) {
    int x = std::countr_zero(free);
    if ((p.below(x) & ~placed) || !allowed(pos, x)) continue;
    word.push_back(x);
    walk(p, allowed, placed | bit(x), word, visit);
    word.pop_back();
  }
}

// Position table for a restriction; -1 where unconstrained. Returns false when
// the restriction is self-contradictory or out of range.
bool position_tables(const Poset& p, const RestrictionSpec& spec, std::vector<int>& pos_of, std::vector<int>& at_pos) {
  if (spec.u.size() != spec.a.size()) throw std::invalid_argument("restriction spec size mismatch");
  int n = p.size();
  pos_of.assign(static_cast<std::size_t>(n), -1);
  at_pos.assign(static_cast<std::size_t>(n) + 2, -1);
  for (std::size_t i = 0; i < spec.u.size(); ++i) {
    int x = spec.u[i], a = spec.a[i];
    if (x < 0 || x >= n) throw std::out_of_range("restricted element out of range");
    if (a < 1 || a > n) return false;
    if (pos_of[x] >= 0 && pos_of[x] != a) return false;
    if (at_pos[a] >= 0 && at_pos[a] != x) return false;
    pos_of[x] = a;
    at_pos[a] = x;
  }
  return true;
}

}  // namespace

Count count_extensions(const Poset& p) {
  return count_paths(p, [](int, int) { return true; });
}

void for_each_extension(const Poset& p, const std::function<void(const Word&)>& visit) {
  Word word;
  word.reserve(static_cast<std::size_t>(p.size()));
  auto any = [](int, int) { return true; };
  walk(p, any, 0, word, visit);
}

std::vector<Word> enumerate_extensions(const Poset& p) {
  std::vector<Word> out;
  for_each_extension(p, [&](const Word& w) { out.push_back(w); });
  return out;
}

Word first_extension(const Poset& p) {
  Word w;
  Mask placed = 0;
  for (int pos = 0; pos < p.size(); ++pos) {
    for (Mask free = p.all() & ~placed; free; free &= free - 1) {
      int x = std::countr_zero(free);
      if ((p.below(x) & ~placed) == 0) {
        w.push_back(x);
        placed |= bit(x);
        break;
      }
    }
  }
  return w;
}

Count restricted_count(const Poset& p, const RestrictionSpec& spec) {
  std::vector<int> pos_of, at_pos;
  if (!position_tables(p, spec, pos_of, at_pos)) return 0;
  return count_paths(p, [&](int pos, int x) { return pos_of[x] >= 0 ? pos_of[x] == pos : at_pos[pos] < 0; });
}

void for_each_restricted_extension(const Poset& p, const RestrictionSpec& spec,
                                   const std::function<void(const Word&)>& visit) {
  std::vector<int> pos_of, at_pos;
  if (!position_tables(p, spec, pos_of, at_pos)) return;
  auto allowed = [&](int pos, int x) { return pos_of[x] >= 0 ? pos_of[x] == pos : at_pos[pos] < 0; };
  Word word;
  walk(p, allowed, 0, word, visit);
}

std::vector<Word> enumerate_restricted_extensions(const Poset& p, const RestrictionSpec& spec) {
  std::vector<Word> out;
  for_each_restricted_extension(p, spec, [&](const Word& w) { out.push_back(w); });
  return out;
}

Count mixed_count(const Poset& p, const Poset& q, int k) {
  if (p.size() != q.size()) throw std::invalid_argument("posets on different ground sets");
  int n = p.size();
  if (k < 0 || k > n) return 0;
  Count total = 0;
  for (Mask j = 0; j <= p.all(); ++j) {
    if (popcount(j) == k) total += count_extensions(restrict_to(p, j)) * count_extensions(restrict_to(q, p.all() & ~j));
    if (j == p.all()) break;
  }
  return total;
}

}  // namespace extlat

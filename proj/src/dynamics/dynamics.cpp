#include "extlat/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace extlat {

namespace {

void check_position(int pos, int n) {
  if (pos < 1 || pos > n) throw std::out_of_range("position " + std::to_string(pos) + " outside 1.." + std::to_string(n));
}

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : w) h = (h ^ static_cast<std::size_t>(x + 1)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

std::string Generator::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Tau: os << "tau(" << first << ")"; break;
    case Kind::TauPair: os << "tau(" << first << "," << second << ")"; break;
    case Kind::Sigma: os << "sigma@" << first; break;
    case Kind::DeltaUp: os << "delta(" << first << "->" << second << ")"; break;
    case Kind::DeltaDown: os << "delta(" << first << "<-" << second << ")"; break;
  }
  return os.str();
}

Word apply_tau(const Poset& p, Word word, int i) {
  int n = static_cast<int>(word.size());
  check_position(i, n);
  check_position(i + 1, n);
  if (p.incomparable(word[i - 1], word[i])) std::swap(word[i - 1], word[i]);
  return word;
}

Word apply_generator(const Poset& p, const Word& word, const Generator& g) {
  int n = static_cast<int>(word.size());
  switch (g.kind) {
    case Generator::Kind::Tau:
      return apply_tau(p, word, g.first);
    case Generator::Kind::TauPair: {
      int i = g.first, j = g.second;
      check_position(i, n);
      check_position(j, n);
      if (i >= j) throw std::invalid_argument("tau pair needs i < j");
      int xi = word[i - 1], xj = word[j - 1];
      if (!p.incomparable(xi, xj)) return word;
      for (int k = i + 1; k < j; ++k)
        if (!p.incomparable(xi, word[k - 1]) || !p.incomparable(xj, word[k - 1])) return word;
      Word out = word;
      std::swap(out[i - 1], out[j - 1]);
      return out;
    }
    case Generator::Kind::Sigma: {
      int j = g.first;
      check_position(j - 1, n);
      check_position(j + 1, n);
      int a = word[j - 2], b = word[j - 1], c = word[j];
      if (!p.incomparable(a, b) || !p.incomparable(a, c) || !p.incomparable(b, c)) return word;
      Word out = word;
      std::swap(out[j - 2], out[j]);
      return out;
    }
    case Generator::Kind::DeltaUp: {
      check_position(g.first, n);
      check_position(g.second, n);
      Word out = word;
      for (int k = g.first; k < g.second; ++k) out = apply_tau(p, std::move(out), k);
      return out;
    }
    case Generator::Kind::DeltaDown: {
      check_position(g.first, n);
      check_position(g.second, n);
      Word out = word;
      for (int k = g.first - 1; k >= g.second; --k) out = apply_tau(p, std::move(out), k);
      return out;
    }
  }
  return word;
}

Word apply_generators(const Poset& p, Word word, std::span<const Generator> gens) {
  for (const auto& g : gens) word = apply_generator(p, word, g);
  return word;
}

Word promote_prefix(const Poset& p, const Word& word, int prefix) {
  Word out = word;
  for (int k = 1; k < prefix; ++k) out = apply_tau(p, std::move(out), k);
  return out;
}

Word promote(const Poset& p, const Word& word) { return promote_prefix(p, word, static_cast<int>(word.size())); }

Word evacuate(const Poset& p, const Word& word) {
  Word out = word;
  for (int k = static_cast<int>(word.size()); k >= 2; --k) out = promote_prefix(p, out, k);
  return out;
}

// Evacuation conjugates promotion to its inverse.
Word demote(const Poset& p, const Word& word) { return evacuate(p, promote(p, evacuate(p, word))); }

std::vector<int> promotion_chain(const Poset& p, const Word& word) {
  std::vector<int> chain;
  if (word.empty()) return chain;
  Values pos = to_values(word);
  int c = word[0];
  chain.push_back(c);
  while (p.above(c)) {
    int best = -1;
    for (Mask m = p.above(c); m; m &= m - 1) {
      int y = std::countr_zero(m);
      if (best < 0 || pos[y] < pos[best]) best = y;
    }
    c = best;
    chain.push_back(c);
  }
  return chain;
}

std::vector<Generator> adjacent_generators(int n) {
  std::vector<Generator> out;
  for (int i = 1; i < n; ++i) out.push_back(Generator::tau(i));
  return out;
}

namespace {
bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }
}  // namespace

std::vector<Generator> fixed_position_generators(int n, const std::vector<int>& fixed) {
  std::vector<Generator> out;
  for (int i = 1; i < n; ++i)
    if (!contains(fixed, i) && !contains(fixed, i + 1)) out.push_back(Generator::tau(i));
  for (int a : fixed)
    if (a >= 2 && a <= n - 1) out.push_back(Generator::sigma(a));
  return out;
}

std::vector<Generator> pair_generators(int n, const std::vector<int>& fixed) {
  std::vector<Generator> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!contains(fixed, i) && !contains(fixed, j)) out.push_back(Generator::tau_pair(i, j));
  return out;
}

OrbitReport orbits(const Poset& p, const std::vector<Word>& seeds, std::span<const Generator> gens, std::size_t limit) {
  OrbitReport rep;
  std::unordered_map<Word, std::size_t, WordHash> orbit_of;
  for (const auto& seed : seeds) {
    if (orbit_of.count(seed)) continue;
    std::size_t id = rep.orbit_count++;
    std::size_t size = 0;
    std::deque<Word> queue{seed};
    orbit_of.emplace(seed, id);
    while (!queue.empty()) {
      Word w = std::move(queue.front());
      queue.pop_front();
      ++size;
      for (const auto& g : gens) {
        Word nxt = apply_generator(p, w, g);
        if (orbit_of.emplace(nxt, id).second) {
          if (orbit_of.size() > limit) throw CapExceeded("orbit computation exceeds state cap");
          queue.push_back(std::move(nxt));
        }
      }
    }
    rep.orbit_sizes.push_back(size);
  }
  rep.states = orbit_of.size();
  return rep;
}

}  // namespace extlat

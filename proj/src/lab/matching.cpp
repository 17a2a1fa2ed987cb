#include <algorithm>
#include <map>

#include "extlat/audit.hpp"
#include "extlat/caps.hpp"
#include "extlat/counting.hpp"
#include "extlat/dynamics.hpp"

namespace extlat {

namespace {

std::vector<Word> pinned_words(const Poset& p, int x, int a) {
  if (a < 1 || a > p.size()) return {};
  return enumerate_restricted_extensions(p, RestrictionSpec{{x}, {a}});
}

int position_of(const Word& w, int x) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == x) return static_cast<int>(i) + 1;
  return 0;
}

// y at position i slides towards the front; blocked elements take over.
Word demote_from(const Poset& p, Word w, int i) {
  for (int s = i - 1; s >= 1; --s) w = apply_tau(p, std::move(w), s);
  return w;
}

// y at position j slides towards the back.
Word promote_from(const Poset& p, Word w, int j) {
  for (int s = j; s < p.size(); ++s) w = apply_tau(p, std::move(w), s);
  return w;
}

struct Bipartite {
  std::vector<std::vector<std::size_t>> adj;  // right vertex -> left vertices
  std::vector<long> owner;                    // left vertex -> right vertex or -1
  std::vector<char> seen;

  bool augment(std::size_t r) {
    for (std::size_t l : adj[r]) {
      if (seen[l]) continue;
      seen[l] = 1;
      if (owner[l] < 0 || augment(static_cast<std::size_t>(owner[l]))) {
        owner[l] = static_cast<long>(r);
        return true;
      }
    }
    return false;
  }
};

}  // namespace

MatchingReport matching_check(const Poset& p, int x, int a) {
  if (x < 0 || x >= p.size()) throw std::out_of_range("element out of range");
  std::vector<Word> mid = pinned_words(p, x, a);
  std::vector<Word> before = pinned_words(p, x, a - 1);
  std::vector<Word> after = pinned_words(p, x, a + 1);

  MatchingReport rep;
  rep.left = mid.size() * mid.size();
  rep.right = before.size() * after.size();
  if (rep.left + rep.right > caps().matching_vertices)
    throw CapExceeded("matching graph exceeds " + std::to_string(caps().matching_vertices) + " vertices");
  if (rep.right == 0) return rep;

  std::map<Word, std::size_t> mid_index;
  for (std::size_t i = 0; i < mid.size(); ++i) mid_index.emplace(mid[i], i);

  Bipartite g;
  g.adj.resize(rep.right);
  for (std::size_t bi = 0; bi < before.size(); ++bi)
    for (std::size_t ai = 0; ai < after.size(); ++ai) {
      const Word& pi = before[bi];
      const Word& sigma = after[ai];
      auto& edges = g.adj[bi * after.size() + ai];
      for (int y = 0; y < p.size(); ++y) {
        int i = position_of(pi, y), j = position_of(sigma, y);
        if (y == x || i <= a - 1 || j >= a + 1) continue;
        Word left = demote_from(p, pi, i);
        Word right = promote_from(p, sigma, j);
        auto l = mid_index.find(left), r = mid_index.find(right);
        if (l == mid_index.end() || r == mid_index.end()) continue;
        edges.push_back(l->second * mid.size() + r->second);
      }
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
      rep.edges += edges.size();
      if (edges.empty()) ++rep.isolated_right;
    }

  g.owner.assign(rep.left, -1);
  for (std::size_t r = 0; r < rep.right; ++r) {
    g.seen.assign(rep.left, 0);
    if (g.augment(r)) ++rep.matching;
  }
  return rep;
}

}  // namespace extlat

#include <functional>

#include "extlat/counting.hpp"
#include "upsets.hpp"

namespace extlat {

namespace {

using detail::build_upset_lattice;
using detail::UpsetLattice;

// Weakly decreasing chains X = J_1 >= J_2 >= ... >= J_t of upper ideals;
// J_s = {x : g(x) >= s}. Each J_s for s >= 2 contributes q^{|J_s|}.
// `permit(s, J)` may veto an ideal at level s.
QPoly weak_chain_sum(const Poset& p, int t, const std::function<bool(int, Mask)>& permit) {
  if (t < 1) return p.size() == 0 ? QPoly(1) : QPoly();
  UpsetLattice lat = build_upset_lattice(p);
  std::vector<QPoly> cur(lat.sets.size());
  if (permit(1, p.all())) cur[lat.whole] = 1;
  for (int s = 2; s <= t; ++s) {
    std::vector<QPoly> next(lat.sets.size());
    for (std::size_t u = 0; u < lat.sets.size(); ++u) {
      if (cur[u].is_zero()) continue;
      for (int v : lat.contained[u]) {
        if (!permit(s, lat.sets[v])) continue;
        next[v] += cur[u].shifted(popcount(lat.sets[v]));
      }
    }
    cur = std::move(next);
  }
  QPoly total;
  for (const auto& c : cur) total += c;
  return total;
}

}  // namespace

IdealChainProfile ideal_chain_profile(const Poset& p) {
  int n = p.size();
  UpsetLattice lat = build_upset_lattice(p);
  IdealChainProfile prof;
  prof.counts.assign(static_cast<std::size_t>(n) + 1, 0);
  // chains[v] = strict chains from the empty ideal (index 0) ending at v.
  std::vector<Count> chains(lat.sets.size(), 0);
  chains[0] = 1;
  prof.counts[0] = (n == 0) ? 1 : 0;
  for (int m = 1; m <= n; ++m) {
    std::vector<Count> next(lat.sets.size(), 0);
    for (std::size_t v = 0; v < lat.sets.size(); ++v)
      for (int u : lat.contained[v])
        if (u != static_cast<int>(v)) next[v] += chains[u];
    chains = std::move(next);
    prof.counts[m] = chains[lat.whole];
  }
  return prof;
}

Count order_polynomial(const IdealChainProfile& profile, long t) {
  Count total = 0;
  for (std::size_t m = 0; m < profile.counts.size(); ++m)
    if (profile.counts[m] != 0) total += profile.counts[m] * binomial(t, static_cast<long>(m));
  return total;
}

Count order_polynomial(const Poset& p, long t) { return order_polynomial(ideal_chain_profile(p), t); }

std::vector<Rational> order_polynomial_coefficients(const Poset& p) {
  IdealChainProfile prof = ideal_chain_profile(p);
  int n = p.size();
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1, 0);
  // falling[i] holds the coefficients of t(t-1)...(t-m+1).
  std::vector<Rational> falling{1};
  for (int m = 0; m <= n; ++m) {
    if (m > 0) {
      std::vector<Rational> next(falling.size() + 1, 0);
      for (std::size_t i = 0; i < falling.size(); ++i) {
        next[i + 1] += falling[i];
        next[i] -= falling[i] * (m - 1);
      }
      falling = std::move(next);
    }
    Rational scale = Rational(prof.counts[m]) / Rational(factorial(m));
    for (std::size_t i = 0; i < falling.size(); ++i) out[i] += falling[i] * scale;
  }
  for (auto& c : out) c.canonicalize();
  return out;
}

QPoly q_order_polynomial(const Poset& p, int t) {
  return weak_chain_sum(p, t, [](int, Mask) { return true; });
}

Count graham_count(const Poset& p, int t, int x, int a) {
  if (x < 0 || x >= p.size()) throw std::out_of_range("element out of range");
  if (a < 1 || a > t) return 0;
  return weak_chain_sum(p, t, [&](int s, Mask j) { return (((j >> x) & 1u) != 0) == (s <= a); }).at_one();
}

QPoly p_partition_coeffs(const Poset& p, int max_degree) {
  UpsetLattice lat = build_upset_lattice(p);
  std::vector<QPoly> cur(lat.sets.size());
  cur[lat.whole] = 1;
  QPoly total = 1;
  // Each nonempty level adds at least one to the weight.
  for (int step = 1; step <= max_degree; ++step) {
    std::vector<QPoly> next(lat.sets.size());
    bool any = false;
    for (std::size_t u = 0; u < lat.sets.size(); ++u) {
      if (cur[u].is_zero()) continue;
      for (int v : lat.contained[u]) {
        int size = popcount(lat.sets[v]);
        if (size == 0) continue;
        QPoly add = cur[u].shifted(size).truncated(max_degree);
        if (add.is_zero()) continue;
        next[v] += add;
        any = true;
      }
    }
    for (const auto& c : next) total += c;
    cur = std::move(next);
    if (!any) break;
  }
  return total.truncated(max_degree);
}

QPoly hook_series_coeffs(const Poset& p, int max_degree) {
  QPoly total = 1;
  for (int x = 0; x < p.size(); ++x) {
    int b = element_stats(p, x).upper;
    std::vector<Count> geo(static_cast<std::size_t>(max_degree) + 1, 0);
    for (int d = 0; d <= max_degree; d += b) geo[d] = 1;
    total = multiply_truncated(total, QPoly(std::move(geo)), max_degree);
  }
  return total;
}

}  // namespace extlat

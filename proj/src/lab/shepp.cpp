#include <algorithm>
#include <random>

#include "extlat/audit.hpp"
#include "extlat/caps.hpp"
#include "extlat/counting.hpp"

namespace extlat {

namespace {

using Coord = std::uint32_t;

// Points of [t]^n stored flat, n coordinates each.
struct Lattice {
  int n = 0;
  Mask y_block = 0;
  std::vector<Coord> store;

  const Coord* at(std::size_t i) const { return store.data() + i * static_cast<std::size_t>(n); }
  bool in_y(int x) const { return (y_block >> x) & 1u; }

  bool leq(const Coord* v, const Coord* w) const {
    for (int x = 0; x < n; ++x)
      if (in_y(x) ? v[x] > w[x] : v[x] < w[x]) return false;
    return true;
  }
  void meet(const Coord* v, const Coord* w, Coord* out) const {
    for (int x = 0; x < n; ++x) out[x] = in_y(x) ? std::min(v[x], w[x]) : std::max(v[x], w[x]);
  }
  void join(const Coord* v, const Coord* w, Coord* out) const {
    for (int x = 0; x < n; ++x) out[x] = in_y(x) ? std::max(v[x], w[x]) : std::min(v[x], w[x]);
  }
};

// Relations through the other block count too, so use the full order.
bool in_support(const Poset& p, Mask y_block, const Coord* v) {
  for (int x = 0; x < p.size(); ++x) {
    Mask same = ((y_block >> x) & 1u) ? y_block : p.all() & ~y_block;
    for (Mask m = p.above(x) & same; m; m &= m - 1)
      if (v[x] > v[std::countr_zero(m)]) return false;
  }
  return true;
}

// Closure of {v_a <= v_b} under meet and join depends only on the relative
// order of four values, so values in [4] cover every case for any t.
bool relation_certificate(int t) {
  int m = std::min(t, 4);
  for (int va = 1; va <= m; ++va)
    for (int vb = va; vb <= m; ++vb)
      for (int wa = 1; wa <= m; ++wa)
        for (int wb = wa; wb <= m; ++wb)
          // Both blocks build meet and join from the same min and max.
          if (std::min(va, wa) > std::min(vb, wb) || std::max(va, wa) > std::max(vb, wb)) return false;
  return true;
}

}  // namespace

SheppReport shepp_audit(const Poset& p, Mask y_block, int t, const SheppOptions& options) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  const int n = p.size();
  y_block &= p.all();
  double size = 1;
  for (int i = 0; i < n && size <= 1e18; ++i) size *= t;
  if (size > static_cast<double>(caps().shepp_lattice))
    throw CapExceeded("lattice size t^n exceeds " + std::to_string(caps().shepp_lattice));

  SheppReport rep;
  rep.lattice_size = static_cast<std::size_t>(size);
  rep.expected_support = order_polynomial(restrict_to(p, y_block), t) *
                         order_polynomial(restrict_to(p, p.all() & ~y_block), t);

  Lattice lat{n, y_block, {}};
  const std::size_t width = static_cast<std::size_t>(n);
  lat.store.resize(rep.lattice_size * width);
  std::vector<Coord> cur(width, 1);
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < rep.lattice_size; ++c) {
    std::copy(cur.begin(), cur.end(), lat.store.begin() + static_cast<std::ptrdiff_t>(c * width));
    if (in_support(p, y_block, cur.data())) support.push_back(c);
    for (std::size_t x = 0; x < width; ++x) {
      if (cur[x] < t) {
        ++cur[x];
        break;
      }
      cur[x] = 1;
    }
  }
  rep.support = support.size();

  std::mt19937_64 rng(options.seed);
  // Multiply-shift bound; the bias is below 2^-40 for any lattice under the cap.
  auto pick = [&](std::size_t bound) {
    return static_cast<std::size_t>((static_cast<unsigned __int128>(rng()) * bound) >> 64);
  };
  std::vector<Coord> m(width), j(width), s1(width), s2(width), s3(width);

  // meet and join against the order: both are bounds, and a probe that is a
  // common bound lies beyond them.
  auto check_pair = [&](const Coord* v, const Coord* w, const Coord* probe) {
    lat.meet(v, w, m.data());
    lat.join(v, w, j.data());
    if (!lat.leq(m.data(), v) || !lat.leq(m.data(), w) || !lat.leq(v, j.data()) || !lat.leq(w, j.data()))
      rep.meet_join_ok = false;
    if (lat.leq(probe, v) && lat.leq(probe, w) && !lat.leq(probe, m.data())) rep.meet_join_ok = false;
    if (lat.leq(v, probe) && lat.leq(w, probe) && !lat.leq(j.data(), probe)) rep.meet_join_ok = false;
    ++rep.pairs_checked;
  };
  const std::size_t L = rep.lattice_size;
  if (L * L <= options.pair_budget) {
    for (std::size_t a = 0; a < L; ++a)
      for (std::size_t b = 0; b < L; ++b) check_pair(lat.at(a), lat.at(b), lat.at((a * 31 + b * 17) % L));
  } else {
    for (std::size_t s = 0; s < options.samples; ++s) check_pair(lat.at(pick(L)), lat.at(pick(L)), lat.at(pick(L)));
  }

  auto check_triple = [&](const Coord* a, const Coord* b, const Coord* c) {
    lat.join(b, c, s1.data());
    lat.meet(a, s1.data(), s1.data());
    lat.meet(a, b, s2.data());
    lat.meet(a, c, s3.data());
    lat.join(s2.data(), s3.data(), s2.data());
    if (s1 != s2) rep.distributive_ok = false;
    ++rep.triples_checked;
  };
  rep.exhaustive_triples = L * L * L <= options.triple_budget;
  if (rep.exhaustive_triples) {
    for (std::size_t a = 0; a < L; ++a)
      for (std::size_t b = 0; b < L; ++b)
        for (std::size_t c = 0; c < L; ++c) check_triple(lat.at(a), lat.at(b), lat.at(c));
  } else {
    for (std::size_t s = 0; s < options.samples; ++s) check_triple(lat.at(pick(L)), lat.at(pick(L)), lat.at(pick(L)));
  }

  // mu is 0/1, so only pairs inside the support can break log-supermodularity.
  auto check_mu = [&](const Coord* v, const Coord* w) {
    lat.meet(v, w, m.data());
    lat.join(v, w, j.data());
    if (!in_support(p, y_block, m.data()) || !in_support(p, y_block, j.data())) rep.log_supermodular_ok = false;
  };
  rep.exhaustive_pairs = support.size() * support.size() <= options.pair_budget;
  if (rep.exhaustive_pairs) {
    for (std::size_t a : support)
      for (std::size_t b : support) check_mu(lat.at(a), lat.at(b));
  } else {
    for (std::size_t s = 0; s < options.samples; ++s)
      check_mu(lat.at(support[pick(support.size())]), lat.at(support[pick(support.size())]));
  }

  rep.certificate_ok = relation_certificate(t);
  return rep;
}

}  // namespace extlat

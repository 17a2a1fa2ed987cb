#include <sstream>

#include "extlat/caps.hpp"
#include "extlat/injections.hpp"

namespace extlat {

namespace {

std::string show(const std::vector<int>& v, int offset) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i] + offset;
  return os.str();
}

}  // namespace

void for_each_upper_map(const Poset& p, const std::function<void(const UpperMap&)>& visit) {
  int n = p.size();
  UpperMap m(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int x) -> void {
    if (x == n) {
      visit(m);
      return;
    }
    m[x] = x;
    self(self, x + 1);
    for (Mask r = p.above(x); r; r &= r - 1) {
      m[x] = std::countr_zero(r);
      self(self, x + 1);
    }
  };
  rec(rec, 0);
}

Count upper_map_count(const Poset& p) {
  Count c = 1;
  for (int x = 0; x < p.size(); ++x) c *= element_stats(p, x).upper;
  return c;
}

HookImage hook_forward(const Poset& p, const Values& bijection) {
  int n = p.size();
  if (static_cast<int>(bijection.size()) != n) throw std::invalid_argument("bijection size mismatch");
  Word order = first_extension(p);
  HookImage out{bijection, UpperMap(static_cast<std::size_t>(n))};
  Values& f = out.extension;
  // Values on the elements already processed form a sorted upper ideal; the
  // new value sinks upward along smallest values until it fits.
  for (int idx = n - 1; idx >= 0; --idx) {
    int x = order[idx], c = x;
    while (true) {
      int next = -1;
      for (Mask r = p.above(c); r; r &= r - 1) {
        int y = std::countr_zero(r);
        if (next < 0 || f[y] < f[next]) next = y;
      }
      if (next < 0 || f[c] < f[next]) break;
      std::swap(f[c], f[next]);
      c = next;
    }
    out.upper[x] = c;
  }
  return out;
}

Values hook_replay(const Poset& p, const Values& extension, const UpperMap& upper) {
  int n = p.size();
  if (static_cast<int>(extension.size()) != n || static_cast<int>(upper.size()) != n)
    throw std::invalid_argument("size mismatch");
  Word order = first_extension(p);
  Values f = extension;
  for (int idx = 0; idx < n; ++idx) {
    int x = order[idx], c = upper[x];
    if (!p.leq(x, c)) throw std::invalid_argument("upper map sends an element below itself");
    while (c != x) {
      // Largest value on the half-open interval [x, c).
      Mask window = (p.above(x) | bit(x)) & p.below(c);
      int best = -1;
      for (Mask r = window; r; r &= r - 1) {
        int y = std::countr_zero(r);
        if (best < 0 || f[y] > f[best]) best = y;
      }
      std::swap(f[c], f[best]);
      c = best;
    }
  }
  return f;
}

std::optional<Values> hook_inverse(const Poset& p, const Values& extension, const UpperMap& upper) {
  Values sigma = hook_replay(p, extension, upper);
  HookImage back = hook_forward(p, sigma);
  if (back.extension != extension || back.upper != upper) return std::nullopt;
  return sigma;
}

WitnessReport hook_witness(const Poset& p, std::size_t max_samples) {
  WitnessReport rep;
  rep.formula = count_extensions(p) * upper_map_count(p) - factorial(p.size());
  rep.domain = count_extensions(p) * upper_map_count(p);
  if (rep.domain > Count(static_cast<unsigned long>(caps().witness_pairs)))
    throw CapExceeded("hook witness scan exceeds cap");
  auto extensions = enumerate_extensions(p);
  for (const auto& w : extensions) {
    Values f = to_values(w);
    for_each_upper_map(p, [&](const UpperMap& g) {
      if (hook_inverse(p, f, g)) return;
      ++rep.uncovered;
      if (rep.samples.size() < max_samples) rep.samples.push_back("f=" + show(f, 0) + " g=" + show(g, 1));
    });
  }
  return rep;
}

}  // namespace extlat

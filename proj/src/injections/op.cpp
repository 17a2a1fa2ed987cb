#include <algorithm>
#include <numeric>
#include <sstream>

#include "extlat/caps.hpp"
#include "extlat/generate.hpp"
#include "extlat/injections.hpp"

namespace extlat {

namespace {

std::string show(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// Ranks of a sequence of distinct numbers, 1-based.
std::vector<int> standardize(const std::vector<int>& seq) {
  std::vector<int> idx(seq.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return seq[a] < seq[b]; });
  std::vector<int> rank(seq.size());
  for (std::size_t r = 0; r < idx.size(); ++r) rank[idx[r]] = static_cast<int>(r) + 1;
  return rank;
}

std::vector<std::vector<int>> classes_of(const ColorMap& color, int t) {
  std::vector<std::vector<int>> cls(static_cast<std::size_t>(t) + 1);
  for (std::size_t x = 0; x < color.size(); ++x) {
    if (color[x] < 1 || color[x] > t) throw std::invalid_argument("color outside 1..t");
    cls[color[x]].push_back(static_cast<int>(x));
  }
  return cls;
}

}  // namespace

void for_each_order_preserving(const Poset& p, int t, const std::function<void(const ColorMap&)>& visit) {
  int n = p.size();
  Word order = first_extension(p);
  ColorMap g(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == n) {
      visit(g);
      return;
    }
    int x = order[idx], lo = 1;
    for (Mask r = p.below(x); r; r &= r - 1) lo = std::max(lo, g[std::countr_zero(r)]);
    for (int v = lo; v <= t; ++v) {
      g[x] = v;
      self(self, idx + 1);
    }
    g[x] = 0;
  };
  rec(rec, 0);
}

ColorImage color_forward(const Poset& p, const Values& extension, const BlockMap& blocks, int t) {
  if (!p.is_natural_labeling()) throw NotNaturalLabeling("color injection needs a natural labeling");
  int n = p.size();
  if (static_cast<int>(extension.size()) != n || static_cast<int>(blocks.size()) != n)
    throw std::invalid_argument("size mismatch");
  std::vector<std::vector<int>> block(static_cast<std::size_t>(t) + 1);
  for (int v = 1; v <= n; ++v) {
    if (blocks[v - 1] < 1 || blocks[v - 1] > t) throw std::invalid_argument("block outside 1..t");
    block[blocks[v - 1]].push_back(v);
  }
  // Value v of the extension maps to the block whose cumulative range holds it.
  std::vector<int> step(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1, pos = 1; i <= t; ++i)
    for (std::size_t k = 0; k < block[i].size(); ++k) step[pos++] = i;
  ColorImage out;
  out.color.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) out.color[x] = step[extension[x]];
  auto cls = classes_of(out.color, t);
  for (int i = 1; i <= t; ++i) {
    std::vector<int> seq;
    for (int x : cls[i]) seq.push_back(extension[x]);
    for (int r : standardize(seq)) out.arrangement.push_back(block[i][r - 1]);
  }
  return out;
}

ColorPreimage color_inverse(const Poset& p, const ColorMap& color, const Arrangement& arrangement, int t) {
  int n = p.size();
  if (static_cast<int>(color.size()) != n || static_cast<int>(arrangement.size()) != n)
    throw std::invalid_argument("size mismatch");
  auto cls = classes_of(color, t);
  ColorPreimage out;
  out.extension.assign(static_cast<std::size_t>(n), 0);
  out.blocks.assign(static_cast<std::size_t>(n), 0);
  int offset = 0;
  for (int i = 1; i <= t; ++i) {
    std::vector<int> seg(arrangement.begin() + offset, arrangement.begin() + offset + static_cast<long>(cls[i].size()));
    for (int v : seg) out.blocks[v - 1] = i;
    auto rank = standardize(seg);
    for (std::size_t j = 0; j < cls[i].size(); ++j) out.extension[cls[i][j]] = offset + rank[j];
    offset += static_cast<int>(cls[i].size());
  }
  out.in_image = is_linear_extension(p, to_word(out.extension));
  return out;
}

WitnessReport color_witness(const Poset& p, int t, std::size_t max_samples) {
  // Relabel along the first linear extension so the labeling is natural.
  Word order = first_extension(p);
  std::vector<int> label(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) label[order[i]] = static_cast<int>(i);
  Poset q = relabel(p, label);
  int n = q.size();
  WitnessReport rep;
  Count omega = order_polynomial(q, t);
  rep.formula = omega * factorial(n) - count_extensions(q) * power(t, static_cast<unsigned long>(n));
  rep.domain = omega * factorial(n);
  if (rep.domain > Count(static_cast<unsigned long>(caps().witness_pairs)))
    throw CapExceeded("color witness scan exceeds cap");
  auto perms = all_permutations(n);
  for_each_order_preserving(q, t, [&](const ColorMap& g) {
    for (const auto& perm : perms) {
      Arrangement sigma(perm.size());
      for (std::size_t i = 0; i < perm.size(); ++i) sigma[i] = perm[i] + 1;
      if (color_inverse(q, g, sigma, t).in_image) continue;
      ++rep.uncovered;
      if (rep.samples.size() < max_samples) rep.samples.push_back("g=" + show(g) + " sigma=" + show(sigma));
    }
  });
  return rep;
}

WitnessReport refinement_witness(const Poset& p, int t, int k, std::size_t max_samples) {
  if (k < 1 || t < 0) throw std::invalid_argument("refinement needs k >= 1, t >= 0");
  int n = p.size();
  WitnessReport rep;
  Count omega = order_polynomial(p, t);
  Count kn = power(k, static_cast<unsigned long>(n));
  rep.formula = omega * kn - order_polynomial(p, static_cast<long>(k) * t);
  rep.domain = omega * kn;
  if (rep.domain > Count(static_cast<unsigned long>(caps().witness_pairs)))
    throw CapExceeded("refinement witness scan exceeds cap");
  std::vector<int> beta(static_cast<std::size_t>(n), 0), h(static_cast<std::size_t>(n));
  for_each_order_preserving(p, t, [&](const ColorMap& g) {
    std::fill(beta.begin(), beta.end(), 0);
    while (true) {
      for (int x = 0; x < n; ++x) h[x] = k * (g[x] - 1) + beta[x] + 1;
      if (!is_order_preserving_values(p, h)) {
        ++rep.uncovered;
        if (rep.samples.size() < max_samples) rep.samples.push_back("g=" + show(g) + " beta=" + show(beta));
      }
      int x = 0;
      while (x < n && ++beta[x] == k) beta[x++] = 0;
      if (x == n) break;
    }
  });
  return rep;
}

}  // namespace extlat

#include <sstream>

#include "deletion.hpp"
#include "extlat/caps.hpp"
#include "extlat/injections.hpp"

namespace extlat {

namespace {

std::string show(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

// Stage i adds order[i] to the active set and lifts both partial extensions
// through it. A chain of P and a chain of Q share at most one element, so the
// element added last is recoverable from the pair, which makes this injective.
std::pair<Values, Values> sid_beta(const std::vector<int>& perm, const Word& order) {
  Poset p = permutation_poset(perm), q = inversion_poset(perm);
  int n = p.size();
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("order size mismatch");
  Values f(static_cast<std::size_t>(n), 0), g(static_cast<std::size_t>(n), 0);
  Mask active = 0;
  for (int y : order) {
    if (y < 0 || y >= n || ((active >> y) & 1u)) throw std::invalid_argument("order is not a permutation");
    active |= bit(y);
    f = detail::lift_within(p, active, y, f);
    g = detail::lift_within(q, active, y, g);
  }
  return {f, g};
}

std::optional<Word> sid_beta_inverse(const std::vector<int>& perm, const Values& f, const Values& g) {
  Poset p = permutation_poset(perm), q = inversion_poset(perm);
  int n = p.size();
  if (!is_linear_extension(p, to_word(f)) || !is_linear_extension(q, to_word(g)))
    throw std::invalid_argument("pair is not in E(P) x E(Q)");
  Word order(static_cast<std::size_t>(n));
  Values cf = f, cg = g;
  Mask active = p.all();
  for (int i = n - 1; i >= 0; --i) {
    Mask on_p = 0, on_q = 0;
    for (int z : detail::chain_within(p, active, cf)) on_p |= bit(z);
    for (int z : detail::chain_within(q, active, cg)) on_q |= bit(z);
    Mask common = on_p & on_q;
    if (!common) return std::nullopt;
    int y = std::countr_zero(common);
    cf = *detail::lower_within(p, active, y, cf);
    cg = *detail::lower_within(q, active, y, cg);
    order[i] = y;
    active &= ~bit(y);
  }
  return order;
}

WitnessReport sid_witness(const std::vector<int>& perm, std::size_t max_samples) {
  Poset p = permutation_poset(perm), q = inversion_poset(perm);
  WitnessReport rep;
  Count ep = count_extensions(p), eq = count_extensions(q);
  rep.domain = ep * eq;
  rep.formula = rep.domain - factorial(p.size());
  if (rep.domain > Count(static_cast<unsigned long>(caps().witness_pairs)))
    throw CapExceeded("two-dimensional witness scan exceeds cap");
  auto ext_q = enumerate_extensions(q);
  for_each_extension(p, [&](const Word& wf) {
    Values f = to_values(wf);
    for (const auto& wg : ext_q) {
      Values g = to_values(wg);
      if (sid_beta_inverse(perm, f, g)) continue;
      ++rep.uncovered;
      if (rep.samples.size() < max_samples) rep.samples.push_back("f=" + show(f) + " g=" + show(g));
    }
  });
  return rep;
}

}  // namespace extlat

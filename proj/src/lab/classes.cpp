#include <map>

#include "extlat/audit.hpp"
#include "extlat/counting.hpp"
#include "extlat/generate.hpp"

namespace extlat {

ClassReport comparability_class_check(int n, int t_max) {
  struct Signature {
    Count extensions;
    std::vector<Count> omegas;
    std::string first;
  };
  ClassReport rep;
  rep.n = n;
  std::map<std::vector<Mask>, Signature> groups;
  for_each_poset(n, [&](const Poset& p) {
    ++rep.posets;
    std::vector<Mask> graph(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) graph[x] = p.above(x) | p.below(x);
    auto profile = ideal_chain_profile(p);
    Signature sig{count_extensions(p), {}, describe(p)};
    for (int t = 1; t <= t_max; ++t) sig.omegas.push_back(order_polynomial(profile, t));
    auto [it, fresh] = groups.emplace(std::move(graph), sig);
    if (fresh) return;
    if (it->second.extensions != sig.extensions || it->second.omegas != sig.omegas) {
      rep.invariant = false;
      rep.failures.push_back(it->second.first + " vs " + sig.first);
    }
  });
  rep.classes = groups.size();
  return rep;
}

}  // namespace extlat

#include <algorithm>

#include "extlat/audit.hpp"
#include "extlat/generate.hpp"
#include "extlat/lab.hpp"

namespace extlat {

namespace {

Count ext(const Poset& p) { return cached_extensions(p); }
Count omega(const Poset& p, long t) { return cached_order_polynomial(p, t); }
Poset minus(const Poset& p, Mask m) { return remove_elements(p, m); }

bool geq(const Value& a, const Value& b) {
  if (auto* x = std::get_if<QPoly>(&a)) return x->dominates(std::get<QPoly>(b));
  if (auto* x = std::get_if<Rational>(&a)) return cmp(*x, std::get<Rational>(b)) >= 0;
  return cmp(std::get<Count>(a), std::get<Count>(b)) >= 0;
}

VerificationReport compare_values(const std::string& id, const Instance& in, Value lhs, Value rhs) {
  VerificationReport r;
  r.check_id = id;
  r.instance = in.describe();
  r.holds = geq(lhs, rhs);
  r.equality = lhs == rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

// Typed entry points so GMP expression templates materialise first.
VerificationReport compare(const std::string& id, const Instance& in, const Count& lhs, const Count& rhs) {
  return compare_values(id, in, lhs, rhs);
}
VerificationReport compare_rational(const std::string& id, const Instance& in, const Rational& lhs,
                                    const Rational& rhs) {
  return compare_values(id, in, lhs, rhs);
}
VerificationReport compare(const std::string& id, const Instance& in, const QPoly& lhs, const QPoly& rhs) {
  return compare_values(id, in, lhs, rhs);
}

Count product_over(const Poset& p, Mask m, bool upper) {
  Count c = 1;
  for (; m; m &= m - 1) {
    auto s = element_stats(p, std::countr_zero(m));
    c *= upper ? s.upper : s.lower;
  }
  return c;
}

std::vector<int> elements(Mask m) {
  std::vector<int> v;
  for (; m; m &= m - 1) v.push_back(std::countr_zero(m));
  return v;
}

// ---- expanders ----

using Expander = std::function<void(const Instance&, const ResolvedParams&, std::vector<Instance>&)>;

Expander just_unit() {
  return [](const Instance& u, const ResolvedParams&, std::vector<Instance>& out) { out.push_back(u); };
}

Expander over_t(int t_from) {
  return [t_from](const Instance& u, const ResolvedParams& rp, std::vector<Instance>& out) {
    for (int t = t_from; t <= rp.t_max; ++t) {
      Instance in = u;
      in.t = t;
      out.push_back(std::move(in));
    }
  };
}

// Unordered pairs of distinct minimal elements, for each t.
Expander minimal_pairs(bool with_t) {
  return [with_t](const Instance& u, const ResolvedParams& rp, std::vector<Instance>& out) {
    auto mins = elements(u.poset.minimal_elements());
    for (std::size_t i = 0; i < mins.size(); ++i)
      for (std::size_t j = i + 1; j < mins.size(); ++j)
        for (int t = with_t ? 1 : 0; t <= (with_t ? rp.t_max : 0); ++t) {
          Instance in = u;
          in.x = mins[i];
          in.y = mins[j];
          in.t = t;
          out.push_back(std::move(in));
        }
  };
}

// x minimal, y maximal, y != x, y not an upper cover of x.
Expander min_max_pairs(bool with_t) {
  return [with_t](const Instance& u, const ResolvedParams& rp, std::vector<Instance>& out) {
    const Poset& p = u.poset;
    for (int x : elements(p.minimal_elements()))
      for (int y : elements(p.maximal_elements())) {
        if (x == y || ((p.upper_covers(x) >> y) & 1u)) continue;
        for (int t = with_t ? 1 : 0; t <= (with_t ? rp.t_max : 0); ++t) {
          Instance in = u;
          in.x = x;
          in.y = y;
          in.t = t;
          out.push_back(std::move(in));
        }
      }
  };
}

// ---- verifiers ----

VerificationReport hook_check(const Instance& in) {
  const Poset& p = in.poset;
  auto r = compare("BW", in, ext(p) * product_over(p, p.all(), true), factorial(p.size()));
  r.predicted_equality = is_ordered_forest(p);
  return r;
}

VerificationReport op_hook(const Instance& in, bool dual_form) {
  const Poset& p = in.poset;
  int n = p.size();
  int r = popcount(dual_form ? p.minimal_elements() : p.maximal_elements());
  Count lhs = omega(p, in.t) * product_over(p, p.all(), !dual_form);
  Count rhs = power(in.t, static_cast<unsigned long>(r)) * power(in.t + 1, static_cast<unsigned long>(n - r));
  return compare(dual_form ? "OP-HP-DUAL" : "OP-HP", in, lhs, rhs);
}

VerificationReport op_hook_step(const Instance& in) {
  const Poset& p = in.poset;
  Count lhs = omega(p, in.t) * element_stats(p, in.x).upper;
  Count rhs = Count(in.t + 1) * omega(minus(p, bit(in.x)), in.t);
  return compare("OP-HP-STEP", in, lhs, rhs);
}

VerificationReport op_general(const Instance& in) {
  const Poset& p = in.poset;
  int n = p.size();
  auto r = compare("OP-GEN", in, omega(p, in.t) * factorial(n), ext(p) * power(in.t, static_cast<unsigned long>(n)));
  r.predicted_equality = p.is_antichain(p.all());
  return r;
}

VerificationReport shepp_min_min(const Instance& in) {
  const Poset& p = in.poset;
  Count lhs = omega(p, in.t) * omega(minus(p, bit(in.x) | bit(in.y)), in.t);
  Count rhs = omega(minus(p, bit(in.x)), in.t) * omega(minus(p, bit(in.y)), in.t);
  return compare("SHEPP-CORR", in, lhs, rhs);
}

VerificationReport shepp_min_max(const Instance& in) {
  const Poset& p = in.poset;
  Count lhs = omega(minus(p, bit(in.x)), in.t) * omega(minus(p, bit(in.y)), in.t);
  Count rhs = omega(p, in.t) * omega(minus(p, bit(in.x) | bit(in.y)), in.t);
  return compare("SHEPP-CORR-MINMAX", in, lhs, rhs);
}

VerificationReport ext_min_min(const Instance& in) {
  const Poset& p = in.poset;
  int n = p.size();
  Count lhs = Count(n - 1) * ext(p) * ext(minus(p, bit(in.x) | bit(in.y)));
  Count rhs = Count(n) * ext(minus(p, bit(in.x))) * ext(minus(p, bit(in.y)));
  return compare("E-CORR", in, lhs, rhs);
}

VerificationReport ext_min_max(const Instance& in) {
  const Poset& p = in.poset;
  int n = p.size();
  Count lhs = Count(n) * ext(minus(p, bit(in.x))) * ext(minus(p, bit(in.y)));
  Count rhs = Count(n - 1) * ext(p) * ext(minus(p, bit(in.x) | bit(in.y)));
  return compare("E-CORR-MINMAX", in, lhs, rhs);
}

VerificationReport log_concave(const Instance& in) {
  const Poset& p = in.poset;
  Count mid = omega(p, in.t);
  auto r = compare("LOGC", in, mid * mid, omega(p, in.t + 1) * omega(p, in.t - 1));
  r.predicted_equality = false;
  return r;
}

VerificationReport log_concave_strict(const Instance& in) {
  const Poset& p = in.poset;
  Count mid = omega(p, in.t);
  Count s = power(in.t + 1, static_cast<unsigned long>(p.size() + 1));
  return compare("LOGC-STRICT", in, mid * mid * s, (s + 1) * omega(p, in.t + 1) * omega(p, in.t - 1));
}

VerificationReport q_log_concave(const Instance& in) {
  const Poset& p = in.poset;
  QPoly mid = q_order_polynomial(p, in.t);
  return compare("Q-LOGC", in, mid * mid, q_order_polynomial(p, in.t + 1) * q_order_polynomial(p, in.t - 1));
}

VerificationReport q_correlation(const Instance& in) {
  const Poset& p = in.poset;
  auto at = [&](const Poset& s) { return q_order_polynomial(s, in.t).evaluate(in.q); };
  Rational lhs = at(p) * at(minus(p, bit(in.x) | bit(in.y)));
  Rational rhs = at(minus(p, bit(in.x))) * at(minus(p, bit(in.y)));
  return compare_rational("Q-CORR", in, lhs, rhs);
}

VerificationReport reiner(const Instance& in) {
  return compare("REINER", in, p_partition_coeffs(in.poset, in.degree), hook_series_coeffs(in.poset, in.degree));
}

Count pinned(const Poset& p, int x, int a, const RestrictionSpec& extra) {
  if (a < 1 || a > p.size()) return 0;
  RestrictionSpec s = extra;
  s.u.insert(s.u.begin(), x);
  s.a.insert(s.a.begin(), a);
  return restricted_count(p, s);
}

VerificationReport stanley(const Instance& in, const char* id) {
  const Poset& p = in.poset;
  Count mid = pinned(p, in.x, in.a, in.extra);
  return compare(id, in, mid * mid, pinned(p, in.x, in.a + 1, in.extra) * pinned(p, in.x, in.a - 1, in.extra));
}

VerificationReport sidorenko(const Instance& in) {
  Poset p = permutation_poset(in.perm), q = inversion_poset(in.perm);
  auto r = compare("SID", in, ext(p) * ext(q), factorial(p.size()));
  r.predicted_equality = is_series_parallel(p);
  return r;
}

Count sid_general_lhs(const Count& ep, const Count& eq, int n, int k) {
  return ep * eq * power(k, static_cast<unsigned long>(n - k)) * factorial(k);
}

VerificationReport sidorenko_general(const Instance& in) {
  const Poset& p = in.poset;
  const Poset& q = *in.other;
  int k = common_chain_number(p, q);
  auto r = compare("SID-GEN", in, sid_general_lhs(ext(p), ext(q), p.size(), k), factorial(p.size()));
  r.note = "k=" + std::to_string(k);
  return r;
}

VerificationReport mixed_sidorenko(const Instance& in) {
  Poset p = permutation_poset(in.perm), q = inversion_poset(in.perm);
  Poset s = permutation_poset(in.perm2), t = inversion_poset(in.perm2);
  int n = p.size();
  Count lhs = mixed_count(p, s, in.k) * mixed_count(q, t, in.k);
  return compare("MIXED-SID", in, lhs, factorial(n) * binomial(n, in.k));
}

VerificationReport antichain_sum(const Instance& in) {
  const Poset& p = in.poset;
  Count sum = 0;
  for (int y : elements(in.subset)) sum += ext(minus(p, bit(y)));
  auto r = compare("EHS", in, ext(p), sum);
  r.predicted_equality = in.subset == p.minimal_elements();
  return r;
}

VerificationReport reverse_width(const Instance& in) {
  const Poset& p = in.poset;
  auto w = static_cast<unsigned long>(width(p));
  Count lhs = omega(p, in.t + 1) * power(in.t, w);
  Count rhs = omega(p, in.t) * power(in.t + 1, w);
  return compare("REV-WIDTH", in, lhs, rhs);
}

VerificationReport ks_lemma(const Instance& in) {
  const Poset& p = in.poset;
  Poset px = minus(p, bit(in.x));
  return compare("KS-LEMMA", in, omega(px, in.k) * omega(p, in.t), omega(p, in.k) * omega(px, in.t));
}

VerificationReport ks_scaled(const Instance& in) {
  const Poset& p = in.poset;
  return compare("KS-SCALED", in, omega(p, in.t) * power(in.k, static_cast<unsigned long>(p.size())),
                 omega(p, static_cast<long>(in.k) * in.t));
}

VerificationReport ks_monotone(const Instance& in) {
  const Poset& p = in.poset;
  auto n = static_cast<unsigned long>(p.size());
  return compare("KS-MON", in, omega(p, in.t) * power(in.t + 1, n), omega(p, in.t + 1) * power(in.t, n));
}

VerificationReport graham(const Instance& in) {
  const Poset& p = in.poset;
  Count mid = graham_count(p, in.t, in.x, in.a);
  return compare("GRAHAM", in, mid * mid, graham_count(p, in.t, in.x, in.a + 1) * graham_count(p, in.t, in.x, in.a - 1));
}

VerificationReport ks_fkg(const Instance& in) {
  const Poset& p = in.poset;
  Count ok = omega(p, in.k), ot = omega(p, in.t);
  VerificationReport best;
  bool found = false;
  for (int x = 0; x < p.size() && !found; ++x) {
    Poset px = minus(p, bit(x));
    Instance wit = in;
    wit.x = x;
    best = compare("KS-FKG", in, ok * in.t * omega(px, in.t), Count(in.k) * omega(px, in.k) * ot);
    best.note = "x=" + std::to_string(x + 1);
    found = best.holds;
  }
  if (!found) best.note = "no element satisfies the bound";
  return best;
}

VerificationReport op_analytic(const Instance& in) {
  const Poset& p = in.poset;
  Mask nonmax = p.all() & ~p.maximal_elements();
  Count lhs = omega(p, in.t), rhs = power(in.t, static_cast<unsigned long>(popcount(p.maximal_elements())));
  for (int x : elements(nonmax)) {
    int b = element_stats(p, x).upper;
    lhs *= 2 * b;
    rhs *= 2 * in.t + b;
  }
  return compare("OP-ANALYTIC", in, lhs, rhs);
}

VerificationReport matching(const Instance& in) {
  MatchingReport m = matching_check(in.poset, in.x, in.a);
  VerificationReport r;
  r.check_id = "MATCHING";
  r.instance = in.describe();
  r.lhs = Count(static_cast<unsigned long>(m.matching));
  r.rhs = Count(static_cast<unsigned long>(m.right));
  r.holds = m.saturated();
  r.equality = m.matching == m.right;
  r.note = "left=" + std::to_string(m.left) + " edges=" + std::to_string(m.edges) +
           " isolated_right=" + std::to_string(m.isolated_right);
  return r;
}

// Exhaustive family of labeled posets by size, cached per thread is not
// needed: it is built once per sweep call for the pair check.
UnitResult sid_general_unit(const Instance& unit, const ResolvedParams&, bool keep) {
  static thread_local int cached_n = -1;
  static thread_local std::vector<Poset> family;
  static thread_local std::vector<Count> family_ext;
  static thread_local std::vector<std::vector<Mask>> family_comp;
  const Poset& p = unit.poset;
  int n = p.size();
  if (cached_n != n) {
    family = enumerate_posets(n);
    family_ext.clear();
    family_comp.clear();
    for (const auto& q : family) {
      family_ext.push_back(count_extensions(q));
      std::vector<Mask> comp(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) comp[x] = q.above(x) | q.below(x);
      family_comp.push_back(std::move(comp));
    }
    cached_n = n;
  }
  UnitResult out;
  Count ep = count_extensions(p);
  Count goal = factorial(n);
  std::vector<Mask> adj(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (int x = 0; x < n; ++x) adj[x] = (p.above(x) | p.below(x)) & family_comp[i][x];
    // Largest common chain by exhaustive subset scan (n is small here).
    int k = 0;
    for (Mask s = 1; s <= p.all(); ++s) {
      int c = popcount(s);
      if (c <= k) continue;
      bool clique = true;
      for (Mask r = s; r && clique; r &= r - 1) {
        int x = std::countr_zero(r);
        if ((s & ~bit(x)) & ~adj[x]) clique = false;
      }
      if (clique) k = c;
    }
    if (n == 0) k = 0;
    Count lhs = sid_general_lhs(ep, family_ext[i], n, k);
    ++out.instances;
    bool eq = lhs == goal;
    if (eq) ++out.equalities;
    if (lhs < goal || keep) {
      Instance in = unit;
      in.other = family[i];
      auto r = compare("SID-GEN", in, lhs, goal);
      r.note = "k=" + std::to_string(k);
      if (!r.holds) out.violations.push_back(r);
      if (keep) out.reports.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<CheckDef> build_registry() {
  std::vector<CheckDef> reg;
  auto add = [&](std::string id, CheckKind kind, Domain dom, std::string summary, ResolvedParams defaults,
                 Expander expand, std::function<VerificationReport(const Instance&)> verify) {
    CheckDef c;
    c.id = std::move(id);
    c.kind = kind;
    c.domain = dom;
    c.summary = std::move(summary);
    c.defaults = defaults;
    c.expand = std::move(expand);
    c.verify = std::move(verify);
    reg.push_back(std::move(c));
    return &reg.back();
  };
  const auto T = CheckKind::Theorem;
  const auto C = CheckKind::Conjecture;
  ResolvedParams base{1, 5, 5, 3, 12};

  add("BW", T, Domain::Posets, "e(P) * prod upper(x) >= n!", base, just_unit(), hook_check);
  add("OP-HP", T, Domain::Posets, "Omega(P,t) * prod upper(x) >= t^#max (t+1)^(n-#max)", base, over_t(1),
      [](const Instance& in) { return op_hook(in, false); });
  add("OP-HP-DUAL", T, Domain::Posets, "Omega(P,t) * prod lower(x) >= t^#min (t+1)^(n-#min)", base, over_t(1),
      [](const Instance& in) { return op_hook(in, true); });
  add("OP-HP-STEP", T, Domain::Posets, "x minimal, upper(x) > 1: Omega(P,t) upper(x) >= (t+1) Omega(P-x,t)", base,
      [](const Instance& u, const ResolvedParams& rp, std::vector<Instance>& out) {
        for (int x : elements(u.poset.minimal_elements())) {
          if (element_stats(u.poset, x).upper <= 1) continue;
          for (int t = 1; t <= rp.t_max; ++t) {
            Instance in = u;
            in.x = x;
            in.t = t;
            out.push_back(std::move(in));
          }
        }
      },
      op_hook_step);
  add("OP-GEN", T, Domain::Posets, "Omega(P,t) n! >= e(P) t^n", base, over_t(1), op_general);
  add("SHEPP-CORR", T, Domain::Posets, "x,y minimal: Omega(P)Omega(P-x-y) >= Omega(P-x)Omega(P-y)", base,
      minimal_pairs(true), shepp_min_min);
  add("SHEPP-CORR-MINMAX", T, Domain::Posets, "x minimal, y maximal not covering x: reversed correlation", base,
      min_max_pairs(true), shepp_min_max);
  add("E-CORR", T, Domain::Posets, "x,y minimal: (n-1)e(P)e(P-x-y) >= n e(P-x)e(P-y)", base, minimal_pairs(false),
      ext_min_min);
  add("E-CORR-MINMAX", T, Domain::Posets, "x minimal, y maximal not covering x: reversed", base,
      min_max_pairs(false), ext_min_max);
  add("LOGC", T, Domain::Posets, "Omega(t)^2 > Omega(t+1)Omega(t-1), t >= 2", base, over_t(2), log_concave);
  add("LOGC-STRICT", T, Domain::Posets, "Omega(t)^2 >= (1 + (t+1)^-(n+1)) Omega(t+1)Omega(t-1)", base, over_t(2),
      log_concave_strict);
  add("Q-LOGC", T, Domain::Posets, "coefficient-wise q-log-concavity", {1, 5, 4, 3, 12}, over_t(2), q_log_concave);
  add("Q-CORR", T, Domain::Posets, "q-correlation for minimal pairs at q in {1/2,1,2}", base,
      [](const Instance& u, const ResolvedParams& rp, std::vector<Instance>& out) {
        std::vector<Instance> pairs;
        minimal_pairs(true)(u, rp, pairs);
        for (auto& in : pairs)
          for (const Rational& q : {Rational(1, 2), Rational(1), Rational(2)}) {
            Instance c = in;
            c.q = q;
            out.push_back(std::move(c));
          }
      },
      q_correlation);
  add("REINER", T, Domain::Posets, "P-partition series dominates hook series", base,
      [](const Instance& u, const ResolvedParams& rp, std::vector<Instance>& out) {
        Instance in = u;
        in.degree = rp.degree;
        out.push_back(std::move(in));
      },
      reiner);
  add("STANLEY", T, Domain::Posets, "N(x,a)^2 >= N(x,a+1) N(x,a-1)", base,
      [](const Instance& u, const ResolvedParams&, std::vector<Instance>& out) {
        for (int x = 0; x < u.poset.size(); ++x)
          for (int a = 1; a <= u.poset.size(); ++a) {
            Instance in = u;
            in.x = x;
            in.a = a;
            out.push_back(std::move(in));
          }
      },
      [](const Instance& in) { return stanley(in, "STANLEY"); });
  add("STANLEY-GEN", T, Domain::Posets, "as STANLEY with one more element pinned away from a", base,
      [](const Instance& u, const ResolvedParams&, std::vector<Instance>& out) {
        int n = u.poset.size();
        for (int x = 0; x < n; ++x)
          for (int a = 1; a <= n; ++a)
            for (int z = 0; z < n; ++z)
              for (int c = 1; c <= n; ++c) {
                if (z == x || c == a) continue;
                Instance in = u;
                in.x = x;
                in.a = a;
                in.extra = {{z}, {c}};
                out.push_back(std::move(in));
              }
      },
      [](const Instance& in) { return stanley(in, "STANLEY-GEN"); });
  add("SID", T, Domain::Permutations, "e(P_sigma) e(companion) >= n!", base, just_unit(), sidorenko);
  {
    CheckDef* c = add("SID-GEN", T, Domain::Posets, "e(P)e(Q) k^(n-k) k! >= n!, k = max common chain",
                      {1, 5, 5, 3, 12},
                      [](const Instance& u, const ResolvedParams&, std::vector<Instance>& out) {
                        for (const auto& q : enumerate_posets(u.poset.size())) {
                          Instance in = u;
                          in.other = q;
                          out.push_back(std::move(in));
                        }
                      },
                      sidorenko_general);
    c->run_unit = sid_general_unit;
  }
  add("MIXED-SID", T, Domain::Permutations, "e_k(P,S) e_k(Q,T) >= n! C(n,k) for two permutation pairs",
      {1, 4, 5, 3, 12},
      [](const Instance& u, const ResolvedParams&, std::vector<Instance>& out) {
        int n = static_cast<int>(u.perm.size());
        for (const auto& pi : all_permutations(n))
          for (int k = 0; k <= n; ++k) {
            Instance in = u;
            in.perm2 = pi;
            in.k = k;
            out.push_back(std::move(in));
          }
      },
      mixed_sidorenko);
  add("EHS", T, Domain::Posets, "antichain A: e(P) >= sum_{y in A} e(P-y)", base,
      [](const Instance& u, const ResolvedParams&, std::vector<Instance>& out) {
        const Poset& p = u.poset;
        for (Mask s = 1; s <= p.all() && s != 0; ++s) {
          if (p.is_antichain(s)) {
            Instance in = u;
            in.subset = s;
            out.push_back(std::move(in));
          }
          if (s == p.all()) break;
        }
      },
      antichain_sum);
  add("REV-WIDTH", T, Domain::Posets, "Omega(P,t)/t^width weakly increasing", {1, 5, 8, 3, 12},
      [](const Instance& u, const ResolvedParams& rp, std::vector<Instance>& out) {
        for (int t = 1; t < rp.t_max; ++t) {
          Instance in = u;
          in.t = t;
          out.push_back(std::move(in));
        }
      },
      reverse_width);
  add("KS-LEMMA", T, Domain::Posets, "x minimal, k <= t: Omega(P-x,k)Omega(P,t) >= Omega(P,k)Omega(P-x,t)", base,
      [](const Instance& u, const ResolvedParams& rp, std::vector<Instance>& out) {
        for (int x : elements(u.poset.minimal_elements()))
          for (int t = 1; t <= rp.t_max; ++t)
            for (int k = 1; k <= t; ++k) {
              Instance in = u;
              in.x = x;
              in.t = t;
              in.k = k;
              out.push_back(std::move(in));
            }
      },
      ks_lemma);
  add("KS-SCALED", T, Domain::Posets, "Omega(P,t) k^n >= Omega(P,kt)", base,
      [](const Instance& u, const ResolvedParams& rp, std::vector<Instance>& out) {
        for (int t = 1; t <= rp.t_max; ++t)
          for (int k = 1; k <= rp.k_max; ++k) {
            Instance in = u;
            in.t = t;
            in.k = k;
            out.push_back(std::move(in));
          }
      },
      ks_scaled);

  ResolvedParams conj{1, 5, 6, 3, 12};
  add("KS-MON", C, Domain::Posets, "Omega(P,t)/t^n weakly decreasing", {1, 5, 8, 3, 12},
      [](const Instance& u, const ResolvedParams& rp, std::vector<Instance>& out) {
        for (int t = 1; t < rp.t_max; ++t) {
          Instance in = u;
          in.t = t;
          out.push_back(std::move(in));
        }
      },
      ks_monotone);
  add("GRAHAM", C, Domain::Posets, "1 < a < t: Omega(P,t;x,a) log-concave in a", conj,
      [](const Instance& u, const ResolvedParams& rp, std::vector<Instance>& out) {
        for (int t = 3; t <= rp.t_max; ++t)
          for (int x = 0; x < u.poset.size(); ++x)
            for (int a = 2; a < t; ++a) {
              Instance in = u;
              in.t = t;
              in.x = x;
              in.a = a;
              out.push_back(std::move(in));
            }
      },
      graham);
  add("KS-FKG", C, Domain::Posets, "t >= k: some x has Omega(k)/Omega(t) >= k Omega(P-x,k)/(t Omega(P-x,t))", conj,
      [](const Instance& u, const ResolvedParams& rp, std::vector<Instance>& out) {
        if (u.poset.size() == 0) return;
        for (int t = 1; t <= rp.t_max; ++t)
          for (int k = 1; k <= t; ++k) {
            Instance in = u;
            in.t = t;
            in.k = k;
            out.push_back(std::move(in));
          }
      },
      ks_fkg);
  add("OP-ANALYTIC", CheckKind::Conditional, Domain::Posets,
      "Omega(P,t) >= t^#max prod_{x not maximal} (t/upper(x) + 1/2)", conj, over_t(1), op_analytic);
  add("MATCHING", C, Domain::Posets, "matching graph saturates E(P,x,a-1) x E(P,x,a+1)", conj,
      [](const Instance& u, const ResolvedParams&, std::vector<Instance>& out) {
        int n = u.poset.size();
        for (int x = 0; x < n; ++x)
          for (int a = 2; a <= n - 1; ++a) {
            Instance in = u;
            in.x = x;
            in.a = a;
            out.push_back(std::move(in));
          }
      },
      matching);
  return reg;
}

}  // namespace

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> reg = build_registry();
  return reg;
}

const CheckDef& find_check(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return c;
  throw UnknownCheck("unknown check id: " + id);
}

VerificationReport verify(const std::string& check_id, const Instance& instance) {
  return find_check(check_id).verify(instance);
}

ResolvedParams resolve(const CheckDef& check, const SweepParams& params) {
  ResolvedParams rp = check.defaults;
  if (params.n_min) rp.n_min = *params.n_min;
  if (params.n_max) rp.n_max = *params.n_max;
  if (params.t_max) rp.t_max = *params.t_max;
  if (params.k_max) rp.k_max = *params.k_max;
  if (params.degree) rp.degree = *params.degree;
  return rp;
}

}  // namespace extlat

#include <algorithm>

#include "extlat/caps.hpp"
#include "extlat/generate.hpp"
#include "extlat/lab.hpp"

namespace extlat {

std::vector<Instance> sweep_units(const CheckDef& check, const ResolvedParams& rp, const SweepParams& params) {
  std::vector<Instance> units;
  for (int n = rp.n_min; n <= rp.n_max; ++n) {
    if (check.domain == Domain::Permutations) {
      if (n > caps().exhaustive_poset_n + 2 && !params.random)
        throw CapExceeded("permutation family above n=" + std::to_string(caps().exhaustive_poset_n + 2));
      if (params.random) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int s = 0; s < params.samples; ++s) {
          for (int i = 0; i < n; ++i) perm[i] = i;
          std::uint64_t state = params.seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(n * 100003 + s + 1));
          for (int i = n - 1; i > 0; --i) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            std::swap(perm[i], perm[(state >> 33) % static_cast<std::uint64_t>(i + 1)]);
          }
          Instance u;
          u.perm = perm;
          u.poset = permutation_poset(perm);
          units.push_back(std::move(u));
        }
      } else {
        for (auto& perm : all_permutations(n)) {
          Instance u;
          u.poset = permutation_poset(perm);
          u.perm = std::move(perm);
          units.push_back(std::move(u));
        }
      }
      continue;
    }
    if (params.random) {
      for (int s = 0; s < params.samples; ++s) {
        Instance u;
        u.poset = random_poset(n, params.density,
                               params.seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(n * 100003 + s));
        units.push_back(std::move(u));
      }
    } else {
      for_each_poset(n, [&](const Poset& p) {
        Instance u;
        u.poset = p;
        units.push_back(std::move(u));
      });
    }
  }
  return units;
}

UnitResult run_unit(const CheckDef& check, const Instance& unit, const ResolvedParams& rp, bool keep) {
  if (check.run_unit) return check.run_unit(unit, rp, keep);
  UnitResult out;
  std::vector<Instance> instances;
  check.expand(unit, rp, instances);
  for (const auto& in : instances) {
    VerificationReport r = check.verify(in);
    ++out.instances;
    if (r.equality) ++out.equalities;
    if (!r.holds) out.violations.push_back(r);
    if (r.equality_mismatch()) out.mismatches.push_back(r);
    if (keep) out.reports.push_back(std::move(r));
  }
  return out;
}

SweepSummary merge_units(const CheckDef& check, const SweepParams& params, std::vector<UnitResult>&& parts,
                         std::size_t units) {
  ResolvedParams rp = resolve(check, params);
  SweepSummary s;
  s.check_id = check.id;
  s.family = std::string(check.domain == Domain::Permutations ? "permutations" : "posets") + " n=" +
             std::to_string(rp.n_min) + ".." + std::to_string(rp.n_max) +
             (params.random ? " random samples=" + std::to_string(params.samples) + " seed=" + std::to_string(params.seed) +
                                  (check.domain == Domain::Posets ? " density=" + std::to_string(params.density) : "")
                            : " exhaustive") +
             " t_max=" + std::to_string(rp.t_max) + " k_max=" + std::to_string(rp.k_max) +
             (check.id == "REINER" ? " N=" + std::to_string(rp.degree) : "");
  s.units = units;
  for (auto& part : parts) {
    s.instances_run += part.instances;
    s.equalities += part.equalities;
    std::move(part.violations.begin(), part.violations.end(), std::back_inserter(s.violations));
    std::move(part.mismatches.begin(), part.mismatches.end(), std::back_inserter(s.equality_mismatches));
    std::move(part.reports.begin(), part.reports.end(), std::back_inserter(s.reports));
  }
  switch (check.kind) {
    case CheckKind::Theorem: s.status = s.violations.empty() ? "theorem_verified" : "theorem_violated"; break;
    case CheckKind::Conjecture:
      s.status = s.violations.empty() ? "conjecture_no_counterexample" : "conjecture_counterexample";
      break;
    case CheckKind::Conditional: s.status = "conditional"; break;
  }
  return s;
}

SweepSummary sweep_serial(const std::string& check_id, const SweepParams& params) {
  const CheckDef& check = find_check(check_id);
  ResolvedParams rp = resolve(check, params);
  std::vector<Instance> units = sweep_units(check, rp, params);
  std::vector<UnitResult> parts;
  parts.reserve(units.size());
  for (const auto& u : units) parts.push_back(run_unit(check, u, rp, params.keep_reports));
  return merge_units(check, params, std::move(parts), units.size());
}

SweepSummary sweep(const std::string& check_id, const SweepParams& params) {
  return params.jobs > 1 ? sweep_parallel(check_id, params) : sweep_serial(check_id, params);
}

}  // namespace extlat

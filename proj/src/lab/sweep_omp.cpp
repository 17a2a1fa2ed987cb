#include <exception>

#include <omp.h>

#include "extlat/lab.hpp"

namespace extlat {

SweepSummary sweep_parallel(const std::string& check_id, const SweepParams& params) {
  const CheckDef& check = find_check(check_id);
  ResolvedParams rp = resolve(check, params);
  std::vector<Instance> units = sweep_units(check, rp, params);
  std::vector<UnitResult> parts(units.size());
  std::exception_ptr failure;
  const long count = static_cast<long>(units.size());
  const int threads = params.jobs > 0 ? params.jobs : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (long i = 0; i < count; ++i) {
    try {
      parts[static_cast<std::size_t>(i)] = run_unit(check, units[static_cast<std::size_t>(i)], rp, params.keep_reports);
    } catch (...) {
#pragma omp critical(extlat_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return merge_units(check, params, std::move(parts), units.size());
}

}  // namespace extlat

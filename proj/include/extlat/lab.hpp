#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "extlat/counting.hpp"
#include "extlat/qpoly.hpp"

namespace extlat {

// ---- instances and reports -------------------------------------------------

struct Instance {
  Poset poset;
  std::optional<Poset> other;
  std::vector<int> perm, perm2;  // 0-based values
  int t = 0, k = 0, x = -1, y = -1, a = 0;
  RestrictionSpec extra;  // additional pinned elements
  Mask subset = 0;
  Rational q = 0;
  int degree = 0;
  std::string describe() const;
};

using Value = std::variant<Count, QPoly, Rational>;
std::string to_string(const Value& v);

// Every check is phrased as lhs >= rhs (coefficient-wise for series).
struct VerificationReport {
  std::string check_id;
  std::string instance;
  Value lhs = Count(0);
  Value rhs = Count(0);
  bool holds = false;
  bool equality = false;
  std::optional<bool> predicted_equality;
  std::string note;
  bool equality_mismatch() const { return predicted_equality && *predicted_equality != equality; }
};

std::string to_json(const VerificationReport& r);
std::string csv_header();
std::string to_csv(const VerificationReport& r);

// ---- registry --------------------------------------------------------------

enum class CheckKind { Theorem, Conjecture, Conditional };
enum class Domain { Posets, Permutations };
std::string to_string(CheckKind k);

struct SweepParams {
  std::optional<int> n_min, n_max, t_max, k_max, degree;
  bool random = false;
  std::uint64_t seed = 1;
  int samples = 200;
  double density = 0.4;
  int jobs = 1;
  bool keep_reports = false;
};

struct ResolvedParams {
  int n_min = 1, n_max = 4, t_max = 5, k_max = 3, degree = 12;
};

struct UnitResult {
  std::size_t instances = 0;
  std::size_t equalities = 0;
  std::vector<VerificationReport> violations;
  std::vector<VerificationReport> mismatches;
  std::vector<VerificationReport> reports;
};

struct CheckDef {
  std::string id;
  CheckKind kind = CheckKind::Theorem;
  Domain domain = Domain::Posets;
  std::string summary;
  ResolvedParams defaults;
  // Instances generated from one family member.
  std::function<void(const Instance&, const ResolvedParams&, std::vector<Instance>&)> expand;
  std::function<VerificationReport(const Instance&)> verify;
  // Optional faster path over one family member; must agree with expand + verify.
  std::function<UnitResult(const Instance&, const ResolvedParams&, bool keep)> run_unit;
};

const std::vector<CheckDef>& registry();
class UnknownCheck : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
const CheckDef& find_check(const std::string& id);
VerificationReport verify(const std::string& check_id, const Instance& instance);
ResolvedParams resolve(const CheckDef& check, const SweepParams& params);

// ---- sweeps ----------------------------------------------------------------

struct SweepSummary {
  std::string check_id;
  std::string family;
  std::string status;  // theorem_verified, theorem_violated, conjecture_no_counterexample,
                       // conjecture_counterexample, conditional
  std::size_t units = 0;
  std::size_t instances_run = 0;
  std::size_t equalities = 0;
  std::vector<VerificationReport> violations;
  std::vector<VerificationReport> equality_mismatches;
  std::vector<VerificationReport> reports;  // only with keep_reports
  std::string to_json() const;
};

// Family members the check is swept over, in a fixed order.
std::vector<Instance> sweep_units(const CheckDef& check, const ResolvedParams& rp, const SweepParams& params);
UnitResult run_unit(const CheckDef& check, const Instance& unit, const ResolvedParams& rp, bool keep);
SweepSummary merge_units(const CheckDef& check, const SweepParams& params, std::vector<UnitResult>&& parts,
                         std::size_t units);

// Reference implementation: one unit after another.
SweepSummary sweep_serial(const std::string& check_id, const SweepParams& params);
// OpenMP kernel; results are merged in unit order, so output matches sweep_serial.
SweepSummary sweep_parallel(const std::string& check_id, const SweepParams& params);
// Dispatches on params.jobs.
SweepSummary sweep(const std::string& check_id, const SweepParams& params);

// ---- memoised counts (thread-local) ----------------------------------------

Count cached_extensions(const Poset& p);
IdealChainProfile cached_profile(const Poset& p);
Count cached_order_polynomial(const Poset& p, long t);
void clear_caches();

}  // namespace extlat

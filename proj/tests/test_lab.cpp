#include <doctest.h>

#include <json.hpp>
#include <set>

#include "extlat/audit.hpp"
#include "extlat/generate.hpp"
#include "extlat/lab.hpp"

using namespace extlat;

namespace {

Instance on(Poset p, int t = 0) {
  Instance in;
  in.poset = std::move(p);
  in.t = t;
  return in;
}

SweepParams small(int n_max, int jobs = 1) {
  SweepParams sp;
  sp.n_max = n_max;
  sp.jobs = jobs;
  return sp;
}

}  // namespace

TEST_CASE("single verifications") {
  auto bw = verify("BW", on(linear_sum(chain(1), antichain(2))));
  CHECK(bw.holds);
  CHECK(bw.equality);
  CHECK(bw.predicted_equality == true);
  CHECK_FALSE(bw.equality_mismatch());

  auto lc = verify("LOGC-STRICT", on(chain(2), 2));
  CHECK(to_string(lc.lhs) == "243");
  CHECK(to_string(lc.rhs) == "168");
  CHECK(lc.holds);

  Instance s;
  s.perm = {1, 3, 0, 2};
  s.poset = permutation_poset(s.perm);
  auto sid = verify("SID", s);
  CHECK(to_string(sid.lhs) == "25");
  CHECK(to_string(sid.rhs) == "24");
  CHECK_FALSE(sid.equality);
  CHECK(sid.predicted_equality == false);
  CHECK(sid.instance == "sigma=2,4,1,3");

  CHECK_THROWS_AS(verify("NOPE", s), UnknownCheck);
  CHECK_THROWS_AS(find_check("nope"), UnknownCheck);
}

TEST_CASE("report formats") {
  auto r = verify("BW", on(chain(2)));
  auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["check_id"] == "BW");
  CHECK(j["holds"] == true);
  CHECK(csv_header() == "check_id,instance,lhs,rhs,holds,equality");
  CHECK(to_csv(r) == "BW,P=2:1<2,2,2,true,true");
  auto lc = verify("LOGC-STRICT", on(chain(2), 2));
  CHECK(to_csv(lc) == "LOGC-STRICT,P=2:1<2;t=2,243,168,true,false");
}

TEST_CASE("registry ids are unique and resolvable") {
  std::set<std::string> ids;
  for (const auto& c : registry()) {
    CHECK(ids.insert(c.id).second);
    CHECK(&find_check(c.id) == &c);
  }
  for (const char* id : {"BW", "OP-HP", "OP-GEN", "SID", "SID-GEN", "MIXED-SID", "EHS", "KS-MON", "GRAHAM", "KS-FKG",
                         "MATCHING", "OP-ANALYTIC"})
    CHECK(ids.count(id) == 1);
  CHECK(find_check("MATCHING").kind == CheckKind::Conjecture);
  CHECK(find_check("OP-ANALYTIC").kind == CheckKind::Conditional);
}

TEST_CASE("serial and parallel sweeps agree") {
  for (const char* id : {"BW", "OP-HP", "SID", "EHS", "STANLEY", "MATCHING"}) {
    auto a = sweep_serial(id, small(4));
    auto b = sweep_parallel(id, small(4, 4));
    CHECK(a.to_json() == b.to_json());
    CHECK(a.instances_run > 0);
  }
}

TEST_CASE("sweep statuses") {
  CHECK(sweep("BW", small(4)).status == "theorem_verified");
  CHECK(sweep("KS-MON", small(3)).status == "conjecture_no_counterexample");
  auto m = sweep("MATCHING", small(3));
  CHECK(m.status == "conjecture_counterexample");
  REQUIRE_FALSE(m.violations.empty());
  CHECK(sweep("OP-ANALYTIC", small(3)).status == "conditional");
  auto ehs = sweep("EHS", small(3));
  CHECK(ehs.status == "theorem_verified");
  CHECK_FALSE(ehs.equality_mismatches.empty());
}

TEST_CASE("random sweeps are reproducible") {
  SweepParams sp;
  sp.random = true;
  sp.n_min = 6;
  sp.n_max = 7;
  sp.samples = 20;
  sp.seed = 99;
  auto a = sweep("OP-HP", sp);
  auto b = sweep("OP-HP", sp);
  CHECK(a.to_json() == b.to_json());
  sp.jobs = 3;
  CHECK(sweep("OP-HP", sp).to_json() == a.to_json());
  CHECK(a.units == 40);
  sp.seed = 100;
  sp.jobs = 1;
  auto c = sweep("OP-HP", sp);
  CHECK(c.units == a.units);
}

TEST_CASE("kept reports") {
  SweepParams sp = small(2);
  sp.keep_reports = true;
  auto s = sweep("BW", sp);
  CHECK(s.reports.size() == s.instances_run);
}

TEST_CASE("shepp audit") {
  auto one = shepp_audit(chain(1), 1, 3);
  CHECK(one.ok());
  CHECK(one.support == 3);

  auto full = shepp_audit(chain(2), 3, 3);
  CHECK(full.ok());
  CHECK(full.lattice_size == 9);
  CHECK(full.support == 6);
  CHECK(full.exhaustive_pairs);
  CHECK(full.exhaustive_triples);

  // 0 on the coordinate-wise block, 1 reversed: the relation is ignored.
  auto split = shepp_audit(chain(2), 1, 2);
  CHECK(split.ok());
  CHECK(split.support == 4);

  // A relation through the other block still binds the outer pair.
  auto through = shepp_audit(chain(3), bit(0) | bit(2), 2);
  CHECK(through.ok());
  CHECK(through.support == 3 * 2);

  CHECK_THROWS_AS(shepp_audit(antichain(6), 0, 10), CapExceeded);
}

TEST_CASE("matching graph") {
  auto c = matching_check(chain(3), 1, 2);
  CHECK(c.right == 0);
  CHECK(c.saturated());
  auto a = matching_check(antichain(3), 0, 2);
  CHECK(a.left == 4);
  CHECK(a.right == 4);
  CHECK(a.matching == 2);
  CHECK_FALSE(a.saturated());
}

TEST_CASE("comparability classes") {
  for (int n = 1; n <= 4; ++n) {
    auto r = comparability_class_check(n, 4);
    CHECK(r.invariant);
    CHECK(r.failures.empty());
  }
  // Labeled graphs on 3 vertices that are comparability graphs: all 8.
  auto three = comparability_class_check(3);
  CHECK(three.posets == 19);
  CHECK(three.classes == 8);
}

#include <doctest.h>

#include <variant>

#include "extlat/generate.hpp"
#include "extlat/restricted.hpp"
#include "oracles.hpp"

using namespace extlat;

namespace {

// Every chained spec with at most two pinned elements.
template <class F>
void for_each_chain_spec(const Poset& p, F&& visit) {
  int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int a = 1; a <= n; ++a) {
      visit(RestrictionSpec{{x}, {a}});
      for (int y = 0; y < n; ++y)
        if (p.less(x, y))
          for (int b = a + 1; b <= n; ++b) visit(RestrictionSpec{{x, y}, {a, b}});
    }
}

}  // namespace

TEST_CASE("decider and uniqueness agree with brute force") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n))
      for_each_chain_spec(p, [&](const RestrictionSpec& s) {
        auto c = oracle::restricted_count(p, s.u, s.a);
        CHECK(vanishing_decide(p, s) == (c > 0));
        CHECK(is_unique(p, s) == (c == 1));
      });
}

TEST_CASE("constructed witnesses are valid") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n))
      for_each_chain_spec(p, [&](const RestrictionSpec& s) {
        if (oracle::restricted_count(p, s.u, s.a) == 0) {
          CHECK_THROWS_AS(restricted_find(p, s), NoExtension);
          return;
        }
        FindStats stats;
        Word w = restricted_find(p, s, &stats);
        CHECK(is_linear_extension(p, w));
        for (std::size_t i = 0; i < s.u.size(); ++i) CHECK(w[s.a[i] - 1] == s.u[i]);
        CHECK(stats.steps >= 0);
        CHECK(uniqueness_decide(p, s, w) == (restricted_count(p, s) == 1));
      });
}

TEST_CASE("spec order does not matter") {
  Poset d = diamond();
  RestrictionSpec s{{3, 0}, {4, 1}};
  CHECK(sorted_spec(d, s) == RestrictionSpec{{0, 3}, {1, 4}});
  CHECK(vanishing_decide(d, s));
}

TEST_CASE("normalization reasons") {
  Poset d = diamond();  // 0 < 1, 2 < 3
  auto first = normalize_spec(d, {{1}, {1}});
  REQUIRE(std::holds_alternative<Infeasible>(first));
  CHECK(std::get<Infeasible>(first).reason == InfeasibleReason::BoundaryNotExtreme);
  auto last = normalize_spec(d, {{2}, {4}});
  REQUIRE(std::holds_alternative<Infeasible>(last));
  CHECK(std::get<Infeasible>(last).reason == InfeasibleReason::BoundaryNotExtreme);
  auto between = normalize_spec(d, {{0, 3}, {2, 3}});
  REQUIRE(std::holds_alternative<Infeasible>(between));
  CHECK(std::get<Infeasible>(between).reason == InfeasibleReason::ElementBetweenAdjacent);
  auto unordered = normalize_spec(d, {{3, 0}, {2, 3}});
  REQUIRE(std::holds_alternative<Infeasible>(unordered));
  CHECK(std::get<Infeasible>(unordered).reason == InfeasibleReason::NotAChain);
  CHECK(to_string(InfeasibleReason::NotAChain) == "not-a-chain");

  auto ok = normalize_spec(d, {{0, 1}, {1, 2}});
  REQUIRE(std::holds_alternative<NormalizedSpec>(ok));
  const auto& ns = std::get<NormalizedSpec>(ok);
  CHECK(ns.reduced.size() <= d.size());
  for (const auto& w : enumerate_restricted_extensions(ns.reduced, ns.spec)) {
    Word lifted = ns.lift_word(w);
    CHECK(is_linear_extension(d, lifted));
    CHECK(lifted[0] == 0);
    CHECK(lifted[1] == 1);
  }
}

TEST_CASE("malformed specs") {
  Poset d = diamond();
  CHECK_THROWS_AS(vanishing_decide(d, {{1, 2}, {2, 3}}), std::domain_error);
  CHECK_THROWS_AS(vanishing_decide(d, {{0}, {5}}), std::out_of_range);
  CHECK_THROWS_AS(vanishing_decide(d, {{0, 0}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(vanishing_decide(d, {{0, 1}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(uniqueness_decide(d, {{0}, {1}}, {0, 1, 3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(uniqueness_decide(d, {{1}, {2}}, {0, 2, 1, 3}), std::invalid_argument);
}

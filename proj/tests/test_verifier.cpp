#include <doctest.h>

#include "capkit/choquet.hpp"
#include "capkit/error.hpp"
#include "capkit/verifier.hpp"
#include "support.hpp"

using namespace capkit;
using namespace capkit::testing;

TEST_CASE("subadditivity on the fixtures") {
  CHECK_FALSE(check_subadditivity(cap_sub(), pf({q(1), q(0)}), pf({q(0), q(1)})));

  const auto report = check_subadditivity(cap_bad(), pf({q(1), q(0)}), pf({q(0), q(1)}));
  REQUIRE(report);
  CHECK(report->kind == ViolationKind::Subadditivity);
  CHECK(report->lhs == 1);
  CHECK(report->rhs == q(1, 5));

  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Capacity c = random_capacity(rng, 3);
    CHECK_FALSE(check_subadditivity(c, random_point_function(rng, 3), pf({q(0), q(0), q(0)})));
  }
  CHECK_THROWS_AS(check_subadditivity(cap_sub(), pf({q(1)}), pf({q(1)})), Error);
}

TEST_CASE("convexity on the fixtures") {
  const PointFunction x = pf({q(2), q(0)});
  const PointFunction y = pf({q(0), q(2)});

  const auto report = check_convexity(cap_bad(), x, y, q(1, 2));
  REQUIRE(report);
  CHECK(report->kind == ViolationKind::Convexity);
  CHECK(report->lhs == 1);
  CHECK(report->rhs == q(1, 5));
  CHECK(std::get<FunctionPair>(report->witnesses).lambda == q(1, 2));

  CHECK_FALSE(check_convexity(cap_sub(), x, y, q(1, 2)));

  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Capacity c = random_capacity(rng, 3);
    const PointFunction a = random_point_function(rng, 3);
    const PointFunction b = random_point_function(rng, 3);
    CHECK_FALSE(check_convexity(c, a, b, q(0)));
    CHECK_FALSE(check_convexity(c, a, b, q(1)));
  }

  for (const Rational& bad : {q(-1, 8), q(9, 8)}) {
    try {
      check_convexity(cap_sub(), x, y, bad);
      FAIL("expected BadLambda");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BadLambda);
    }
  }
}

TEST_CASE("indicator counterexample") {
  const auto found = indicator_counterexample(cap_bad());
  REQUIRE(found);
  CHECK(found->a == Event{0b01});
  CHECK(found->b == Event{0b10});
  CHECK(found->report.lhs == 1);
  CHECK(found->report.rhs == q(1, 5));
  CHECK_FALSE(indicator_counterexample(cap_sub()));
  CHECK_FALSE(indicator_counterexample(cap_add()));
}

TEST_CASE("indicator counterexample exists iff Eq. (1) fails") {
  Rng rng(77);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const Capacity c = random_capacity(rng, n);
    const auto found = indicator_counterexample(c);
    REQUIRE(found.has_value() == !oracle_submodular(c));
    if (found) {
      CHECK(found->report.gap() == c(found->a | found->b) + c(found->a & found->b) - c(found->a) - c(found->b));
    }
  }
}

TEST_CASE("exhaustive subadditivity") {
  CHECK_FALSE(exhaustive_subadditivity(cap_sub(), 3));
  CHECK_FALSE(exhaustive_subadditivity(cap_bad(), 0));
  CHECK_FALSE(exhaustive_subadditivity(cap_sub(), 0));

  const auto report = exhaustive_subadditivity(cap_bad(), 1);
  REQUIRE(report);
  const auto& pair = std::get<FunctionPair>(report->witnesses);
  CHECK(choquet_sorted(cap_bad(), pair.x + pair.y) == report->lhs);
  CHECK(report->lhs > report->rhs);

  CHECK(pair_count(2, 3) == 256);
  CHECK(pair_count(3, 3) == 4096);
  try {
    exhaustive_subadditivity(cap_sub(), 3, 255);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("exhaustive subadditivity agrees with a direct enumeration") {
  // Direct double loop with no lookup tables.
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(2));
    const Capacity c = random_capacity(rng, n);
    const std::int64_t max_value = 2;
    bool violated = false;
    const std::int64_t count = n == 1 ? 3 : 9;
    for (std::int64_t a = 0; a < count && !violated; ++a) {
      for (std::int64_t b = 0; b < count && !violated; ++b) {
        std::vector<std::int64_t> xs{a % 3}, ys{b % 3};
        if (n == 2) {
          xs.push_back(a / 3);
          ys.push_back(b / 3);
        }
        std::vector<std::int64_t> sum(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) sum[i] = xs[i] + ys[i];
        violated = oracle_level_sum(c, sum) > oracle_level_sum(c, xs) + oracle_level_sum(c, ys);
      }
    }
    CHECK(exhaustive_subadditivity(c, max_value).has_value() == violated);
    CHECK(violated == !oracle_submodular(c));
  }
}

TEST_CASE("sampled subadditivity reports coverage") {
  const auto clean = sampled_subadditivity(cap_sub(), 3, 100, 1);
  CHECK_FALSE(clean.violation);
  CHECK(clean.pairs_checked == 100);
  CHECK(clean.coverage == q(100, 256));

  const auto dirty = sampled_subadditivity(cap_bad(), 1, 1000, 1);
  CHECK(dirty.violation);
  CHECK(dirty.pairs_checked <= 1000);
}

TEST_CASE("equivalence scans find no disagreements") {
  ScanOptions options;
  options.n = 2;
  options.count = 200;
  options.max_value = 3;
  options.seed = 11;
  ScanReport report = equivalence_scan(options);
  CHECK(report.disagreements.empty());
  CHECK(report.agreements == 200);
  CHECK(report.capacities_tested == 200);
  CHECK(report.submodular_count >= 100);  // odd indices come from the submodular generator
  CHECK(report.submodular_count < 200);

  options = {};
  options.n = 1;
  options.count = 25;
  options.seed = 3;
  report = equivalence_scan(options);
  CHECK(report.disagreements.empty());
  CHECK(report.submodular_count == 25);

  options = {};
  options.n = 3;
  options.count = 50;
  options.max_value = 2;
  options.seed = 4;
  report = equivalence_scan(options);
  CHECK(report.disagreements.empty());
  CHECK(report.agreements == 50);
}

TEST_CASE("scan budget and sampling fallback") {
  ScanOptions options;
  options.n = 6;
  options.count = 10;
  options.max_value = 5;
  CHECK_THROWS_AS(equivalence_scan(options), Error);

  options.samples = 200;
  const ScanReport report = equivalence_scan(options);
  CHECK(report.sampled);
  CHECK(report.disagreements.empty());
  CHECK(report.coverage > 0);
  CHECK(report.coverage < q(1, 1000000));
}

TEST_CASE("scan directions are consistent") {
  for (std::size_t i = 0; i < 60; ++i) {
    const Capacity c = scan_capacity(4, 9, i);
    CHECK(indicator_counterexample(c).has_value() == check_submodular_exhaustive(c).has_value());
  }
}

TEST_CASE("convexity on a lambda grid matches subadditivity") {
  Rng rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(2));
    const Capacity c = random_capacity(rng, n);
    // Small-integer test set: all pairs of indicators scaled by 2.
    bool convex = true;
    for (Mask a = 0; a < c.num_events() && convex; ++a) {
      for (Mask b = 0; b < c.num_events() && convex; ++b) {
        const PointFunction x = Rational(2) * PointFunction::indicator(n, Event{a});
        const PointFunction y = Rational(2) * PointFunction::indicator(n, Event{b});
        for (int k = 0; k <= 8 && convex; ++k) convex = !check_convexity(c, x, y, q(k, 8));
      }
    }
    const bool subadditive = !exhaustive_subadditivity(c, 2);
    CHECK(convex == subadditive);
    CHECK(convex == oracle_submodular(c));
  }
}

TEST_CASE("scan report rendering") {
  ScanOptions options;
  options.n = 1;
  options.count = 4;
  options.seed = 2;
  const ScanReport report = equivalence_scan(options);
  CHECK(render_text(report) ==
        "scan: n=1, 4 capacities, max value 2, seed 2\n"
        "mode: exhaustive\n"
        "submodular: 4\n"
        "agreements: 4/4\n"
        "disagreements: 0\n"
        "verdict: ok\n");
  CHECK(render_machine(report) ==
        "scan v1\nn 1\ncount 4\nmax_value 2\nseed 2\nmode exhaustive\ncoverage 1\n"
        "capacities_tested 4\nsubmodular_count 4\nagreements 4\ndisagreements 0\n");

  const auto violation = check_subadditivity(cap_bad(), pf({q(1), q(0)}), pf({q(0), q(1)}));
  REQUIRE(violation);
  CHECK(render_machine(*violation) ==
        "kind subadditivity\n"
        "begin x\nfunction v1\nn 2\n0 1\n1 0\nend x\n"
        "begin y\nfunction v1\nn 2\n0 0\n1 1\nend y\n"
        "lhs 1\nrhs 1/5\n");
}

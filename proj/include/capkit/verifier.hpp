#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "capkit/capacity.hpp"
#include "capkit/functions.hpp"
#include "capkit/rational.hpp"

namespace capkit {

/// Reports int (X+Y) dc > int X dc + int Y dc.
std::optional<ViolationReport> check_subadditivity(const Capacity& c, const PointFunction& x,
                                                   const PointFunction& y);

/// Reports int (l X + (1-l) Y) dc > l int X dc + (1-l) int Y dc.
/// Requires 0 <= lambda <= 1 (BadLambda otherwise).
std::optional<ViolationReport> check_convexity(const Capacity& c, const PointFunction& x,
                                               const PointFunction& y, const Rational& lambda);

struct IndicatorCounterexample {
  Event a;
  Event b;
  ViolationReport report;  // subadditivity failure for X = 1_A, Y = 1_B
};

/// First pair (A, B) violating submodularity, turned into a subadditivity
/// failure of the indicators. Empty iff c is submodular.
std::optional<IndicatorCounterexample> indicator_counterexample(const Capacity& c);

inline constexpr std::uint64_t kDefaultPairBudget = 10'000'000;

/// (max_value + 1)^(2n), the number of IntFunction pairs with entries in
/// {0, ..., max_value}.
Integer pair_count(int n, std::int64_t max_value);

/// Every pair (X, Y) with entries in {0, ..., max_value}, in enumeration
/// order (X major; element 0 is the least significant digit). Throws
/// BudgetExceeded when pair_count exceeds `budget`.
std::optional<ViolationReport> exhaustive_subadditivity(const Capacity& c, std::int64_t max_value,
                                                        std::uint64_t budget = kDefaultPairBudget);

struct SampledSubadditivity {
  std::optional<ViolationReport> violation;
  std::uint64_t pairs_checked = 0;
  Rational coverage;  // pairs_checked / pair_count, pairs may repeat
};

/// Uniformly sampled pairs from the same range, for ranges past the budget.
SampledSubadditivity sampled_subadditivity(const Capacity& c, std::int64_t max_value,
                                           std::uint64_t samples, std::uint64_t seed);

struct ScanOptions {
  int n = 2;
  std::size_t count = 100;
  std::int64_t max_value = 2;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultPairBudget;
  /// 0: over-budget ranges raise BudgetExceeded. Otherwise they are sampled
  /// with this many pairs per capacity.
  std::uint64_t samples = 0;
};

struct Disagreement {
  std::size_t index;
  Capacity capacity;
  ViolationReport report;
};

struct ScanReport {
  ScanOptions options;
  bool sampled = false;
  Rational coverage = 1;  // minimum over capacities
  std::size_t capacities_tested = 0;
  std::size_t submodular_count = 0;
  std::size_t agreements = 0;
  std::vector<Disagreement> disagreements;
};

/// Capacity i of a scan, alternating between the monotone (even i) and
/// submodular (odd i) generators.
Capacity scan_capacity(int n, std::uint64_t seed, std::size_t index);

/// Both directions on random capacities: submodular => no subadditivity
/// violation in range; not submodular => an indicator counterexample exists.
/// Any failure is recorded as a disagreement.
ScanReport equivalence_scan(const ScanOptions& options);

std::string render_text(const ViolationReport& report);
std::string render_machine(const ViolationReport& report);

std::string render_text(const ScanReport& report);
std::string render_machine(const ScanReport& report);

}  // namespace capkit

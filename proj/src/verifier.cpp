#include "capkit/verifier.hpp"

#include <sstream>

#include "capkit/choquet.hpp"
#include "capkit/error.hpp"
#include "capkit/io.hpp"
#include "capkit/random.hpp"

namespace capkit {

namespace {

void require_dimensions(const Capacity& c, const PointFunction& x, const PointFunction& y) {
  if (x.size() != static_cast<std::size_t>(c.size()) || y.size() != x.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "capacity on " + std::to_string(c.size()) + " elements, functions of size " +
                    std::to_string(x.size()) + " and " + std::to_string(y.size()));
  }
}

/// Functions with entries in {0, ..., max_value}, indexed in base
/// (max_value + 1) with element 0 least significant.
class FunctionGrid {
 public:
  FunctionGrid(int n, std::int64_t max_value) : n_(n), base_(max_value + 1) {
    size_ = 1;
    for (int i = 0; i < n; ++i) size_ *= static_cast<std::uint64_t>(base_);
  }

  std::uint64_t size() const { return size_; }

  IntFunction at(std::uint64_t index) const {
    std::vector<IntFunction::value_type> values(n_);
    for (auto& v : values) {
      v = static_cast<IntFunction::value_type>(index % base_);
      index /= base_;
    }
    return IntFunction(std::move(values));
  }

 private:
  int n_;
  std::int64_t base_;
  std::uint64_t size_;
};

/// Integrals of every function in a grid, looked up by entries.
class IntegralTable {
 public:
  IntegralTable(const Capacity& c, std::int64_t max_value)
      : base_(max_value + 1), grid_(c.size(), max_value) {
    table_.reserve(grid_.size());
    for (std::uint64_t i = 0; i < grid_.size(); ++i) table_.push_back(choquet_integer(c, grid_.at(i)));
  }

  const Rational& operator[](const IntFunction& f) const {
    std::uint64_t index = 0;
    for (std::size_t i = f.size(); i-- > 0;) index = index * base_ + static_cast<std::uint64_t>(f[i]);
    return table_[index];
  }

 private:
  std::uint64_t base_;
  FunctionGrid grid_;
  std::vector<Rational> table_;
};

ViolationReport subadditivity_report(const IntFunction& x, const IntFunction& y, Rational lhs,
                                     Rational rhs) {
  return {ViolationKind::Subadditivity,
          FunctionPair{x.to_point_function(), y.to_point_function(), std::nullopt}, std::move(lhs),
          std::move(rhs)};
}

void require_max_value(std::int64_t max_value) {
  if (max_value < 0) {
    throw Error(ErrorCode::BudgetExceeded, "max value " + std::to_string(max_value) + " is negative");
  }
}

std::string format_values(const PointFunction& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ", ";
    out += to_string(x[i]);
  }
  return out + ")";
}

}  // namespace

std::optional<ViolationReport> check_subadditivity(const Capacity& c, const PointFunction& x,
                                                   const PointFunction& y) {
  require_dimensions(c, x, y);
  Rational lhs = choquet_sorted(c, x + y);
  Rational rhs = choquet_sorted(c, x) + choquet_sorted(c, y);
  if (lhs <= rhs) return std::nullopt;
  return ViolationReport{ViolationKind::Subadditivity, FunctionPair{x, y, std::nullopt},
                         std::move(lhs), std::move(rhs)};
}

std::optional<ViolationReport> check_convexity(const Capacity& c, const PointFunction& x,
                                               const PointFunction& y, const Rational& lambda) {
  if (lambda < 0 || lambda > 1) {
    throw Error(ErrorCode::BadLambda, "lambda = " + to_string(lambda) + " outside [0, 1]");
  }
  require_dimensions(c, x, y);
  const Rational rest = 1 - lambda;
  Rational lhs = choquet_sorted(c, lambda * x + rest * y);
  Rational rhs = lambda * choquet_sorted(c, x) + rest * choquet_sorted(c, y);
  if (lhs <= rhs) return std::nullopt;
  return ViolationReport{ViolationKind::Convexity, FunctionPair{x, y, lambda}, std::move(lhs),
                         std::move(rhs)};
}

std::optional<IndicatorCounterexample> indicator_counterexample(const Capacity& c) {
  const auto violation = check_submodular_exhaustive(c);
  if (!violation) return std::nullopt;
  const auto [a, b] = std::get<EventPair>(violation->witnesses);
  const std::size_t n = static_cast<std::size_t>(c.size());
  auto report = check_subadditivity(c, PointFunction::indicator(n, a), PointFunction::indicator(n, b));
  // int (1_A + 1_B) dc = c(A|B) + c(A&B), so the two failures coincide.
  if (!report || report->lhs != violation->lhs || report->rhs != violation->rhs) {
    throw std::logic_error("indicator integrals disagree with the submodularity violation");
  }
  return IndicatorCounterexample{a, b, std::move(*report)};
}

Integer pair_count(int n, std::int64_t max_value) {
  Integer total = 1;
  for (int i = 0; i < 2 * n; ++i) total *= Integer(max_value + 1);
  return total;
}

std::optional<ViolationReport> exhaustive_subadditivity(const Capacity& c, std::int64_t max_value,
                                                        std::uint64_t budget) {
  require_max_value(max_value);
  const Integer pairs = pair_count(c.size(), max_value);
  if (pairs > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                pairs.str() + " function pairs exceed the budget of " + std::to_string(budget));
  }
  const FunctionGrid grid(c.size(), max_value);
  const IntegralTable singles(c, max_value);
  const IntegralTable sums(c, 2 * max_value);

  std::vector<IntFunction> functions;
  functions.reserve(grid.size());
  for (std::uint64_t i = 0; i < grid.size(); ++i) functions.push_back(grid.at(i));

  for (const IntFunction& x : functions) {
    const Rational& integral_x = singles[x];
    for (const IntFunction& y : functions) {
      const Rational& lhs = sums[x + y];
      Rational rhs = integral_x + singles[y];
      if (lhs > rhs) return subadditivity_report(x, y, lhs, std::move(rhs));
    }
  }
  return std::nullopt;
}

SampledSubadditivity sampled_subadditivity(const Capacity& c, std::int64_t max_value,
                                           std::uint64_t samples, std::uint64_t seed) {
  require_max_value(max_value);
  Rng rng(seed);
  const std::size_t n = static_cast<std::size_t>(c.size());
  auto draw = [&] {
    std::vector<IntFunction::value_type> values(n);
    for (auto& v : values) v = rng.between(0, max_value);
    return IntFunction(std::move(values));
  };

  SampledSubadditivity result;
  for (; result.pairs_checked < samples; ++result.pairs_checked) {
    const IntFunction x = draw();
    const IntFunction y = draw();
    Rational lhs = choquet_integer(c, x + y);
    Rational rhs = choquet_integer(c, x) + choquet_integer(c, y);
    if (lhs > rhs) {
      result.violation = subadditivity_report(x, y, std::move(lhs), std::move(rhs));
      ++result.pairs_checked;
      break;
    }
  }
  result.coverage = Rational(Integer(result.pairs_checked), pair_count(c.size(), max_value));
  return result;
}

Capacity scan_capacity(int n, std::uint64_t seed, std::size_t index) {
  const std::uint64_t derived = Rng::mix(seed) ^ Rng::mix(0x5ca11ab1eULL + index);
  return index % 2 == 0 ? random_monotone_capacity(n, derived) : random_submodular_capacity(n, derived);
}

ScanReport equivalence_scan(const ScanOptions& options) {
  require_max_value(options.max_value);
  if (options.n < 1 || options.n > kMaxGroundSetSize) {
    throw Error(ErrorCode::BudgetExceeded, "ground-set size " + std::to_string(options.n));
  }
  const bool over_budget = pair_count(options.n, options.max_value) > options.budget;
  if (over_budget && options.samples == 0) {
    throw Error(ErrorCode::BudgetExceeded,
                pair_count(options.n, options.max_value).str() +
                    " function pairs per capacity exceed the budget of " +
                    std::to_string(options.budget));
  }

  ScanReport report;
  report.options = options;
  report.sampled = over_budget;
  for (std::size_t i = 0; i < options.count; ++i) {
    Capacity c = scan_capacity(options.n, options.seed, i);
    ++report.capacities_tested;

    std::optional<ViolationReport> failure;
    if (const auto submodularity = check_submodular_exhaustive(c); !submodularity) {
      ++report.submodular_count;
      if (over_budget) {
        auto sampled = sampled_subadditivity(c, options.max_value, options.samples,
                                             Rng::mix(options.seed + i));
        report.coverage = std::min(report.coverage, sampled.coverage);
        failure = std::move(sampled.violation);
      } else {
        failure = exhaustive_subadditivity(c, options.max_value, options.budget);
      }
    } else if (!indicator_counterexample(c)) {
      failure = *submodularity;
    }

    if (failure) {
      report.disagreements.push_back({i, std::move(c), std::move(*failure)});
    } else {
      ++report.agreements;
    }
  }
  return report;
}

std::string render_text(const ViolationReport& report) {
  std::ostringstream out;
  out << to_string(report.kind) << " violated\n";
  if (const auto* events = std::get_if<EventPair>(&report.witnesses)) {
    out << "A = " << to_string(events->a) << "\nB = " << to_string(events->b) << "\n";
    out << "c(A|B) + c(A&B) = " << to_string(report.lhs) << "\n";
    out << "c(A) + c(B) = " << to_string(report.rhs) << "\n";
  } else {
    const auto& functions = std::get<FunctionPair>(report.witnesses);
    out << "X = " << format_values(functions.x) << "\nY = " << format_values(functions.y) << "\n";
    if (functions.lambda) out << "lambda = " << to_string(*functions.lambda) << "\n";
    out << "lhs = " << to_string(report.lhs) << "\nrhs = " << to_string(report.rhs) << "\n";
  }
  return out.str();
}

std::string render_machine(const ViolationReport& report) {
  std::ostringstream out;
  out << "kind " << to_string(report.kind) << "\n";
  if (const auto* events = std::get_if<EventPair>(&report.witnesses)) {
    out << "a " << events->a.mask << "\nb " << events->b.mask << "\n";
  } else {
    const auto& functions = std::get<FunctionPair>(report.witnesses);
    if (functions.lambda) out << "lambda " << to_string(*functions.lambda) << "\n";
    out << "begin x\n" << serialize(functions.x) << "end x\n";
    out << "begin y\n" << serialize(functions.y) << "end y\n";
  }
  out << "lhs " << to_string(report.lhs) << "\nrhs " << to_string(report.rhs) << "\n";
  return out.str();
}

std::string render_text(const ScanReport& report) {
  const ScanOptions& o = report.options;
  std::ostringstream out;
  out << "scan: n=" << o.n << ", " << report.capacities_tested << " capacities, max value "
      << o.max_value << ", seed " << o.seed << "\n";
  out << "mode: " << (report.sampled ? "sampled" : "exhaustive");
  if (report.sampled) out << " (min coverage " << to_string(report.coverage) << ")";
  out << "\n";
  out << "submodular: " << report.submodular_count << "\n";
  out << "agreements: " << report.agreements << "/" << report.capacities_tested << "\n";
  out << "disagreements: " << report.disagreements.size() << "\n";
  for (const Disagreement& d : report.disagreements) {
    out << "-- capacity #" << d.index << "\n" << serialize(d.capacity) << render_text(d.report);
  }
  out << "verdict: " << (report.disagreements.empty() ? "ok" : "FAILED") << "\n";
  return out.str();
}

std::string render_machine(const ScanReport& report) {
  const ScanOptions& o = report.options;
  std::ostringstream out;
  out << "scan v1\n";
  out << "n " << o.n << "\ncount " << o.count << "\nmax_value " << o.max_value << "\nseed " << o.seed
      << "\n";
  out << "mode " << (report.sampled ? "sampled" : "exhaustive") << "\n";
  out << "coverage " << to_string(report.coverage) << "\n";
  out << "capacities_tested " << report.capacities_tested << "\n";
  out << "submodular_count " << report.submodular_count << "\n";
  out << "agreements " << report.agreements << "\n";
  out << "disagreements " << report.disagreements.size() << "\n";
  for (const Disagreement& d : report.disagreements) {
    out << "disagreement " << d.index << "\n";
    out << "begin capacity\n" << serialize(d.capacity) << "end capacity\n";
    out << render_machine(d.report);
  }
  return out.str();
}

}  // namespace capkit

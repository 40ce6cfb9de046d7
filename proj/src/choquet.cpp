#include "capkit/choquet.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "capkit/error.hpp"

namespace capkit {

namespace {

void require_dimension(const Capacity& c, std::size_t size) {
  if (size != static_cast<std::size_t>(c.size())) {
    throw Error(ErrorCode::DimensionMismatch, "capacity on " + std::to_string(c.size()) +
                                                  " elements, function of size " +
                                                  std::to_string(size));
  }
}

Event strictly_above(const PointFunction& x, const Rational& level) {
  Mask mask = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > level) mask |= Mask{1} << i;
  }
  return {mask};
}

}  // namespace

Rational sup_norm(const PointFunction& x) {
  Rational best = 0;
  for (const Rational& v : x.values()) best = std::max(best, abs(v));
  return best;
}

ShiftedFunction shift_nonnegative(const PointFunction& x) {
  Rational norm = sup_norm(x);
  return {x + norm, std::move(norm)};
}

Rational choquet_layer_cake(const Capacity& c, const PointFunction& x) {
  require_dimension(c, x.size());
  std::vector<Rational> breaks(x.values().begin(), x.values().end());
  breaks.emplace_back(0);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  Rational total = 0;
  for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
    const Rational width = breaks[j + 1] - breaks[j];
    const Rational& level = c(strictly_above(x, breaks[j]));
    // 0 is a breakpoint, so each interval lies entirely on one side of it.
    if (breaks[j + 1] <= 0) {
      total += width * (level - 1);
    } else {
      total += width * level;
    }
  }
  return total;
}

Rational choquet_sorted(const Capacity& c, const PointFunction& x) {
  require_dimension(c, x.size());
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });

  Rational total = 0;
  Event top{};
  const Rational* previous = &c(top);
  for (std::size_t i : order) {
    top = top | singleton(static_cast<int>(i));
    const Rational& current = c(top);
    total += x[i] * (current - *previous);
    previous = &current;
  }
  return total;
}

Rational choquet_integer(const Capacity& c, const IntFunction& k) {
  require_dimension(c, k.size());
  std::vector<IntFunction::value_type> levels(k.values().begin(), k.values().end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  // {K >= j} is constant for j in (previous level, level], so the terms of
  // sum_{j >= 1} c(K >= j) are grouped by run.
  Rational total = 0;
  IntFunction::value_type previous = 0;
  for (auto level : levels) {
    if (level <= 0) continue;
    total += Rational(level - previous) * c(k.at_least(level));
    previous = level;
  }
  return total;
}

IntFunction scaled_floor(const PointFunction& x, std::int64_t scale) {
  std::vector<IntFunction::value_type> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0) {
      throw Error(ErrorCode::NegativeInput, "entry " + std::to_string(i) + " is " + to_string(x[i]));
    }
    out[i] = floor_to_int64(x[i] * scale);
  }
  return IntFunction(std::move(out));
}

DyadicApproximation dyadic_approximation(const Capacity& c, const PointFunction& x, std::int64_t n) {
  require_dimension(c, x.size());
  if (n < 1) throw Error(ErrorCode::NegativeInput, "grid size n = " + std::to_string(n));
  const IntFunction grid = scaled_floor(x, n);
  Rational approx = choquet_integer(c, grid) / n;
  Rational error = choquet_layer_cake(c, x) - approx;
  return {std::move(approx), std::move(error)};
}

}  // namespace capkit

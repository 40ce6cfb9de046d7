#include "capkit/capacity.hpp"

#include <algorithm>
#include <numeric>

#include "capkit/error.hpp"
#include "capkit/random.hpp"

namespace capkit {

namespace {

constexpr std::uint64_t kDrawDenominator = 1000;
constexpr int kRetryBudget = 64;
constexpr int kDistortionSegments = 8;

std::vector<Mask> masks_by_popcount(int n) {
  std::vector<Mask> masks(std::size_t{1} << n);
  std::iota(masks.begin(), masks.end(), Mask{0});
  std::stable_sort(masks.begin(), masks.end(),
                   [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  return masks;
}

ViolationReport submodularity_report(const Capacity& c, Event a, Event b) {
  return ViolationReport{ViolationKind::Submodularity, EventPair{a, b}, c(a | b) + c(a & b),
                         c(a) + c(b)};
}

}  // namespace

MonotonicityError::MonotonicityError(Event lower, Event upper, const Rational& lower_value,
                                     const Rational& upper_value)
    : Error(ErrorCode::NotMonotone, "c(" + to_string(lower) + ") = " + to_string(lower_value) +
                                        " > c(" + to_string(upper) + ") = " + to_string(upper_value)),
      lower_(lower),
      upper_(upper) {}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Submodularity: return "submodularity";
    case ViolationKind::Subadditivity: return "subadditivity";
    case ViolationKind::Convexity: return "convexity";
  }
  return "unknown";
}

Capacity build_capacity(int n, std::vector<Rational> values) {
  if (n < 1 || n > kMaxGroundSetSize) {
    throw Error(ErrorCode::WrongLength,
                "ground-set size " + std::to_string(n) + " outside [1, " +
                    std::to_string(kMaxGroundSetSize) + "]");
  }
  const std::size_t expected = std::size_t{1} << n;
  if (values.size() != expected) {
    throw Error(ErrorCode::WrongLength, "expected " + std::to_string(expected) + " values, got " +
                                            std::to_string(values.size()));
  }
  // Monotonicity first: a non-monotone input is reported as such even when its
  // endpoints are also off.
  for (Mask up = 1; up < expected; ++up) {
    for (int i = 0; i < n; ++i) {
      if (!((up >> i) & 1U)) continue;
      const Mask low = up & ~(Mask{1} << i);
      if (values[low] > values[up]) throw MonotonicityError(Event{low}, Event{up}, values[low], values[up]);
    }
  }
  if (values.front() != 0 || values.back() != 1) {
    throw Error(ErrorCode::NotNormalized, "c(empty) = " + to_string(values.front()) +
                                              ", c(full) = " + to_string(values.back()));
  }
  for (const Rational& v : values) {
    if (v < 0 || v > 1) {
      throw Error(ErrorCode::NotMonotone, "value " + to_string(v) + " outside [0, 1]");
    }
  }
  return Capacity(n, std::move(values));
}

std::optional<ViolationReport> check_submodular_exhaustive(const Capacity& c) {
  const Mask count = static_cast<Mask>(c.num_events());
  for (Mask a = 0; a < count; ++a) {
    for (Mask b = a + 1; b < count; ++b) {
      const Event ea{a}, eb{b};
      if (c(ea | eb) + c(ea & eb) > c(ea) + c(eb)) return submodularity_report(c, ea, eb);
    }
  }
  return std::nullopt;
}

std::optional<ViolationReport> check_submodular_local(const Capacity& c) {
  const int n = c.size();
  const Mask count = static_cast<Mask>(c.num_events());
  for (Mask base = 0; base < count; ++base) {
    for (int i = 0; i < n; ++i) {
      if ((base >> i) & 1U) continue;
      for (int j = i + 1; j < n; ++j) {
        if ((base >> j) & 1U) continue;
        const Event a{base | (Mask{1} << i)};
        const Event b{base | (Mask{1} << j)};
        if (c(a | b) + c(Event{base}) > c(a) + c(b)) return submodularity_report(c, a, b);
      }
    }
  }
  return std::nullopt;
}

Capacity random_monotone_capacity(int n, std::uint64_t seed) {
  if (n < 1 || n > kMaxGroundSetSize) {
    throw Error(ErrorCode::WrongLength, "ground-set size " + std::to_string(n));
  }
  Rng rng(seed);
  const std::vector<Mask> order = masks_by_popcount(n);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    std::vector<Rational> values(order.size());
    for (Mask a : order) {
      if (a == 0) continue;
      Rational v(static_cast<std::int64_t>(rng.below(kDrawDenominator + 1)),
                 static_cast<std::int64_t>(kDrawDenominator));
      for (int i = 0; i < n; ++i) {
        if ((a >> i) & 1U) v = std::max(v, values[a & ~(Mask{1} << i)]);
      }
      values[a] = std::move(v);
    }
    const Rational top = values.back();
    if (top == 0) continue;
    for (Rational& v : values) v /= top;
    return build_capacity(n, std::move(values));
  }
  throw Error(ErrorCode::DegenerateDraw,
              "all-zero draw " + std::to_string(kRetryBudget) + " times in a row");
}

Capacity random_submodular_capacity(int n, std::uint64_t seed) {
  if (n < 1 || n > kMaxGroundSetSize) {
    throw Error(ErrorCode::WrongLength, "ground-set size " + std::to_string(n));
  }
  Rng rng(seed);
  const std::size_t count = std::size_t{1} << n;
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    // Probability vector with strictly positive weights.
    std::vector<std::int64_t> weights(n);
    std::int64_t total_weight = 0;
    for (auto& w : weights) {
      w = 1 + static_cast<std::int64_t>(rng.below(kDrawDenominator));
      total_weight += w;
    }

    // Nonincreasing slopes on a uniform grid give a concave, nondecreasing g.
    std::vector<std::int64_t> slopes(kDistortionSegments);
    for (auto& s : slopes) s = static_cast<std::int64_t>(rng.below(kDrawDenominator + 1));
    std::sort(slopes.begin(), slopes.end(), std::greater<>());
    const std::int64_t slope_total = std::accumulate(slopes.begin(), slopes.end(), std::int64_t{0});
    if (slope_total == 0) continue;

    // Knot values g(j/G) before normalization, scaled by G.
    std::vector<std::int64_t> knots(kDistortionSegments + 1, 0);
    for (int j = 0; j < kDistortionSegments; ++j) knots[j + 1] = knots[j] + slopes[j];

    auto distort = [&](const Rational& t) {
      const Rational scaled = t * kDistortionSegments;
      std::int64_t seg = floor_to_int64(scaled);
      seg = std::clamp<std::int64_t>(seg, 0, kDistortionSegments - 1);
      const Rational raw = Rational(knots[seg]) + Rational(slopes[seg]) * (scaled - seg);
      return raw / slope_total;
    };

    std::vector<Rational> values(count);
    for (Mask a = 0; a < count; ++a) {
      std::int64_t mass = 0;
      for (int i = 0; i < n; ++i) {
        if ((a >> i) & 1U) mass += weights[i];
      }
      values[a] = distort(Rational(mass, total_weight));
    }
    Capacity c = build_capacity(n, std::move(values));
    if (!check_submodular_exhaustive(c)) return c;
  }
  throw Error(ErrorCode::GenerationFailed,
              "no submodular draw in " + std::to_string(kRetryBudget) + " attempts");
}

Capacity additive_capacity(std::span<const Rational> weights) {
  const int n = static_cast<int>(weights.size());
  if (n < 1 || n > kMaxGroundSetSize) {
    throw Error(ErrorCode::WrongLength, "ground-set size " + std::to_string(n));
  }
  std::vector<Rational> values(std::size_t{1} << n);
  for (Mask a = 1; a < values.size(); ++a) {
    const int low = std::countr_zero(a);
    values[a] = values[a & (a - 1)] + weights[low];
  }
  return build_capacity(n, std::move(values));
}

}  // namespace capkit

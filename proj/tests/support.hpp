#pragma once

// Shared fixtures, generators and brute-force oracles for the test suites.
// The oracles deliberately avoid the library's evaluators.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "capkit/capacity.hpp"
#include "capkit/functions.hpp"
#include "capkit/random.hpp"
#include "capkit/rational.hpp"

namespace capkit::testing {

inline Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

inline Capacity cap2(Rational a, Rational b) { return build_capacity(2, {q(0), a, b, q(1)}); }

// n = 2, masks ordered {}, {0}, {1}, {0,1}.
inline Capacity cap_add() { return cap2(q(1, 2), q(1, 2)); }
inline Capacity cap_sub() { return cap2(q(7, 10), q(7, 10)); }
inline Capacity cap_bad() { return cap2(q(1, 10), q(1, 10)); }

inline PointFunction pf(std::initializer_list<Rational> values) {
  return PointFunction(std::vector<Rational>(values));
}
inline IntFunction ifn(std::initializer_list<std::int64_t> values) {
  return IntFunction(std::vector<std::int64_t>(values));
}

inline std::string data_path(const std::string& name) {
  return std::string(CAPKIT_TEST_DATA_DIR) + "/data/" + name;
}
inline std::string golden_path(const std::string& name) {
  return std::string(CAPKIT_TEST_DATA_DIR) + "/golden/" + name;
}

/// Rational with denominator in [1, max_den] and |value| <= magnitude.
inline Rational random_rational(Rng& rng, std::int64_t max_den, std::int64_t magnitude) {
  const std::int64_t den = rng.between(1, max_den);
  return Rational(rng.between(-magnitude * den, magnitude * den), den);
}

inline PointFunction random_point_function(Rng& rng, int n, std::int64_t max_den = 1000,
                                           std::int64_t magnitude = 5) {
  std::vector<Rational> values(n);
  for (auto& v : values) {
    // Occasional repeats exercise ties in the level sets.
    v = (rng.below(4) == 0 && &v != values.data()) ? *(&v - 1) : random_rational(rng, max_den, magnitude);
  }
  return PointFunction(std::move(values));
}

inline PointFunction random_nonnegative_function(Rng& rng, int n, std::int64_t max_den = 1000,
                                                 std::int64_t magnitude = 5) {
  std::vector<Rational> values(n);
  for (auto& v : values) {
    const std::int64_t den = rng.between(1, max_den);
    v = Rational(rng.between(0, magnitude * den), den);
  }
  return PointFunction(std::move(values));
}

inline IntFunction random_int_function(Rng& rng, int n, std::int64_t max_value) {
  std::vector<std::int64_t> values(n);
  for (auto& v : values) v = rng.between(0, max_value);
  return IntFunction(std::move(values));
}

/// Mixture of monotone, submodular and near-boundary capacities (a submodular
/// capacity with one value nudged by 1/1000, kept only if still monotone).
inline Capacity random_capacity(Rng& rng, int n) {
  const std::uint64_t seed = rng.below(UINT64_MAX);
  switch (rng.below(3)) {
    case 0: return random_monotone_capacity(n, seed);
    case 1: return random_submodular_capacity(n, seed);
    default: {
      Capacity base = random_submodular_capacity(n, seed);
      std::vector<Rational> values(base.values().begin(), base.values().end());
      if (values.size() > 2) {
        const std::size_t target = 1 + rng.below(values.size() - 2);
        values[target] += rng.below(2) ? q(1, 1000) : q(-1, 1000);
      }
      try {
        return build_capacity(n, std::move(values));
      } catch (const Error&) {
        return base;
      }
    }
  }
}

// ---- oracles ----------------------------------------------------------------

/// Eq. (1) over all ordered pairs.
inline bool oracle_submodular(const Capacity& c) {
  const auto v = c.values();
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = 0; b < v.size(); ++b) {
      if (v[a | b] + v[a & b] > v[a] + v[b]) return false;
    }
  }
  return true;
}

/// sum_{k=1}^{max K} c({K >= k}), one term per k.
inline Rational oracle_level_sum(const Capacity& c, const std::vector<std::int64_t>& k) {
  std::int64_t top = 0;
  for (auto v : k) top = std::max(top, v);
  Rational total = 0;
  for (std::int64_t level = 1; level <= top; ++level) {
    std::size_t mask = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (k[i] >= level) mask |= std::size_t{1} << i;
    }
    total += c.values()[mask];
  }
  return total;
}

/// Integral of a rational function by clearing denominators: with D the lcm
/// of the denominators and m an integer with X + m >= 0,
/// int X dc = (1/D) sum_k c(D(X+m) >= k) - m. Only for small D * range.
inline Rational oracle_scaled_level_sum(const Capacity& c, const PointFunction& x) {
  Integer d = 1;
  Integer lowest = 0;
  for (const Rational& v : x.values()) {
    d = lcm(d, denominator(v));
    lowest = std::min(lowest, floor(v));
  }
  const std::int64_t shift = -lowest.convert_to<std::int64_t>();
  const std::int64_t scale = d.convert_to<std::int64_t>();
  std::vector<std::int64_t> scaled(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Rational s = (x[i] + shift) * scale;
    scaled[i] = numerator(s).convert_to<std::int64_t>();
  }
  return oracle_level_sum(c, scaled) / scale - shift;
}

}  // namespace capkit::testing

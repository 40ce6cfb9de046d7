#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "capkit/event.hpp"
#include "capkit/rational.hpp"

namespace capkit {

/// Real-valued function on a finite ground set, one exact value per element.
class PointFunction {
 public:
  PointFunction() = default;
  explicit PointFunction(std::vector<Rational> values) : values_(std::move(values)) {}

  static PointFunction constant(std::size_t n, const Rational& value) {
    return PointFunction(std::vector<Rational>(n, value));
  }
  static PointFunction indicator(std::size_t n, Event event);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  std::span<const Rational> values() const { return values_; }

  friend bool operator==(const PointFunction&, const PointFunction&) = default;

 private:
  std::vector<Rational> values_;
};

PointFunction operator+(const PointFunction& x, const PointFunction& y);
PointFunction operator+(const PointFunction& x, const Rational& shift);
PointFunction operator*(const Rational& scale, const PointFunction& x);

/// Nonnegative integer-valued function; construction rejects negative entries
/// with ErrorCode::NegativeInput.
class IntFunction {
 public:
  using value_type = std::int64_t;

  IntFunction() = default;
  explicit IntFunction(std::vector<value_type> values);

  static IntFunction zero(std::size_t n) { return IntFunction(std::vector<value_type>(n, 0)); }
  /// Exact conversion; throws unless every entry is a nonnegative integer.
  static IntFunction from_point_function(const PointFunction& x);

  std::size_t size() const { return values_.size(); }
  value_type operator[](std::size_t i) const { return values_[i]; }
  std::span<const value_type> values() const { return values_; }
  value_type max() const;

  PointFunction to_point_function() const;

  /// {omega : value >= level} as a mask.
  Event at_least(value_type level) const;

  friend bool operator==(const IntFunction&, const IntFunction&) = default;

 private:
  std::vector<value_type> values_;
};

IntFunction operator+(const IntFunction& x, const IntFunction& y);

/// Entrywise floor(x / 2) and floor((x + 1) / 2).
IntFunction half_floor(const IntFunction& x);
IntFunction half_ceil(const IntFunction& x);

}  // namespace capkit

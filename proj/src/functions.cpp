#include "capkit/functions.hpp"

#include <algorithm>
#include <stdexcept>

#include "capkit/error.hpp"

namespace capkit {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch,
                "functions of size " + std::to_string(a) + " and " + std::to_string(b));
  }
}

}  // namespace

std::string to_string(Event event) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (!event.contains(i)) continue;
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

PointFunction PointFunction::indicator(std::size_t n, Event event) {
  std::vector<Rational> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = event.contains(static_cast<int>(i)) ? 1 : 0;
  return PointFunction(std::move(values));
}

PointFunction operator+(const PointFunction& x, const PointFunction& y) {
  require_same_size(x.size(), y.size());
  std::vector<Rational> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return PointFunction(std::move(out));
}

PointFunction operator+(const PointFunction& x, const Rational& shift) {
  std::vector<Rational> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + shift;
  return PointFunction(std::move(out));
}

PointFunction operator*(const Rational& scale, const PointFunction& x) {
  std::vector<Rational> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = scale * x[i];
  return PointFunction(std::move(out));
}

IntFunction::IntFunction(std::vector<value_type> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0) {
      throw Error(ErrorCode::NegativeInput,
                  "entry " + std::to_string(i) + " is " + std::to_string(values_[i]));
    }
  }
}

IntFunction IntFunction::from_point_function(const PointFunction& x) {
  std::vector<value_type> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!is_integer(x[i])) {
      throw std::invalid_argument("entry " + std::to_string(i) + " (" + to_string(x[i]) +
                                  ") is not an integer");
    }
    out[i] = floor_to_int64(x[i]);
  }
  return IntFunction(std::move(out));
}

IntFunction::value_type IntFunction::max() const {
  return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

PointFunction IntFunction::to_point_function() const {
  std::vector<Rational> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i];
  return PointFunction(std::move(out));
}

Event IntFunction::at_least(value_type level) const {
  Mask mask = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] >= level) mask |= Mask{1} << i;
  }
  return {mask};
}

IntFunction operator+(const IntFunction& x, const IntFunction& y) {
  require_same_size(x.size(), y.size());
  std::vector<IntFunction::value_type> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return IntFunction(std::move(out));
}

IntFunction half_floor(const IntFunction& x) {
  std::vector<IntFunction::value_type> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] / 2;
  return IntFunction(std::move(out));
}

IntFunction half_ceil(const IntFunction& x) {
  std::vector<IntFunction::value_type> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] + 1) / 2;
  return IntFunction(std::move(out));
}

}  // namespace capkit

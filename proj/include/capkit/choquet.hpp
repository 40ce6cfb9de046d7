#pragma once

#include <cstdint>
#include <utility>

#include "capkit/capacity.hpp"
#include "capkit/functions.hpp"
#include "capkit/rational.hpp"

namespace capkit {

/// max |X(omega)|.
Rational sup_norm(const PointFunction& x);

struct ShiftedFunction {
  PointFunction shifted;  // X + ||X||, entrywise >= 0
  Rational shift;         // ||X||
};

ShiftedFunction shift_nonnegative(const PointFunction& x);

/// Definitional evaluator:
///
///   int X dc = int_{-inf}^0 [c(X > x) - 1] dx + int_0^inf c(X > x) dx.
///
/// The integrand is a step function whose breakpoints are the distinct values
/// of X together with 0, so the integral is an exact finite sum of
/// width * c({X > left endpoint}) terms.
Rational choquet_layer_cake(const Capacity& c, const PointFunction& x);

/// Sorted-levels (Lovasz extension) evaluator: with omega sorted by decreasing
/// X (ties by index) and S_i the top-i set,
/// sum_i X_(i) * (c(S_i) - c(S_{i-1})).
Rational choquet_sorted(const Capacity& c, const PointFunction& x);

/// sum_{k >= 1} c({K >= k}) for a nonnegative integer-valued K.
Rational choquet_integer(const Capacity& c, const IntFunction& k);

/// Entrywise floor(scale * X); X must be >= 0 (NegativeInput otherwise).
IntFunction scaled_floor(const PointFunction& x, std::int64_t scale);

struct DyadicApproximation {
  Rational approx;     // (1/n) * int floor(nX) dc
  Rational error_low;  // int X dc - approx, in [0, 1/n]
};

/// Integer-grid approximation of int X dc from below. Requires X >= 0 and
/// n >= 1 (NegativeInput otherwise).
DyadicApproximation dyadic_approximation(const Capacity& c, const PointFunction& x, std::int64_t n);

}  // namespace capkit

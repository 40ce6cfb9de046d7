#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "capkit/error.hpp"
#include "capkit/event.hpp"
#include "capkit/functions.hpp"
#include "capkit/rational.hpp"

namespace capkit {

inline constexpr int kMaxGroundSetSize = 20;

/// Monotone, normalized set function on the power set of {0, ..., n-1}.
///
/// Values are indexed by subset bitmask. Instances only come out of
/// build_capacity (or the generators, which go through it), so every live
/// Capacity satisfies c(empty) = 0, c(full) = 1 and c(A) <= c(A + {i}).
class Capacity {
 public:
  int size() const { return n_; }
  Event full() const { return {static_cast<Mask>((std::size_t{1} << n_) - 1)}; }
  std::size_t num_events() const { return values_.size(); }

  const Rational& operator()(Event event) const { return values_.at(event.mask); }
  std::span<const Rational> values() const { return values_; }

  friend bool operator==(const Capacity&, const Capacity&) = default;

 private:
  friend Capacity build_capacity(int n, std::vector<Rational> values);
  Capacity(int n, std::vector<Rational> values) : n_(n), values_(std::move(values)) {}

  int n_ = 0;
  std::vector<Rational> values_;
};

/// Raised by build_capacity for a cover pair lower = upper - {i} with
/// c(lower) > c(upper).
class MonotonicityError : public Error {
 public:
  MonotonicityError(Event lower, Event upper, const Rational& lower_value, const Rational& upper_value);

  Event lower() const { return lower_; }
  Event upper() const { return upper_; }

 private:
  Event lower_;
  Event upper_;
};

/// Validates and wraps raw values. Errors: WrongLength, NotNormalized,
/// NotMonotone (message names the failing cover pair).
Capacity build_capacity(int n, std::vector<Rational> values);

enum class ViolationKind { Submodularity, Subadditivity, Convexity };

const char* to_string(ViolationKind kind);

struct EventPair {
  Event a;
  Event b;
};

struct FunctionPair {
  PointFunction x;
  PointFunction y;
  std::optional<Rational> lambda;  // set for convexity reports only
};

/// A strict failure of one of the inequalities, lhs > rhs exactly.
struct ViolationReport {
  ViolationKind kind;
  std::variant<EventPair, FunctionPair> witnesses;
  Rational lhs;
  Rational rhs;

  Rational gap() const { return lhs - rhs; }
};

/// Scans every pair A < B (mask order) and reports the first with
/// c(A|B) + c(A&B) > c(A) + c(B).
std::optional<ViolationReport> check_submodular_exhaustive(const Capacity& c);

/// Pairwise-exchange test: for every A and distinct i, j outside A,
/// c(A+i) + c(A+j) >= c(A+i+j) + c(A). Same verdict as the exhaustive scan in
/// O(2^n n^2); the witness is the pair (A+i, A+j).
std::optional<ViolationReport> check_submodular_local(const Capacity& c);

inline bool is_submodular(const Capacity& c) { return !check_submodular_local(c).has_value(); }

/// Random monotone capacity from i.i.d. k/1000 draws, swept in popcount order
/// and rescaled so c(full) = 1. Deterministic in (n, seed).
Capacity random_monotone_capacity(int n, std::uint64_t seed);

/// Concave piecewise-linear distortion of a random probability vector,
/// verified submodular before it is returned. Deterministic in (n, seed).
Capacity random_submodular_capacity(int n, std::uint64_t seed);

/// c(A) = sum of weights[i] over i in A; weights must be a probability vector.
Capacity additive_capacity(std::span<const Rational> weights);

}  // namespace capkit

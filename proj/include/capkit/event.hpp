#pragma once

#include <bit>
#include <cstdint>
#include <string>

namespace capkit {

using Mask = std::uint32_t;

/// Subset of the ground set {0, ..., n-1}, bit i set iff element i belongs to it.
struct Event {
  Mask mask = 0;

  constexpr bool contains(int element) const { return (mask >> element) & 1U; }
  constexpr int cardinality() const { return std::popcount(mask); }

  friend constexpr Event operator|(Event a, Event b) { return {a.mask | b.mask}; }
  friend constexpr Event operator&(Event a, Event b) { return {a.mask & b.mask}; }
  friend constexpr bool operator==(Event a, Event b) = default;
  friend constexpr auto operator<=>(Event a, Event b) = default;
};

constexpr Event singleton(int element) { return {Mask{1} << element}; }

/// Renders as `{0,2}`; the empty set is `{}`.
std::string to_string(Event event);

}  // namespace capkit

#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "capkit/capacity.hpp"
#include "capkit/functions.hpp"
#include "capkit/rational.hpp"

namespace capkit {

// Integer-lattice machinery behind the subadditivity argument for
// submodular capacities. For k >= 0,
//
//   A~_k = U_{i=0}^{k+1}  {(x, y) : x >= 2i,     y >= 2(k - i) + 1}
//   B~_k = U_{i=-1}^{k}   {(x, y) : x >= 2i + 1, y >= 2(k - i)}
//
// satisfy A~_k u B~_k = {x + y >= 2k + 1} and A~_k n B~_k = {x + y >= 2k + 2}.
// Pulling the sets back through (X(omega), Y(omega)) gives events A_k, B_k
// whose union and intersection are the level sets of X + Y, and one
// application of submodularity per k yields the halving bound
//
//   int (X+Y) dc <= int (floor(X/2) + floor((Y+1)/2)) dc
//                 + int (floor((X+1)/2) + floor(Y/2)) dc.

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

bool in_a_tilde(std::int64_t k, LatticePoint p);
bool in_b_tilde(std::int64_t k, LatticePoint p);

struct LemmaSets {
  std::set<LatticePoint> a_tilde;
  std::set<LatticePoint> b_tilde;
};

/// A~_k and B~_k restricted to [0, bound]^2. Requires bound >= 2k + 2
/// (WindowTooSmall otherwise).
LemmaSets lemma_sets(std::int64_t k, std::int64_t bound);

/// Checks both set identities on [0, bound]^2. All four sets are upward
/// closed and their minimal points satisfy x + y <= 2k + 2 with x, y <= 2k + 2,
/// so any window with bound >= 2k + 2 decides the identities on all of N^2.
bool check_lemma_identities(std::int64_t k, std::int64_t bound);

struct EventPairAB {
  Event a;
  Event b;
};

/// A_k and B_k as masks, built from the level sets {X >= s}, {Y >= t}.
EventPairAB events_ak_bk(const IntFunction& x, const IntFunction& y, std::int64_t k);

/// A_k u B_k == {X+Y >= 2k+1} and A_k n B_k == {X+Y >= 2k+2}.
bool check_event_decomposition(const IntFunction& x, const IntFunction& y, std::int64_t k);

struct HalvingBound {
  Rational lhs;        // int (X+Y) dc
  Rational event_sum;  // sum_k c(A_k) + c(B_k)
  Rational rhs;        // int (floor(X/2)+floor((Y+1)/2)) dc + int (floor((X+1)/2)+floor(Y/2)) dc
};

/// Requires a submodular capacity (NotSubmodular otherwise). lhs <= event_sum
/// is submodularity applied to each (A_k, B_k); event_sum == rhs is an exact
/// identity.
HalvingBound halving_bound(const Capacity& c, const IntFunction& x, const IntFunction& y);

struct HalvingIdentity {
  Rational lower;  // int floor(X/2) dc
  Rational upper;  // int floor((X+1)/2) dc
  Rational total;  // int X dc
};

/// Holds for every capacity: lower + upper == total.
HalvingIdentity halving_identity(const Capacity& c, const IntFunction& x);

enum class StepKind { Base, HalvingBound, Hypothesis, IdentityX, IdentityY, Conclusion };

struct InequalityStep {
  StepKind kind;
  int level = 0;  // recursion depth, 0 at the root
  std::string description;
  Rational lhs;
  Rational rhs;

  /// Identity steps must hold with equality, all others as lhs <= rhs.
  bool valid() const;
};

struct InductionCertificate {
  int depth = 0;  // smallest p with max(X, Y) <= 2^p
  std::vector<InequalityStep> steps;
  Rational final_lhs;  // int (X+Y) dc
  Rational final_rhs;  // int X dc + int Y dc
};

/// Subadditivity of int . dc on (X, Y) by induction on p, halving at each
/// level until the values lie in {0, 1}. Steps are emitted per level as
/// HalvingBound, <first sub-certificate>, <second sub-certificate>,
/// Hypothesis, IdentityX, IdentityY, Conclusion; leaves are single Base steps.
/// Errors: NotSubmodular, DimensionMismatch.
InductionCertificate induction_certificate(const Capacity& c, const IntFunction& x,
                                           const IntFunction& y);

/// Re-checks a certificate: every step valid and consecutive steps chained
/// (each level's bound, hypothesis and identities compose into its conclusion,
/// and the root conclusion equals the final inequality).
bool verify_certificate(const InductionCertificate& certificate);

/// `<description>: <lhs> <= <rhs>` per step, indented by level, followed by
/// a `final: <lhs> <= <rhs>` line.
std::string render(const InductionCertificate& certificate);

}  // namespace capkit

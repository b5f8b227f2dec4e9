#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "mcbc/set_system.hpp"

namespace mcbc {

// Optional plug-in supplying better values of A(m, 4, w) (max size of a
// distance-4 constant weight code). When absent, the constructive
// lower bound graham_sloane_size(m, w) is used, so range-conditioned rules
// fire on a verified sub-range.
using CwcSizeHook = std::function<std::optional<long long>(int m, int w)>;

struct LabeledValue {
  std::string rule;
  long long value = 0;

  bool operator==(const LabeledValue&) const = default;
};

struct BoundsReport {
  int n = 0, k = 0, m = 0, r = 0;
  std::vector<LabeledValue> lower_bounds;        // "rn", "general-c" entries
  std::optional<LabeledValue> known_exact;       // closed-form value + rule
  std::optional<LabeledValue> construction_upper;
  std::optional<long long> search_exact;

  long long best_lower() const;
};

// Storage lower bounds: the replication bound r*n always, and for
// r <= k-1 the counting bound
//   max over c in [r..k-1] of
//     n*c - floor( (k-c)/(m-k+1) * ( floor((k-1)/r)*C(m,k-1)/C(m-c,k-1-c) - n ) )
// evaluated in exact rational arithmetic, floor toward minus infinity.
// Outside the nontrivial regime m < n*r the exact value r*n is reported
// instead. Requires r <= k <= m.
BoundsReport lower_bounds(int n, int k, int m, int r);

// Necessary profile inequality for any valid code with r <= k-1:
//   sum_{i=r}^{k-1} C(m-i, k-1-i) * A_i  <=  floor((k-1)/r) * C(m, k-1).
bool profile_inequality_check(const BlockProfile& profile, int k, int m, int r);

// Piecewise closed forms for the optimal storage N(n,k,m,1;r) where one is
// known. Returns the value with its rule name; absent when no rule's
// conditions hold. When several rules overlap their agreement is asserted.
std::optional<LabeledValue> known_exact_N(int n, int k, int m, int r,
                                          const CwcSizeHook& cwc_hook = {});

// Cheapest storage among the explicit constructions applicable to
// (n, k, m, r), with the construction's name. Absent when none applies.
std::optional<LabeledValue> construction_upper(int n, int k, int m, int r);

// Key (n, k, m, r); r = 1 entries are plain CBC values.
using ValueTable = std::map<std::tuple<int, int, int, int>, long long>;

struct AuditOutcome {
  std::vector<std::string> violations;
  std::vector<std::string> skipped;
};

// Audits every instantiable consistency inequality for (n,k,m,r) against
// the supplied table of known/searched optimal values:
//   N(rn,k,m) <= r*N(n,k,m;r) <= r*N(rn,k,m),
//   N(n,k,m;r) <= r*N(n, ceil(k/r), floor(m/r)),
//   N(n,k,m;r) >= N(n,k,m;i) for i < r.
// Expected to return no violations; inequalities whose operands are not in
// the table are reported as skipped.
AuditOutcome recursive_bound_audit(int n, int k, int m, int r,
                                   const ValueTable& values);

struct RegularLoad {
  long long value = 0;
  bool exact = false;  // false: lower bound ceil(k*n/m) only
};

// Minimum per-server load of a regular code with r = k. Exactly k*n/m when
// n is a multiple of m/gcd(m,k) (witnessed by construct_regular); otherwise
// only the bound ceil(k*n/m) is reported.
RegularLoad mu_regular(int n, int k, int m);

}  // namespace mcbc

#pragma once

#include <optional>

#include "mcbc/set_system.hpp"

namespace mcbc {

struct SearchCaps {
  int max_n = 5;
  int max_m = 5;
  int max_k = 5;
};

struct SearchResult {
  long long optimal_storage = 0;
  McbcCode witness;
};

// Exhaustive minimum storage for t = 1: branch and bound over item views
// with the block multiset explored as a nondecreasing lexicographic block
// sequence (blocks commute), block sizes in [r, min(k, m)]. Prunes on
// partial storage + r * remaining >= best and on incremental multiset Hall
// violations. The witness is re-checked with verify_exhaustive before
// returning. Returns nullopt when no valid code exists (min(k, n*r) > m).
// Throws CapExceeded when (n, m, k) exceed the caps.
std::optional<SearchResult> exhaustive_optimal_N(int n, int k, int m, int r,
                                                 const SearchCaps& caps = {});

}  // namespace mcbc

#pragma once

#include <optional>
#include <vector>

#include "mcbc/request.hpp"
#include "mcbc/set_system.hpp"

namespace mcbc {

// Outcome of a verifier. Exactly one witness form is populated when
// valid == false: Hall-style verifiers name a violating set of block
// indices, the exhaustive verifier names an unservable request.
struct VerificationResult {
  bool valid = true;
  std::optional<std::vector<int>> witness_blocks;
  std::optional<MultisetRequest> witness_request;

  static VerificationResult ok() { return {}; }
  static VerificationResult bad_blocks(std::vector<int> idx);
  static VerificationResult bad_request(MultisetRequest req);
};

// Multiset Hall's condition on an item view: for every h in
// [1..min(ceil(k/r), n)] and every h distinct block indices, the union of
// those blocks has size >= min(h*r, k). Necessary and sufficient for the
// code to serve every multiset request of size <= k with per-item
// multiplicity <= r reading at most one item per server.
// On failure the witness is the lexicographically least violating index
// set at the least violating h.
VerificationResult verify_multiset_hall(const SetSystem& item_view, int k, int r);

// (k,t)-Hall condition: for every h in [1..min(k, n)] and every h distinct
// blocks, |union| >= h/t, i.e. |union| >= ceil(h/t). With t=1 this is the
// classical Hall condition characterizing (n,N,k,m)-CBCs.
VerificationResult verify_kt_hall_cbc(const SetSystem& item_view, int k, int t);

// Entry h (1-based) = minimum union size over all h-subsets of distinct
// block indices, for h in [1..h_max] (h_max clamped to the block count).
// Throws CapExceeded when the enumeration work would exceed `cap`.
std::vector<int> union_size_table(const SetSystem& item_view, int h_max,
                                  unsigned long long cap = 100'000'000ULL);

}  // namespace mcbc

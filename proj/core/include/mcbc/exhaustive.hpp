#pragma once

#include "mcbc/set_system.hpp"
#include "mcbc/verify.hpp"

namespace mcbc {

inline constexpr unsigned long long kDefaultRequestCap = 10'000'000ULL;

// Number of multisets of size exactly `size` over n items with per-item
// multiplicity at most r. Saturates at a large sentinel.
unsigned long long count_multiset_requests(int n, int size, int r);

// Decides servability operationally: serves every maximal request (size
// min(k, n*r), multiplicities <= r) through serve_request with per-server
// budget t. Sub-maximal requests are implied: any sub-multiset of a
// servable request is servable. Requests are enumerated as nondecreasing
// item sequences in lexicographic order; the witness is the first
// unservable request in that order. Throws CapExceeded (naming the request
// count) when the enumeration exceeds `cap`.
VerificationResult verify_exhaustive(const McbcCode& code, int k, int r, int t,
                                     unsigned long long cap = kDefaultRequestCap);

VerificationResult verify_exhaustive(const McbcCode& code, const CodeParams& params,
                                     unsigned long long cap = kDefaultRequestCap);

}  // namespace mcbc

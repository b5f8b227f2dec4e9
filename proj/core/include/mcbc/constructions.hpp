#pragma once

#include "mcbc/cwc.hpp"
#include "mcbc/designs.hpp"
#include "mcbc/set_system.hpp"

namespace mcbc {

// All constructions build the item view (dual) explicitly and return the
// full code. Subset enumeration is lexicographic throughout, so identical
// inputs give identical codes. Outputs satisfy the multiset Hall condition
// for their declared (k, r); tests re-verify this rather than the
// constructors themselves.

// Replication construction for n >= floor((k-1)/r) * C(m, k-1), r < k <= m:
// floor((k-1)/r) adjacent copies of every (k-1)-subset of [m] in
// lexicographic order, then copies of {1..k} up to n blocks.
// Storage: k*n - floor((k-1)/r) * C(m, k-1).
McbcCode construct_replication(int n, int k, int m, int r);

// First n distinct (k-1)-subsets of [m] in lexicographic order; requires
// n < C(m, k-1). Valid for r up to k-1 with storage (k-1)*n, which meets
// the r*n lower bound at r = k-1.
McbcCode construct_small_n_distinct(int n, int k, int m);

// Item blocks = codeword supports of a constant weight code with weight in
// [r, k-1] and distance >= 2(k - weight). Storage weight*n.
McbcCode construct_from_cwc(const ConstantWeightCode& cwc, int k, int r);

// Distance-4 refinement for r <= k-2 < m. Starting from the replication
// multiset of T = floor((k-1)/r)*C(m,k-1) blocks, each adopted support S of
// graham_sloane_cwc(m, k-2) is added while one copy of each of its m-k+2
// supersets of size k-1 is removed; finally the lexicographically last
// surplus (k-1)-blocks are dropped to reach exactly n blocks.
// Storage: n(k-1) - alpha with alpha = floor((T-n)/(m-k+1)).
McbcCode construct_distance4(int n, int k, int m, int r);

// m = k construction. With k = alpha*r + beta (alpha >= 1, 0 <= beta < r):
// alpha disjoint blocks [(i-1)r+1 .. ir], then for beta > 0 the r blocks
// [k] minus {i, i+r, ..., i+(alpha-1)r}, then full blocks [k].
// Storage: k*n - floor((k-1)/r)*k.
McbcCode construct_diagonal(int n, int k, int r);

// Dual blocks = the Steiner blocks. Valid for floor(l/2)+1 <= r <= l and
// k <= (l-r+1)(2r-1) where l is the Steiner block size; requires more
// points than the block size. Storage l * |blocks|.
McbcCode steiner_to_mcbc(const SteinerSystem& s, int k, int r);

// Regular construction targeting r = k, k <= m: defined exactly when n is a
// multiple of m/gcd(m,k). The base case chops [0..n0*k-1] into runs of k
// and reduces mod m; general n takes c copies of the base block list.
// Every server stores exactly k*n/m items.
McbcCode construct_regular(int n, int k, int m);

}  // namespace mcbc

#pragma once

#include <vector>

namespace mcbc {

// A ground set [1..ground_size] together with an ordered list of blocks.
// Blocks are sets (sorted ascending, no duplicates inside a block) but the
// block list itself is a multiset: repeated blocks are meaningful and the
// block index carries identity (item index in the dual view, server index
// in the primal view). Empty blocks are allowed.
struct SetSystem {
  int ground_size = 0;
  std::vector<std::vector<int>> blocks;

  SetSystem() = default;
  SetSystem(int ground, std::vector<std::vector<int>> b);

  int block_count() const { return static_cast<int>(blocks.size()); }
  long long total_size() const;

  bool operator==(const SetSystem&) const = default;
};

// Transpose of the incidence matrix: the dual lives on ground
// [1..blocks(s)] and has one block per point of s, listing the blocks of s
// that contain the point. dual(dual(s)) == s.
SetSystem dual(const SetSystem& s);

// A code in both orientations. server_view has m blocks over items [1..n];
// item_view is its dual: n blocks over servers [1..m], block i listing the
// servers that store item i.
struct McbcCode {
  int n = 0;
  int m = 0;
  long long total_storage = 0;
  SetSystem server_view;  // ground [n], m blocks
  SetSystem item_view;    // ground [m], n blocks

  static McbcCode from_server_view(SetSystem servers);
  static McbcCode from_item_view(SetSystem items);

  bool operator==(const McbcCode&) const = default;
};

// Parameter tuple of an (n,N,k,m,t;r) code. Immutable, validated on
// construction: all positive and r <= k <= t*m.
class CodeParams {
 public:
  CodeParams(int n, int k, int m, int t, int r);

  int n() const { return n_; }
  int k() const { return k_; }
  int m() const { return m_; }
  int t() const { return t_; }
  int r() const { return r_; }

 private:
  int n_, k_, m_, t_, r_;
};

// Replaces each item by r aliased copies: server block C becomes
// {c + j*n : c in C, j in [0..r-1]}. The result is a code on r*n items with
// storage r*N whose classical Hall status for k matches the input's
// multiset Hall status for (k, r).
McbcCode expand_to_cbc(const McbcCode& code, int r);

// counts[i] = number of item-view blocks of size exactly i, i in [0..k].
// Blocks larger than k land in the overflow bucket; reducing them is a
// separate normalization the caller may apply.
struct BlockProfile {
  std::vector<long long> counts;  // size k+1
  long long oversize = 0;

  long long total() const;
};

BlockProfile block_profile(const SetSystem& item_view, int k);

}  // namespace mcbc

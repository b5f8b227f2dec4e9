#pragma once

#include <vector>

namespace mcbc {

// Binary constant weight code given by codeword supports: distinct
// w-subsets of [1..length] with pairwise Hamming distance >= min_distance,
// equivalently pairwise support intersection <= w - min_distance/2.
// Invariants are checked on construction.
struct ConstantWeightCode {
  int length = 0;
  int weight = 0;
  int min_distance = 0;  // even
  std::vector<std::vector<int>> supports;

  ConstantWeightCode(int length, int weight, int min_distance,
                     std::vector<std::vector<int>> supports);

  int size() const { return static_cast<int>(supports.size()); }
};

// Distance-4 constant weight code: all w-subsets of [1..m] whose element
// sum falls in the residue class mod m holding the most subsets (ties:
// smallest residue), in lexicographic subset order. Size >= C(m,w)/m by
// pigeonhole; distance >= 4 because two subsets differing in one element
// have different sums mod m.
ConstantWeightCode graham_sloane_cwc(int m, int w);

// Size of the code graham_sloane_cwc(m, w) would produce, computed by
// counting (no enumeration); usable as a lower bound on A(m, 4, w) at
// scales where enumeration is too large.
long long graham_sloane_size(int m, int w);

}  // namespace mcbc

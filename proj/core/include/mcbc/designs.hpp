#pragma once

#include <vector>

namespace mcbc {

// A Steiner system S(2, block_size, point_count): blocks of equal size over
// [1..point_count] covering every unordered pair of points exactly once.
// Invariants are checked on construction; any two blocks share at most one
// point as a consequence.
struct SteinerSystem {
  int block_size = 0;
  int point_count = 0;
  std::vector<std::vector<int>> blocks;

  SteinerSystem(int block_size, int point_count,
                std::vector<std::vector<int>> blocks);
};

// Affine plane of order q, i.e. S(2, q, q^2), for prime powers q in the
// supported field table. Point (x, y) over GF(q) gets index q*x + y + 1.
// Blocks: the q^2 lines {(x, a*x+b)} ordered by (a, b), then the q vertical
// lines {(c, y)} ordered by c.
SteinerSystem affine_plane(int q);

}  // namespace mcbc

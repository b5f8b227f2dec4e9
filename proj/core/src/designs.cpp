#include "mcbc/designs.hpp"

#include <algorithm>
#include <string>

#include "mcbc/errors.hpp"
#include "mcbc/gf.hpp"

namespace mcbc {

SteinerSystem::SteinerSystem(int block_size_, int point_count_,
                             std::vector<std::vector<int>> blocks_)
    : block_size(block_size_), point_count(point_count_), blocks(std::move(blocks_)) {
  if (block_size < 2 || point_count < block_size)
    throw ParamError("Steiner system needs 2 <= block_size <= point_count");
  const int m = point_count;
  std::vector<int> pair_count(static_cast<size_t>(m) * m, 0);
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
    if (static_cast<int>(b.size()) != block_size)
      throw ParamError("Steiner block has wrong size");
    if (b.front() < 1 || b.back() > m)
      throw ParamError("Steiner block point out of range");
    if (std::adjacent_find(b.begin(), b.end()) != b.end())
      throw ParamError("Steiner block repeats a point");
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = i + 1; j < b.size(); ++j)
        ++pair_count[static_cast<size_t>(b[i] - 1) * m + (b[j] - 1)];
  }
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      if (pair_count[static_cast<size_t>(x) * m + y] != 1)
        throw ParamError("point pair (" + std::to_string(x + 1) + "," +
                         std::to_string(y + 1) + ") covered " +
                         std::to_string(pair_count[static_cast<size_t>(x) * m + y]) +
                         " times");
}

SteinerSystem affine_plane(int q) {
  if (!FiniteFieldTable::supported(q))
    throw ParamError("unsupported affine plane order " + std::to_string(q));
  FiniteFieldTable f(q);
  auto idx = [q](int x, int y) { return q * x + y + 1; };

  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<size_t>(q) * q + q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      std::vector<int> line;
      line.reserve(q);
      for (int x = 0; x < q; ++x) line.push_back(idx(x, f.add(f.mul(a, x), b)));
      blocks.push_back(std::move(line));
    }
  for (int c = 0; c < q; ++c) {
    std::vector<int> line;
    line.reserve(q);
    for (int y = 0; y < q; ++y) line.push_back(idx(c, y));
    blocks.push_back(std::move(line));
  }
  return SteinerSystem(q, q * q, std::move(blocks));
}

}  // namespace mcbc

#include "mcbc/set_system.hpp"

#include <algorithm>
#include <numeric>

#include "mcbc/errors.hpp"

namespace mcbc {

namespace {

void canonicalize_block(std::vector<int>& block, int ground_size) {
  std::sort(block.begin(), block.end());
  if (std::adjacent_find(block.begin(), block.end()) != block.end())
    throw ParamError("block contains a repeated point");
  if (!block.empty() && (block.front() < 1 || block.back() > ground_size))
    throw ParamError("block point outside [1..ground_size]");
}

}  // namespace

SetSystem::SetSystem(int ground, std::vector<std::vector<int>> b)
    : ground_size(ground), blocks(std::move(b)) {
  if (ground_size < 1) throw ParamError("ground_size must be positive");
  for (auto& block : blocks) canonicalize_block(block, ground_size);
}

long long SetSystem::total_size() const {
  long long n = 0;
  for (const auto& b : blocks) n += static_cast<long long>(b.size());
  return n;
}

SetSystem dual(const SetSystem& s) {
  std::vector<std::vector<int>> out(s.ground_size);
  for (int j = 0; j < s.block_count(); ++j)
    for (int p : s.blocks[j]) out[p - 1].push_back(j + 1);
  // Block count of s is the dual's ground; a system with zero blocks has no
  // dual ground to live on.
  if (s.block_count() < 1) throw ParamError("dual of a system with no blocks");
  return SetSystem(s.block_count(), std::move(out));
}

McbcCode McbcCode::from_server_view(SetSystem servers) {
  McbcCode code;
  code.n = servers.ground_size;
  code.m = servers.block_count();
  code.total_storage = servers.total_size();
  code.item_view = dual(servers);
  code.server_view = std::move(servers);
  return code;
}

McbcCode McbcCode::from_item_view(SetSystem items) {
  McbcCode code;
  code.m = items.ground_size;
  code.n = items.block_count();
  code.total_storage = items.total_size();
  code.server_view = dual(items);
  code.item_view = std::move(items);
  return code;
}

CodeParams::CodeParams(int n, int k, int m, int t, int r)
    : n_(n), k_(k), m_(m), t_(t), r_(r) {
  if (n < 1 || k < 1 || m < 1 || t < 1 || r < 1)
    throw ParamError("code parameters must be positive");
  if (r > k) throw ParamError("r must not exceed k");
  if (static_cast<long long>(t) * m < k)
    throw ParamError("k must not exceed t*m");
}

McbcCode expand_to_cbc(const McbcCode& code, int r) {
  if (r < 1) throw ParamError("expansion factor r must be positive");
  const int n = code.n;
  std::vector<std::vector<int>> servers(code.m);
  for (int j = 0; j < code.m; ++j) {
    for (int copy = 0; copy < r; ++copy)
      for (int c : code.server_view.blocks[j]) servers[j].push_back(c + copy * n);
  }
  return McbcCode::from_server_view(SetSystem(r * n, std::move(servers)));
}

long long BlockProfile::total() const {
  return std::accumulate(counts.begin(), counts.end(), oversize);
}

BlockProfile block_profile(const SetSystem& item_view, int k) {
  BlockProfile p;
  p.counts.assign(static_cast<size_t>(std::max(k, 0)) + 1, 0);
  for (const auto& b : item_view.blocks) {
    auto sz = static_cast<long long>(b.size());
    if (sz > k)
      ++p.oversize;
    else
      ++p.counts[sz];
  }
  return p;
}

}  // namespace mcbc

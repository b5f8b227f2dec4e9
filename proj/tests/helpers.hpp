#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "mcbc/json_io.hpp"
#include "mcbc/set_system.hpp"

namespace testutil {

inline std::string fixture(const std::string& name) {
  return std::string(MCBC_FIXTURE_DIR) + "/" + name;
}

inline mcbc::McbcCode load_fixture(const std::string& name) {
  return mcbc::load_code_file(fixture(name));
}

// Straight-line transpose, kept deliberately separate from the library's
// dual() so the involution test has an independent reference.
inline mcbc::SetSystem naive_dual(const mcbc::SetSystem& s) {
  std::vector<std::vector<int>> blocks(s.ground_size);
  for (int point = 1; point <= s.ground_size; ++point)
    for (int j = 0; j < s.block_count(); ++j)
      for (int p : s.blocks[j])
        if (p == point) blocks[point - 1].push_back(j + 1);
  return mcbc::SetSystem(s.block_count(), blocks);
}

inline mcbc::SetSystem random_system(std::mt19937& rng, int max_ground,
                                     int max_blocks, int min_blocks = 1) {
  std::uniform_int_distribution<int> gdist(1, max_ground);
  const int ground = gdist(rng);
  std::uniform_int_distribution<int> bdist(min_blocks, max_blocks);
  const int nblocks = bdist(rng);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<std::vector<int>> blocks(nblocks);
  for (auto& b : blocks)
    for (int p = 1; p <= ground; ++p)
      if (coin(rng)) b.push_back(p);
  return mcbc::SetSystem(ground, blocks);
}

// Reference multiset Hall check by plain enumeration over index subsets,
// with unions computed through std::set.
inline bool naive_multiset_hall(const mcbc::SetSystem& item_view, int k, int r) {
  const int n = item_view.block_count();
  const int cap = std::min((k + r - 1) / r, n);
  std::vector<int> pick;
  auto rec = [&](auto&& self, int next) -> bool {
    const int h = static_cast<int>(pick.size());
    if (h >= 1) {
      std::set<int> uni;
      for (int i : pick)
        uni.insert(item_view.blocks[i].begin(), item_view.blocks[i].end());
      if (static_cast<int>(uni.size()) < std::min(h * r, k)) return false;
    }
    if (h == cap) return true;
    for (int i = next; i < n; ++i) {
      pick.push_back(i);
      if (!self(self, i + 1)) return false;
      pick.pop_back();
    }
    return true;
  };
  return rec(rec, 0);
}

inline bool naive_kt_hall(const mcbc::SetSystem& item_view, int k, int t) {
  const int n = item_view.block_count();
  const int cap = std::min(k, n);
  std::vector<int> pick;
  auto rec = [&](auto&& self, int next) -> bool {
    const int h = static_cast<int>(pick.size());
    if (h >= 1) {
      std::set<int> uni;
      for (int i : pick)
        uni.insert(item_view.blocks[i].begin(), item_view.blocks[i].end());
      if (static_cast<int>(uni.size()) * t < h) return false;
    }
    if (h == cap) return true;
    for (int i = next; i < n; ++i) {
      pick.push_back(i);
      if (!self(self, i + 1)) return false;
      pick.pop_back();
    }
    return true;
  };
  return rec(rec, 0);
}

}  // namespace testutil

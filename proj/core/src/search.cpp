#include "mcbc/search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "mcbc/errors.hpp"
#include "mcbc/exhaustive.hpp"
#include "mcbc/util.hpp"

namespace mcbc {

namespace {

struct Candidate {
  std::vector<int> block;
  uint64_t mask;
  int size;
};

class StorageSearch {
 public:
  StorageSearch(int n, int k, int m, int r)
      : n_(n), k_(k), m_(m), r_(r),
        hall_h_(std::min((k + r - 1) / r, n)) {
    // Candidate blocks in lexicographic order; the block sequence is
    // explored nondecreasing in this order so each block multiset is
    // visited exactly once.
    for (int size = r; size <= std::min(k, m); ++size)
      for (auto& sub : subsets_lex(m, size)) {
        uint64_t mask = 0;
        for (int p : sub) mask |= uint64_t{1} << (p - 1);
        candidates_.push_back({std::move(sub), mask, size});
      }
    std::sort(candidates_.begin(), candidates_.end(),
              [](const Candidate& a, const Candidate& b) { return a.block < b.block; });
    best_ = 1LL * n * std::min(k, m) + 1;
    chosen_.reserve(n);
  }

  std::optional<SearchResult> run() {
    descend(0, 0);
    if (best_blocks_.empty()) return std::nullopt;
    std::vector<std::vector<int>> blocks;
    for (int ci : best_blocks_) blocks.push_back(candidates_[ci].block);
    SearchResult res;
    res.optimal_storage = best_;
    res.witness = McbcCode::from_item_view(SetSystem(m_, std::move(blocks)));
    return res;
  }

 private:
  bool prefix_ok(int new_index) const {
    // Check every block subset that includes the newly placed block; older
    // subsets were checked when their own last block arrived.
    const int placed = static_cast<int>(chosen_.size());
    const uint64_t new_mask = candidates_[chosen_[placed - 1]].mask;
    const int prior = placed - 1;
    for (uint64_t sel = 0; sel < (uint64_t{1} << prior); ++sel) {
      int h = std::popcount(sel) + 1;
      if (h > hall_h_) continue;
      uint64_t uni = new_mask;
      for (int i = 0; i < prior; ++i)
        if (sel >> i & 1) uni |= candidates_[chosen_[i]].mask;
      const int need = static_cast<int>(std::min<long long>(1LL * h * r_, k_));
      if (std::popcount(uni) < need) return false;
    }
    (void)new_index;
    return true;
  }

  void descend(int min_index, long long storage) {
    if (storage + 1LL * r_ * (n_ - static_cast<int>(chosen_.size())) >= best_)
      return;
    if (static_cast<int>(chosen_.size()) == n_) {
      best_ = storage;
      best_blocks_ = chosen_;
      return;
    }
    for (int ci = min_index; ci < static_cast<int>(candidates_.size()); ++ci) {
      chosen_.push_back(ci);
      if (prefix_ok(ci)) descend(ci, storage + candidates_[ci].size);
      chosen_.pop_back();
    }
  }

  int n_, k_, m_, r_;
  int hall_h_;
  std::vector<Candidate> candidates_;
  std::vector<int> chosen_;
  long long best_;
  std::vector<int> best_blocks_;
};

}  // namespace

std::optional<SearchResult> exhaustive_optimal_N(int n, int k, int m, int r,
                                                 const SearchCaps& caps) {
  if (n < 1 || k < 1 || m < 1 || r < 1)
    throw ParamError("parameters must be positive");
  if (r > k) throw ParamError("r must not exceed k");
  if (n > caps.max_n || m > caps.max_m || k > caps.max_k)
    throw CapExceeded("search parameters exceed caps (n<=" +
                          std::to_string(caps.max_n) + ", m<=" +
                          std::to_string(caps.max_m) + ", k<=" +
                          std::to_string(caps.max_k) + ")",
                      0);
  if (m > 62) throw ParamError("search supports ground sets up to 62 servers");
  if (std::min<long long>(k, 1LL * n * r) > m) return std::nullopt;

  StorageSearch search(n, k, m, r);
  auto result = search.run();
  if (!result)
    throw std::logic_error("search found no code although one exists");
  auto check = verify_exhaustive(result->witness, k, r, 1);
  if (!check.valid)
    throw std::logic_error("search witness fails exhaustive verification");
  return result;
}

}  // namespace mcbc

#include "mcbc/verify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mcbc/errors.hpp"
#include "mcbc/util.hpp"

namespace mcbc {

VerificationResult VerificationResult::bad_blocks(std::vector<int> idx) {
  VerificationResult r;
  r.valid = false;
  r.witness_blocks = std::move(idx);
  return r;
}

VerificationResult VerificationResult::bad_request(MultisetRequest req) {
  VerificationResult r;
  r.valid = false;
  r.witness_request = std::move(req);
  return r;
}

namespace {

// Blocks collapsed to distinct supports with multiplicities; group order is
// lexicographic in the support. Union questions only depend on this view.
struct GroupedBlocks {
  int m = 0;
  std::vector<Mask> support;
  std::vector<int> size;
  std::vector<int> mult;
  std::vector<long long> mult_suffix;  // mult[i] + mult[i+1] + ...
};

GroupedBlocks group_blocks(const SetSystem& item_view) {
  GroupedBlocks g;
  g.m = item_view.ground_size;
  std::map<std::vector<int>, int> counts;
  for (const auto& b : item_view.blocks) ++counts[b];
  for (const auto& [block, c] : counts) {
    g.support.push_back(Mask::from_block(block, g.m));
    g.size.push_back(static_cast<int>(block.size()));
    g.mult.push_back(c);
  }
  g.mult_suffix.assign(g.mult.size() + 1, 0);
  for (int i = static_cast<int>(g.mult.size()) - 1; i >= 0; --i)
    g.mult_suffix[i] = g.mult_suffix[i + 1] + g.mult[i];
  return g;
}

// f(s) for s in [0..s_max]: the largest total block multiplicity contained
// in any s-subset of the ground set. Monotone in s, so f(s) also covers
// subsets of size < s.
std::vector<long long> containment_profile(const GroupedBlocks& g, int s_max) {
  std::vector<long long> f(s_max + 1, 0);
  const int m = g.m;
  for (int s = 0; s <= s_max; ++s) {
    if (s > m) break;
    std::vector<int> comb(s);
    for (int i = 0; i < s; ++i) comb[i] = i + 1;
    while (true) {
      Mask sm(m);
      for (int p : comb) sm.set(p);
      long long within = 0;
      for (size_t gi = 0; gi < g.support.size(); ++gi)
        if (g.size[gi] <= s && g.support[gi].is_subset_of(sm)) within += g.mult[gi];
      f[s] = std::max(f[s], within);
      if (s == 0) break;
      int i = s - 1;
      while (i >= 0 && comb[i] == m - (s - 1 - i)) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (s > 0) f[s] = std::max(f[s], f[s - 1]);
  }
  return f;
}

unsigned long long threshold_work(int m, int s_max) {
  unsigned long long total = 0;
  for (int s = 0; s <= std::min(s_max, m); ++s) {
    long long c = binomial(m, s);
    if (c > 100'000'000LL) return 200'000'000ULL;
    total += static_cast<unsigned long long>(c);
    if (total > 100'000'000ULL) return total;
  }
  return total;
}

// Existence search: is there a set of distinct supports with total
// multiplicity >= h whose union has fewer than `bound` points? Equivalent
// to the existence of h distinct block indices with union below the bound.
bool violation_exists(const GroupedBlocks& g, int start, const Mask& uni,
                      int uni_size, long long mult_acc, long long h, int bound) {
  if (mult_acc >= h) return true;
  for (size_t gi = start; gi < g.support.size(); ++gi) {
    if (mult_acc + g.mult_suffix[gi] < h) return false;
    Mask u2 = uni;
    u2.or_with(g.support[gi]);
    int sz = u2.popcount();
    if (sz >= bound) continue;
    if (violation_exists(g, static_cast<int>(gi) + 1, u2, sz,
                         mult_acc + g.mult[gi], h, bound))
      return true;
  }
  return false;
}

// Minimum union size over selections with total multiplicity >= h.
// Returns m+1 when no selection reaches h (cannot happen for h <= n).
int min_union_bb(const GroupedBlocks& g, int start, const Mask& uni, int uni_size,
                 long long mult_acc, long long h, int best,
                 unsigned long long& nodes, unsigned long long cap) {
  if (++nodes > cap)
    throw CapExceeded("union enumeration exceeds cap", nodes);
  if (mult_acc >= h) return uni_size;
  for (size_t gi = start; gi < g.support.size(); ++gi) {
    if (mult_acc + g.mult_suffix[gi] < h) break;
    Mask u2 = uni;
    u2.or_with(g.support[gi]);
    int sz = u2.popcount();
    if (sz >= best) continue;
    best = std::min(best, min_union_bb(g, static_cast<int>(gi) + 1, u2, sz,
                                       mult_acc + g.mult[gi], h, best, nodes, cap));
  }
  return best;
}

// Lexicographically least h-subset of original block indices whose union
// has size < bound. Only called when one exists.
std::vector<int> lex_least_violating(const SetSystem& iv, int h, int bound) {
  const int n = iv.block_count();
  const int m = iv.ground_size;
  std::vector<Mask> masks;
  masks.reserve(n);
  for (const auto& b : iv.blocks) masks.push_back(Mask::from_block(b, m));

  std::vector<int> chosen;
  auto rec = [&](auto&& self, int next, const Mask& uni) -> bool {
    if (static_cast<int>(chosen.size()) == h) return true;
    int need = h - static_cast<int>(chosen.size());
    for (int i = next; i + need - 1 <= n; ++i) {
      Mask u2 = uni;
      u2.or_with(masks[i - 1]);
      if (u2.popcount() >= bound) continue;
      chosen.push_back(i);
      if (self(self, i + 1, u2)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(rec, 1, Mask(m)))
    throw std::logic_error("violation detected but no witness found");
  return chosen;
}

// Shared driver: required[h-1] is the union size every h-subset of distinct
// blocks must reach, for h in [1..required.size()]. required.size() <= n.
VerificationResult run_hall(const SetSystem& item_view,
                            const std::vector<int>& required) {
  const int H = static_cast<int>(required.size());
  if (H == 0) return VerificationResult::ok();
  const int m = item_view.ground_size;
  GroupedBlocks g = group_blocks(item_view);

  int bad_h = 0;
  int s_max = 0;
  for (int h = 1; h <= H; ++h) s_max = std::max(s_max, std::min(required[h - 1] - 1, m));

  if (threshold_work(m, s_max) * std::max<size_t>(g.support.size(), 1) <= 50'000'000ULL) {
    std::vector<long long> f = containment_profile(g, s_max);
    for (int h = 1; h <= H; ++h) {
      int b = required[h - 1];
      if (b > m || f[std::min(b - 1, m)] >= h) {
        bad_h = h;
        break;
      }
    }
  } else {
    for (int h = 1; h <= H; ++h) {
      int b = required[h - 1];
      if (b > m || violation_exists(g, 0, Mask(m), 0, 0, h, b)) {
        bad_h = h;
        break;
      }
    }
  }

  if (bad_h == 0) return VerificationResult::ok();
  return VerificationResult::bad_blocks(
      lex_least_violating(item_view, bad_h, required[bad_h - 1]));
}

}  // namespace

VerificationResult verify_multiset_hall(const SetSystem& item_view, int k, int r) {
  if (k < 1) throw ParamError("k must be positive");
  if (r < 1 || r > k) throw ParamError("r must satisfy 1 <= r <= k");
  const int n = item_view.block_count();
  const int H = std::min((k + r - 1) / r, n);
  std::vector<int> required(H);
  for (int h = 1; h <= H; ++h)
    required[h - 1] = static_cast<int>(std::min<long long>(1LL * h * r, k));
  return run_hall(item_view, required);
}

VerificationResult verify_kt_hall_cbc(const SetSystem& item_view, int k, int t) {
  if (k < 1) throw ParamError("k must be positive");
  if (t < 1) throw ParamError("t must be positive");
  const int n = item_view.block_count();
  const int H = std::min(k, n);
  std::vector<int> required(H);
  for (int h = 1; h <= H; ++h) required[h - 1] = (h + t - 1) / t;
  return run_hall(item_view, required);
}

std::vector<int> union_size_table(const SetSystem& item_view, int h_max,
                                  unsigned long long cap) {
  if (h_max < 1) throw ParamError("h_max must be positive");
  const int n = item_view.block_count();
  const int m = item_view.ground_size;
  const int H = std::min(h_max, n);
  if (H == 0) return {};
  GroupedBlocks g = group_blocks(item_view);

  std::vector<int> minima(H, 0);
  bool use_threshold = false;
  if (m < 40) {
    unsigned long long groups = std::max<size_t>(g.support.size(), 1);
    use_threshold = (1ULL << m) <= cap / groups;
  }
  if (use_threshold) {
    std::vector<long long> f = containment_profile(g, m);
    for (int h = 1; h <= H; ++h) {
      int s = 0;
      while (f[s] < h) ++s;
      minima[h - 1] = s;
    }
  } else {
    unsigned long long nodes = 0;
    for (int h = 1; h <= H; ++h)
      minima[h - 1] = min_union_bb(g, 0, Mask(m), 0, 0, h, m + 1, nodes, cap);
  }
  return minima;
}

}  // namespace mcbc

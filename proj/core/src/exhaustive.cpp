#include "mcbc/exhaustive.hpp"

#include <algorithm>
#include <string>

#include "mcbc/errors.hpp"
#include "slot_matcher.hpp"

namespace mcbc {

unsigned long long count_multiset_requests(int n, int size, int r) {
  constexpr unsigned long long kSat = 1ULL << 62;
  std::vector<unsigned long long> ways(size + 1, 0);
  ways[0] = 1;
  for (int item = 0; item < n; ++item) {
    std::vector<unsigned long long> next(size + 1, 0);
    for (int s = 0; s <= size; ++s) {
      if (ways[s] == 0) continue;
      for (int take = 0; take <= r && s + take <= size; ++take) {
        next[s + take] += ways[s];
        if (next[s + take] > kSat) next[s + take] = kSat;
      }
    }
    ways = std::move(next);
  }
  return ways[size];
}

namespace {

// Walks all maximal requests as nondecreasing item sequences in
// lexicographic order, keeping a matching for the current prefix. A failed
// augmentation proves the prefix (and thus all its completions) unservable,
// so the lexicographically least completion of the failed prefix is the
// first unservable maximal request overall.
class RequestSweep {
 public:
  RequestSweep(const McbcCode& code, int r, int t, int target)
      : code_(code), r_(r), target_(target), matcher_(code, t),
        count_(code.n + 1, 0),
        spare_(target + 1, std::vector<long long>(code.n + 2, 0)) {}

  std::optional<MultisetRequest> find_first_unservable() {
    if (walk(0, 1)) return std::nullopt;
    return failure_;
  }

 private:
  // Returns false once a failure is recorded; true when the subtree is
  // fully servable.
  bool walk(int pos, int min_item) {
    if (pos == target_) return true;
    // Spare multiplicity over items >= i, to skip prefixes that cannot
    // reach the target size with a nondecreasing tail.
    std::vector<long long>& spare = spare_[pos];
    spare[code_.n + 1] = 0;
    for (int i = code_.n; i >= min_item; --i)
      spare[i] = spare[i + 1] + (r_ - count_[i]);
    for (int i = min_item; i <= code_.n; ++i) {
      if (count_[i] == r_) continue;
      if (spare[i] < target_ - pos) break;
      size_t mark = matcher_.mark();
      if (!matcher_.add_slot(i)) {
        record_failure(i);
        return false;
      }
      ++count_[i];
      bool ok = walk(pos + 1, i);
      --count_[i];
      matcher_.rollback(mark);
      if (!ok) return false;
    }
    return true;
  }

  void record_failure(int item) {
    std::vector<int> items;
    for (int i = 1; i <= code_.n; ++i) items.insert(items.end(), count_[i], i);
    items.push_back(item);
    // Lexicographically least completion: smallest feasible items >= `item`.
    std::vector<int> cnt(count_);
    ++cnt[item];
    int fill = item;
    while (static_cast<int>(items.size()) < target_) {
      while (cnt[fill] == r_) ++fill;
      ++cnt[fill];
      items.push_back(fill);
    }
    failure_ = MultisetRequest::from_items(items);
  }

  const McbcCode& code_;
  int r_, target_;
  detail::SlotMatcher matcher_;
  std::vector<int> count_;
  std::vector<std::vector<long long>> spare_;
  std::optional<MultisetRequest> failure_;
};

}  // namespace

VerificationResult verify_exhaustive(const McbcCode& code, int k, int r, int t,
                                     unsigned long long cap) {
  if (k < 1) throw ParamError("k must be positive");
  if (r < 1 || r > k) throw ParamError("r must satisfy 1 <= r <= k");
  if (t < 1) throw ParamError("t must be positive");
  // Maximal request size; every smaller request is a sub-multiset of a
  // maximal one, and servability is inherited downward.
  const int target = static_cast<int>(
      std::min<long long>(k, static_cast<long long>(code.n) * r));
  unsigned long long total = count_multiset_requests(code.n, target, r);
  if (total > cap)
    throw CapExceeded("request enumeration needs " + std::to_string(total) +
                          " requests, cap is " + std::to_string(cap),
                      total);
  RequestSweep sweep(code, r, t, target);
  if (auto bad = sweep.find_first_unservable())
    return VerificationResult::bad_request(std::move(*bad));
  return VerificationResult::ok();
}

VerificationResult verify_exhaustive(const McbcCode& code, const CodeParams& params,
                                     unsigned long long cap) {
  if (params.n() != code.n || params.m() != code.m)
    throw ParamError("code dimensions do not match parameters");
  return verify_exhaustive(code, params.k(), params.r(), params.t(), cap);
}

}  // namespace mcbc

#pragma once

#include <cstdint>
#include <vector>

namespace mcbc {

// Saturating binomial coefficient. Values above kBinomialCap are clamped;
// callers that only compare against desk-scale thresholds never hit the cap.
inline constexpr long long kBinomialCap = 4'000'000'000'000'000'000LL;

long long binomial(long long n, long long k);

// Largest s with s*s <= x (x >= 0).
long long isqrt_floor(long long x);

// Smallest c >= 0 with c*c >= x.
long long isqrt_ceil(long long x);

// floor(a/b) rounding toward minus infinity, b > 0.
long long floor_div(long long a, long long b);

bool is_prime(long long x);
bool is_prime_power(long long x);

// Generates all size-k subsets of [1..m] in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int m, int k);

// Bit mask over a ground set of arbitrary size, one uint64 word per 64 points.
class Mask {
 public:
  Mask() = default;
  explicit Mask(int ground_size) : words_((ground_size + 63) / 64, 0) {}

  void set(int point_1based) {
    int b = point_1based - 1;
    words_[b >> 6] |= (uint64_t{1} << (b & 63));
  }
  bool test(int point_1based) const {
    int b = point_1based - 1;
    return (words_[b >> 6] >> (b & 63)) & 1;
  }
  void or_with(const Mask& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  }
  bool is_subset_of(const Mask& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  int popcount() const;
  bool operator==(const Mask& o) const { return words_ == o.words_; }

  static Mask from_block(const std::vector<int>& block, int ground_size);

 private:
  std::vector<uint64_t> words_;
};

}  // namespace mcbc

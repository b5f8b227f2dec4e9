#include "mcbc/util.hpp"

#include <bit>
#include <cmath>

#include "mcbc/errors.hpp"

namespace mcbc {

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (long long i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (acc > static_cast<unsigned __int128>(kBinomialCap)) return kBinomialCap;
  }
  return static_cast<long long>(acc);
}

long long isqrt_floor(long long x) {
  if (x < 0) throw ParamError("isqrt of negative value");
  long long s = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while (s > 0 && s * s > x) --s;
  while ((s + 1) * (s + 1) <= x) ++s;
  return s;
}

long long isqrt_ceil(long long x) {
  if (x <= 0) return 0;
  long long s = isqrt_floor(x);
  return s * s == x ? s : s + 1;
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool is_prime(long long x) {
  if (x < 2) return false;
  for (long long d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

bool is_prime_power(long long x) {
  if (x < 2) return false;
  for (long long p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      while (x % p == 0) x /= p;
      return x == 1;
    }
  }
  return true;  // x itself prime
}

std::vector<std::vector<int>> subsets_lex(int m, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > m) return out;
  if (k == 0) return {{}};
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == m - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

int Mask::popcount() const {
  int c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

Mask Mask::from_block(const std::vector<int>& block, int ground_size) {
  Mask mk(ground_size);
  for (int p : block) mk.set(p);
  return mk;
}

}  // namespace mcbc

#include "mcbc/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "mcbc/errors.hpp"
#include "mcbc/util.hpp"

namespace mcbc {

McbcCode construct_replication(int n, int k, int m, int r) {
  if (n < 1 || k < 1 || m < 1 || r < 1) throw ParamError("parameters must be positive");
  if (r >= k) throw ParamError("replication construction needs r < k");
  if (k > m) throw ParamError("replication construction needs k <= m");
  const long long copies = (k - 1) / r;
  const long long threshold = copies * binomial(m, k - 1);
  if (n < threshold)
    throw ParamError("replication construction needs n >= " +
                     std::to_string(threshold));

  std::vector<std::vector<int>> blocks;
  blocks.reserve(n);
  for (const auto& sub : subsets_lex(m, k - 1))
    for (long long c = 0; c < copies; ++c) blocks.push_back(sub);
  std::vector<int> full_block(k);
  std::iota(full_block.begin(), full_block.end(), 1);
  while (static_cast<int>(blocks.size()) < n) blocks.push_back(full_block);
  return McbcCode::from_item_view(SetSystem(m, std::move(blocks)));
}

McbcCode construct_small_n_distinct(int n, int k, int m) {
  if (n < 1 || k < 2 || m < 1) throw ParamError("need n >= 1 and k >= 2");
  if (k - 1 > m) throw ParamError("need k-1 <= m");
  if (n >= binomial(m, k - 1))
    throw ParamError("small-n construction needs n < C(m,k-1) = " +
                     std::to_string(binomial(m, k - 1)));
  std::vector<std::vector<int>> blocks;
  blocks.reserve(n);
  std::vector<int> comb(k - 1);
  std::iota(comb.begin(), comb.end(), 1);
  while (static_cast<int>(blocks.size()) < n) {
    blocks.push_back(comb);
    int i = k - 2;
    while (i >= 0 && comb[i] == m - (k - 2 - i)) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k - 1; ++j) comb[j] = comb[j - 1] + 1;
  }
  return McbcCode::from_item_view(SetSystem(m, std::move(blocks)));
}

McbcCode construct_from_cwc(const ConstantWeightCode& cwc, int k, int r) {
  if (k < 1 || r < 1) throw ParamError("parameters must be positive");
  if (cwc.weight < r || cwc.weight > k - 1)
    throw ParamError("codeword weight must lie in [r, k-1]");
  if (cwc.min_distance < 2 * (k - cwc.weight))
    throw ParamError("codeword distance below 2(k-w)");
  if (cwc.size() < 1) throw ParamError("constant weight code is empty");
  return McbcCode::from_item_view(SetSystem(cwc.length, cwc.supports));
}

McbcCode construct_distance4(int n, int k, int m, int r) {
  if (n < 1 || k < 1 || m < 1 || r < 1) throw ParamError("parameters must be positive");
  if (r > k - 2) throw ParamError("distance-4 construction needs r <= k-2");
  if (k > m) throw ParamError("distance-4 construction needs k <= m");
  const long long copies = (k - 1) / r;
  const long long total = copies * binomial(m, k - 1);
  if (n > total)
    throw ParamError("distance-4 construction needs n <= " + std::to_string(total));
  const int step = m - k + 1;
  const long long alpha = (total - n) / step;
  ConstantWeightCode gs = graham_sloane_cwc(m, k - 2);
  if (alpha > gs.size())
    throw ParamError("n below the constructive range: would need " +
                     std::to_string(alpha) + " distance-4 codewords, only " +
                     std::to_string(gs.size()) + " available");

  auto base = subsets_lex(m, k - 1);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < base.size(); ++i) index[base[i]] = static_cast<int>(i);
  std::vector<long long> remaining(base.size(), copies);

  std::vector<std::vector<int>> adopted(gs.supports.begin(),
                                        gs.supports.begin() + alpha);
  for (const auto& s : adopted) {
    // Remove one copy of each (k-1)-superset of s. Distance 4 keeps the
    // supersets of different codewords disjoint, so each is hit once.
    for (int x = 1; x <= m; ++x) {
      if (std::binary_search(s.begin(), s.end(), x)) continue;
      std::vector<int> sup(s);
      sup.insert(std::upper_bound(sup.begin(), sup.end(), x), x);
      long long& left = remaining[index.at(sup)];
      if (left < 1) throw std::logic_error("superset multiset exhausted");
      --left;
    }
  }

  long long have = total - alpha * step;  // blocks currently in the multiset
  long long surplus = have - n;
  for (int i = static_cast<int>(base.size()) - 1; i >= 0 && surplus > 0; --i) {
    long long cut = std::min(surplus, remaining[i]);
    remaining[i] -= cut;
    surplus -= cut;
  }

  std::vector<std::vector<int>> blocks;
  blocks.reserve(n);
  for (size_t i = 0; i < base.size(); ++i)
    for (long long c = 0; c < remaining[i]; ++c) blocks.push_back(base[i]);
  for (auto& s : adopted) blocks.push_back(std::move(s));
  McbcCode code = McbcCode::from_item_view(SetSystem(m, std::move(blocks)));
  if (code.n != n || code.total_storage != 1LL * n * (k - 1) - alpha)
    throw std::logic_error("distance-4 construction arithmetic mismatch");
  return code;
}

McbcCode construct_diagonal(int n, int k, int r) {
  if (n < 1 || k < 1 || r < 1) throw ParamError("parameters must be positive");
  if (r > k) throw ParamError("diagonal construction needs r <= k");
  const int alpha = k / r;
  const int beta = k % r;
  const int min_n = beta == 0 ? alpha : alpha + r;
  if (n < min_n)
    throw ParamError("diagonal construction needs n >= " + std::to_string(min_n));

  std::vector<std::vector<int>> blocks;
  blocks.reserve(n);
  for (int i = 1; i <= alpha; ++i) {
    std::vector<int> b(r);
    std::iota(b.begin(), b.end(), (i - 1) * r + 1);
    blocks.push_back(std::move(b));
  }
  if (beta > 0) {
    for (int i = alpha + 1; i <= alpha + r; ++i) {
      std::vector<int> b;
      for (int x = 1; x <= k; ++x) {
        int off = x - (i - alpha);
        bool removed = off >= 0 && off <= (alpha - 1) * r && off % r == 0;
        if (!removed) b.push_back(x);
      }
      blocks.push_back(std::move(b));
    }
  }
  std::vector<int> full(k);
  std::iota(full.begin(), full.end(), 1);
  while (static_cast<int>(blocks.size()) < n) blocks.push_back(full);
  return McbcCode::from_item_view(SetSystem(k, std::move(blocks)));
}

McbcCode steiner_to_mcbc(const SteinerSystem& s, int k, int r) {
  const int ell = s.block_size;
  if (s.point_count <= ell)
    throw ParamError("need more points than the block size");
  if (r < ell / 2 + 1 || r > ell)
    throw ParamError("need floor(l/2)+1 <= r <= l");
  if (k < r) throw ParamError("need k >= r");
  const long long k_max = 1LL * (ell - r + 1) * (2 * r - 1);
  if (k > k_max)
    throw ParamError("k exceeds (l-r+1)(2r-1) = " + std::to_string(k_max));
  return McbcCode::from_item_view(SetSystem(s.point_count, s.blocks));
}

McbcCode construct_regular(int n, int k, int m) {
  if (n < 1 || k < 1 || m < 1) throw ParamError("parameters must be positive");
  if (k > m) throw ParamError("regular construction needs k <= m");
  const int base_n = m / std::gcd(m, k);
  if (n % base_n != 0)
    throw ParamError("regular construction needs n to be a multiple of m/gcd(m,k) = " +
                     std::to_string(base_n));
  std::vector<std::vector<int>> base;
  base.reserve(base_n);
  for (int i = 1; i <= base_n; ++i) {
    std::vector<int> b;
    b.reserve(k);
    for (int j = (i - 1) * k; j <= i * k - 1; ++j) b.push_back(j % m + 1);
    base.push_back(std::move(b));
  }
  std::vector<std::vector<int>> blocks;
  blocks.reserve(n);
  for (int c = 0; c < n / base_n; ++c)
    blocks.insert(blocks.end(), base.begin(), base.end());
  return McbcCode::from_item_view(SetSystem(m, std::move(blocks)));
}

}  // namespace mcbc

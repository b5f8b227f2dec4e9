#include "mcbc/cwc.hpp"

#include <algorithm>
#include <string>

#include "mcbc/errors.hpp"
#include "mcbc/util.hpp"

namespace mcbc {

ConstantWeightCode::ConstantWeightCode(int length_, int weight_, int min_distance_,
                                       std::vector<std::vector<int>> supports_)
    : length(length_), weight(weight_), min_distance(min_distance_),
      supports(std::move(supports_)) {
  if (length < 1 || weight < 1 || weight > length)
    throw ParamError("constant weight code needs 1 <= weight <= length");
  if (min_distance < 2 || min_distance % 2 != 0)
    throw ParamError("min_distance must be a positive even integer");
  const int max_overlap = weight - min_distance / 2;
  std::vector<Mask> masks;
  for (auto& s : supports) {
    std::sort(s.begin(), s.end());
    if (static_cast<int>(s.size()) != weight)
      throw ParamError("support has wrong weight");
    if (s.front() < 1 || s.back() > length)
      throw ParamError("support element out of range");
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw ParamError("support repeats an element");
    masks.push_back(Mask::from_block(s, length));
  }
  for (size_t a = 0; a < masks.size(); ++a)
    for (size_t b = a + 1; b < masks.size(); ++b) {
      int overlap = 0;
      for (int p : supports[a])
        if (masks[b].test(p)) ++overlap;
      if (overlap > max_overlap)
        throw ParamError("supports " + std::to_string(a + 1) + " and " +
                         std::to_string(b + 1) + " violate the distance bound");
    }
}

namespace {

// counts[s] = number of w-subsets of [1..m] with element sum == s (mod m).
std::vector<long long> residue_class_counts(int m, int w) {
  if (w < 1 || w > m) throw ParamError("need 1 <= w <= m");
  std::vector<std::vector<long long>> dp(w + 1, std::vector<long long>(m, 0));
  dp[0][0] = 1;
  for (int e = 1; e <= m; ++e)
    for (int j = std::min(w, e); j >= 1; --j)
      for (int s = 0; s < m; ++s) {
        long long from = dp[j - 1][((s - e) % m + m) % m];
        if (from) dp[j][s] += from;
      }
  return dp[w];
}

}  // namespace

long long graham_sloane_size(int m, int w) {
  auto counts = residue_class_counts(m, w);
  return *std::max_element(counts.begin(), counts.end());
}

ConstantWeightCode graham_sloane_cwc(int m, int w) {
  // Residue class counts first (cheap), then a single enumeration pass
  // collecting the winning class.
  std::vector<long long> class_size = residue_class_counts(m, w);
  int best_class = 0;
  for (int c = 1; c < m; ++c)
    if (class_size[c] > class_size[best_class]) best_class = c;

  std::vector<std::vector<int>> chosen;
  std::vector<int> comb(w);
  for (int i = 0; i < w; ++i) comb[i] = i + 1;
  while (true) {
    long long sum = 0;
    for (int p : comb) sum += p;
    if (sum % m == best_class) chosen.push_back(comb);
    int i = w - 1;
    while (i >= 0 && comb[i] == m - (w - 1 - i)) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < w; ++j) comb[j] = comb[j - 1] + 1;
  }
  return ConstantWeightCode(m, w, 4, std::move(chosen));
}

}  // namespace mcbc

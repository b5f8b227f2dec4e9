#include "mcbc/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mcbc/cwc.hpp"
#include "mcbc/errors.hpp"
#include "mcbc/gf.hpp"
#include "mcbc/util.hpp"

namespace mcbc {

namespace {

void validate_basic(int n, int k, int m, int r) {
  if (n < 1 || k < 1 || m < 1 || r < 1)
    throw ParamError("parameters must be positive");
  if (r > k) throw ParamError("r must not exceed k");
}

long long counting_bound_at_c(int n, int k, int m, int r, int c) {
  // n*c - floor( (k-c) * (floor((k-1)/r)*C(m,k-1) - n*C(m-c,k-1-c))
  //              / ((m-k+1)*C(m-c,k-1-c)) )
  const long long copies = (k - 1) / r;
  const long long num =
      (k - c) * (copies * binomial(m, k - 1) - 1LL * n * binomial(m - c, k - 1 - c));
  const long long den = 1LL * (m - k + 1) * binomial(m - c, k - 1 - c);
  return 1LL * n * c - floor_div(num, den);
}

}  // namespace

long long BoundsReport::best_lower() const {
  long long best = 0;
  for (const auto& lb : lower_bounds) best = std::max(best, lb.value);
  return best;
}

BoundsReport lower_bounds(int n, int k, int m, int r) {
  validate_basic(n, k, m, r);
  if (k > m) throw ParamError("lower bounds need k <= m");
  BoundsReport rep;
  rep.n = n;
  rep.k = k;
  rep.m = m;
  rep.r = r;
  const long long rn = 1LL * r * n;
  rep.lower_bounds.push_back({"rn", rn});
  if (m >= rn) {
    // One dedicated server per stored copy; r*n is met exactly.
    rep.known_exact = LabeledValue{"single-item-servers", rn};
    return rep;
  }
  if (r <= k - 1) {
    long long best = counting_bound_at_c(n, k, m, r, r);
    for (int c = r + 1; c <= k - 1; ++c)
      best = std::max(best, counting_bound_at_c(n, k, m, r, c));
    rep.lower_bounds.push_back({"profile-counting", best});
  }
  return rep;
}

bool profile_inequality_check(const BlockProfile& profile, int k, int m, int r) {
  if (r < 1 || k < 1 || m < 1) throw ParamError("parameters must be positive");
  if (r >= k) throw ParamError("profile inequality needs r <= k-1");
  long long lhs = 0;
  const int hi = std::min<int>(k - 1, static_cast<int>(profile.counts.size()) - 1);
  for (int i = r; i <= hi; ++i)
    lhs += binomial(m - i, k - 1 - i) * profile.counts[i];
  const long long rhs = ((k - 1) / r) * binomial(m, k - 1);
  return lhs <= rhs;
}

namespace {

struct Rule {
  std::string name;
  long long value;
};

long long gs_or_hook(int m, int w, const CwcSizeHook& hook) {
  if (hook) {
    if (auto v = hook(m, w)) return *v;
  }
  return graham_sloane_size(m, w);
}

// Smallest c with c >= (1 + sqrt(x)) / 2, x >= 0.
long long ceil_half_1_sqrt(long long x) {
  long long c = 1;
  while ((2 * c - 1) * (2 * c - 1) < x) ++c;
  return c;
}

// Smallest c with c >= (5 + sqrt(x)) / 2, x >= 0.
long long ceil_half_5_sqrt(long long x) {
  long long c = 3;
  while ((2 * c - 5) * (2 * c - 5) < x) ++c;
  return c;
}

void cbc_rules(int n, int k, int m, const CwcSizeHook& hook,
               std::vector<Rule>& rules) {
  // Known closed forms for plain CBCs (r = 1), valid in the n >= m regime.
  if (k > m) return;

  // Single-point family at m = q^2 - q for a prime power q >= 3.
  {
    long long q = (1 + isqrt_floor(1 + 4LL * m)) / 2;
    if (q >= 3 && q * q - q == m && is_prime_power(q) && n == q * q + q - 1 &&
        k == q * q - q - 1)
      rules.push_back({"cbc-prime-power", q * q * q - q});
  }

  if (n == m + 1) rules.push_back({"cbc-n-m-plus-1", 1LL * m + k});

  if (n == m + 2 && k >= 2) {
    const long long s = isqrt_ceil(k + 1);
    if (m + 1 - k >= s)
      rules.push_back({"cbc-n-m-plus-2", m + k - 2 + isqrt_ceil(4LL * (k + 1))});
    else
      rules.push_back(
          {"cbc-n-m-plus-2", 2LL * m - 1 + (k + 1 + (m - k)) / (m + 1 - k)});
  }

  if (k == 3 && n >= m && m >= 3) {
    if (n <= 1LL * m * m - m)
      rules.push_back({"cbc-k3", 2LL * n - m + (n - 3) / (m - 2)});
    else
      rules.push_back({"cbc-k3", 3LL * n - 1LL * m * m + m});
  }

  if (k == 4 && n >= m && m >= 4) {
    const bool even = m % 2 == 0;
    const long long c2 = binomial(m, 2), c3 = binomial(m, 3);
    if (n == m) {
      rules.push_back({"cbc-k4", static_cast<long long>(n)});
    } else if ((even && 8LL * n <= 1LL * m * m + 6 * m) ||
               (!even && 8LL * n <= 1LL * m * m + 4 * m + 3)) {
      rules.push_back({"cbc-k4", 2LL * n - m + ceil_half_1_sqrt(8LL * (n - m) + 1)});
    } else if (!even && 8LL * n == 1LL * m * m + 4 * m + 11) {
      rules.push_back({"cbc-k4", 2LL * n - (m - 1) / 2});
    } else if (n < c2 && ((even && 8LL * n >= 1LL * m * m + 6 * m + 8) ||
                          (!even && 8LL * n > 1LL * m * m + 4 * m + 11))) {
      rules.push_back(
          {"cbc-k4", 2LL * n - m + ceil_half_5_sqrt(8LL * n - 16LL * m + 25)});
    } else if (n >= c2 && n < 3 * c3) {
      rules.push_back({"cbc-k4", 3LL * n - floor_div(1LL * m * m * (m - 3) -
                                                         2LL * (n - m),
                                                     2LL * (m - 3))});
    } else if (n >= 3 * c3) {
      rules.push_back({"cbc-k4", 4LL * n - 3 * c3});
    }
  }

  // Midrange formula: C(m,k-2) <= n <= (k-1)*C(m,k-1).
  if (k >= 2 && n >= m && n >= binomial(m, k - 2) &&
      n <= (k - 1) * binomial(m, k - 1)) {
    long long top = (k - 1) * binomial(m, k - 1);
    rules.push_back(
        {"cbc-midrange", (k - 1LL) * n - floor_div(top - n, m - k + 1)});
  }

  // Distance-4 band below C(m,k-2), subject to the residue window.
  if (k >= 4 && n >= m && n <= binomial(m, k - 2)) {
    const long long a = gs_or_hook(m, k - 3, hook);
    const long long lo = binomial(m, k - 2) - 1LL * (m - k + 1) * a;
    const long long gap = binomial(m, k - 2) - n;
    if (n >= lo && 2 * (gap % (m - k + 1)) < m - k + 1)
      rules.push_back({"cbc-distance4-mod",
                       (k - 2LL) * n - floor_div(2 * gap, m - k + 1)});
  }
}

}  // namespace

std::optional<LabeledValue> known_exact_N(int n, int k, int m, int r,
                                          const CwcSizeHook& hook) {
  validate_basic(n, k, m, r);
  std::vector<Rule> rules;

  if (m >= 1LL * n * r)
    rules.push_back({"single-item-servers", 1LL * n * r});

  if (k <= m) {
    const long long copies = (k - 1) / r;

    if (r == k) rules.push_back({"max-multiplicity", 1LL * k * n});

    if (r == k - 1) {
      const long long c = binomial(m, k - 1);
      if (n >= c)
        rules.push_back({"near-max-multiplicity", 1LL * k * n - c});
      else
        rules.push_back({"near-max-multiplicity", (k - 1LL) * n});
    }

    if (r <= k - 1 && n >= copies * binomial(m, k - 1))
      rules.push_back(
          {"replication-range", 1LL * k * n - copies * binomial(m, k - 1)});

    if (r <= k - 2) {
      const long long total = copies * binomial(m, k - 1);
      const long long a = gs_or_hook(m, k - 2, hook);
      if (n <= total && n >= total - (m - k + 1) * a)
        rules.push_back({"distance4-range",
                         (k - 1LL) * n - floor_div(total - n, m - k + 1)});
    }

    if (k == m) {
      const bool ok = (k % r == 0) ? n >= k / r : n >= k / r + r;
      if (ok)
        rules.push_back({"square", 1LL * k * n - copies * k});
    }

    if (r == 1) cbc_rules(n, k, m, hook, rules);
  }

  if (rules.empty()) return std::nullopt;
  for (const auto& rule : rules)
    if (rule.value != rules.front().value)
      throw std::logic_error("exact-value rules disagree at n=" + std::to_string(n) +
                             " k=" + std::to_string(k) + " m=" + std::to_string(m) +
                             " r=" + std::to_string(r) + ": " + rules.front().name +
                             "=" + std::to_string(rules.front().value) + " vs " +
                             rule.name + "=" + std::to_string(rule.value));

  // Report the most specific applicable rule.
  static const std::vector<std::string> precedence = {
      "single-item-servers", "cbc-prime-power", "cbc-n-m-plus-1",
      "cbc-n-m-plus-2",      "cbc-k3",          "cbc-k4",
      "square",              "max-multiplicity", "near-max-multiplicity",
      "distance4-range",     "cbc-distance4-mod", "replication-range",
      "cbc-midrange"};
  for (const auto& name : precedence)
    for (const auto& rule : rules)
      if (rule.name == name) return LabeledValue{rule.name, rule.value};
  return LabeledValue{rules.front().name, rules.front().value};
}

std::optional<LabeledValue> construction_upper(int n, int k, int m, int r) {
  validate_basic(n, k, m, r);
  if (std::min<long long>(k, 1LL * n * r) > m) return std::nullopt;

  std::vector<LabeledValue> options;
  const long long copies = (k - 1) / r;

  if (k <= m) options.push_back({"full-replication", 1LL * k * n});

  if (r < k && k <= m && n >= copies * binomial(m, k - 1))
    options.push_back({"replication", 1LL * k * n - copies * binomial(m, k - 1)});

  if (r <= k - 1 && k - 1 <= m && n < binomial(m, k - 1))
    options.push_back({"small-n", (k - 1LL) * n});

  if (r <= k - 2 && k <= m && n <= copies * binomial(m, k - 1)) {
    const long long alpha = (copies * binomial(m, k - 1) - n) / (m - k + 1);
    if (alpha <= graham_sloane_size(m, k - 2))
      options.push_back({"distance4", (k - 1LL) * n - alpha});
  }

  {
    const int w = std::max(r, k - 2);
    if (w >= 1 && w <= k - 1 && w <= m && n <= graham_sloane_size(m, w))
      options.push_back({"cwc-gs", 1LL * w * n});
  }

  if (m == k) {
    const int alpha = k / r, beta = k % r;
    if (n >= (beta == 0 ? alpha : alpha + r))
      options.push_back({"diagonal", 1LL * k * n - copies * k});
  }

  {
    const long long q = isqrt_floor(m);
    if (q * q == m && q >= 2 && FiniteFieldTable::supported(static_cast<int>(q)) &&
        n == q * q + q && r >= q / 2 + 1 && r <= q && k >= r &&
        k <= (q - r + 1) * (2 * r - 1))
      options.push_back({"steiner-affine", q * n});
  }

  if (r == k && k <= m && n % (m / std::gcd(m, k)) == 0)
    options.push_back({"regular", 1LL * k * n});

  if (options.empty()) return std::nullopt;
  LabeledValue best = options.front();
  for (const auto& o : options)
    if (o.value < best.value) best = o;
  return best;
}

AuditOutcome recursive_bound_audit(int n, int k, int m, int r,
                                   const ValueTable& values) {
  validate_basic(n, k, m, r);
  AuditOutcome out;
  auto get = [&](int nn, int kk, int mm, int rr) -> std::optional<long long> {
    auto it = values.find({nn, kk, mm, rr});
    if (it == values.end()) return std::nullopt;
    return it->second;
  };
  auto self = get(n, k, m, r);
  auto expanded = get(n * r, k, m, 1);
  std::optional<long long> contracted;
  if (m / r >= 1) contracted = get(n, (k + r - 1) / r, m / r, 1);

  auto tuple_str = [&](int nn, int kk, int mm, int rr) {
    return "N(" + std::to_string(nn) + "," + std::to_string(kk) + "," +
           std::to_string(mm) + (rr == 1 ? "" : ";" + std::to_string(rr)) + ")";
  };
  const std::string self_s = tuple_str(n, k, m, r);

  if (self && expanded) {
    if (*expanded > 1LL * r * *self)
      out.violations.push_back(tuple_str(n * r, k, m, 1) + " > r*" + self_s);
    if (*self > *expanded)
      out.violations.push_back(self_s + " > " + tuple_str(n * r, k, m, 1));
  } else {
    out.skipped.push_back("expansion inequalities need " + self_s + " and " +
                          tuple_str(n * r, k, m, 1));
  }

  if (self && contracted) {
    if (*self > 1LL * r * *contracted)
      out.violations.push_back(self_s + " > r*" +
                               tuple_str(n, (k + r - 1) / r, m / r, 1));
  } else {
    out.skipped.push_back("contraction inequality needs " + self_s + " and " +
                          tuple_str(n, (k + r - 1) / r, std::max(m / r, 1), 1));
  }

  for (int i = 1; i < r; ++i) {
    auto weaker = get(n, k, m, i);
    if (self && weaker) {
      if (*self < *weaker)
        out.violations.push_back(self_s + " < " + tuple_str(n, k, m, i));
    } else {
      out.skipped.push_back("monotonicity needs " + self_s + " and " +
                            tuple_str(n, k, m, i));
    }
  }
  return out;
}

RegularLoad mu_regular(int n, int k, int m) {
  if (n < 1 || k < 1 || m < 1) throw ParamError("parameters must be positive");
  if (k > m) throw ParamError("regular load needs k <= m");
  RegularLoad out;
  const long long kn = 1LL * k * n;
  if (n % (m / std::gcd(m, k)) == 0) {
    out.value = kn / m;
    out.exact = true;
  } else {
    out.value = (kn + m - 1) / m;
    out.exact = false;
  }
  return out;
}

}  // namespace mcbc

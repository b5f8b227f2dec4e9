#include "mcbc/gf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mcbc/errors.hpp"

namespace mcbc {

namespace {

struct FieldSpec {
  int q;
  int p;
  int e;
  // Coefficients c_0..c_{e-1} of the monic irreducible x^e + sum c_i x^i
  // over GF(p); empty for prime fields.
  std::vector<int> irreducible;
};

const std::vector<FieldSpec>& field_specs() {
  static const std::vector<FieldSpec> specs = {
      {2, 2, 1, {}},
      {3, 3, 1, {}},
      {4, 2, 2, {1, 1}},        // x^2 + x + 1
      {5, 5, 1, {}},
      {7, 7, 1, {}},
      {8, 2, 3, {1, 1, 0}},     // x^3 + x + 1
      {9, 3, 2, {1, 0}},        // x^2 + 1
      {11, 11, 1, {}},
      {13, 13, 1, {}},
      {16, 2, 4, {1, 1, 0, 0}}, // x^4 + x + 1
      {25, 5, 2, {1, 1}},       // x^2 + x + 1
      {27, 3, 3, {1, 2, 0}},    // x^3 + 2x + 1
      {32, 2, 5, {1, 0, 1, 0, 0}},  // x^5 + x^2 + 1
  };
  return specs;
}

const FieldSpec* find_spec(int q) {
  for (const auto& s : field_specs())
    if (s.q == q) return &s;
  return nullptr;
}

std::vector<int> to_poly(int label, int p, int e) {
  std::vector<int> c(e, 0);
  for (int i = 0; i < e; ++i) {
    c[i] = label % p;
    label /= p;
  }
  return c;
}

int to_label(const std::vector<int>& c, int p) {
  int label = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) label = label * p + c[i];
  return label;
}

}  // namespace

bool FiniteFieldTable::supported(int q) { return find_spec(q) != nullptr; }

const std::vector<int>& FiniteFieldTable::supported_orders() {
  static const std::vector<int> orders = [] {
    std::vector<int> o;
    for (const auto& s : field_specs()) o.push_back(s.q);
    return o;
  }();
  return orders;
}

FiniteFieldTable::FiniteFieldTable(int q) : q_(q) {
  const FieldSpec* spec = find_spec(q);
  if (!spec)
    throw ParamError("unsupported field order " + std::to_string(q));
  add_.assign(static_cast<size_t>(q) * q, 0);
  mul_.assign(static_cast<size_t>(q) * q, 0);
  const int p = spec->p;
  const int e = spec->e;
  for (int a = 0; a < q; ++a) {
    auto pa = to_poly(a, p, e);
    for (int b = 0; b < q; ++b) {
      auto pb = to_poly(b, p, e);
      std::vector<int> sum(e, 0);
      for (int i = 0; i < e; ++i) sum[i] = (pa[i] + pb[i]) % p;
      add_[a * q + b] = to_label(sum, p);

      std::vector<int> prod(2 * e - 1, 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      // Reduce x^d for d >= e via x^e = -sum c_i x^i.
      for (int d = 2 * e - 2; d >= e; --d) {
        int coeff = prod[d];
        if (coeff == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < e; ++i) {
          int sub = (coeff * spec->irreducible[i]) % p;
          prod[d - e + i] = ((prod[d - e + i] - sub) % p + p) % p;
        }
      }
      prod.resize(e);
      mul_[a * q + b] = to_label(prod, p);
    }
  }
  check_axioms();
}

void FiniteFieldTable::check_axioms() const {
  const int q = q_;
  auto fail = [&](const std::string& what) {
    throw std::logic_error("field axiom failed for q=" + std::to_string(q) +
                           ": " + what);
  };
  for (int a = 0; a < q; ++a) {
    if (add(a, 0) != a) fail("additive identity");
    if (mul(a, 1) != a) fail("multiplicative identity");
    if (mul(a, 0) != 0) fail("multiplication by zero");
    bool has_neg = false, has_inv = (a == 0);
    for (int b = 0; b < q; ++b) {
      if (add(a, b) == 0) has_neg = true;
      if (a != 0 && mul(a, b) == 1) has_inv = true;
      if (add(a, b) != add(b, a)) fail("additive commutativity");
      if (mul(a, b) != mul(b, a)) fail("multiplicative commutativity");
      for (int c = 0; c < q; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) fail("additive associativity");
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplicative associativity");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
      }
    }
    if (!has_neg) fail("additive inverse");
    if (!has_inv) fail("multiplicative inverse");
  }
}

}  // namespace mcbc

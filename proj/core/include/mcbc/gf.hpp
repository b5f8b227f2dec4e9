#pragma once

#include <vector>

namespace mcbc {

// Finite field arithmetic as dense lookup tables over element labels
// [0..q-1]. Prime fields use modular arithmetic; prime-power fields use
// polynomial arithmetic modulo a fixed irreducible polynomial, with label
// sum(c_i * p^i) for coefficient vector (c_0, c_1, ...). Label 0 is the
// additive identity and label 1 the multiplicative identity. Field axioms
// are checked exhaustively on construction.
class FiniteFieldTable {
 public:
  explicit FiniteFieldTable(int q);

  int order() const { return q_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }

  static bool supported(int q);
  static const std::vector<int>& supported_orders();

 private:
  int q_;
  std::vector<int> add_;
  std::vector<int> mul_;

  void check_axioms() const;
};

}  // namespace mcbc

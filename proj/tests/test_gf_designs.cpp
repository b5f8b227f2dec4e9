#include <doctest.h>

#include <algorithm>
#include <set>

#include "mcbc/designs.hpp"
#include "mcbc/errors.hpp"
#include "mcbc/gf.hpp"

using mcbc::FiniteFieldTable;
using mcbc::SteinerSystem;

TEST_CASE("field tables exist for every supported order") {
  for (int q : FiniteFieldTable::supported_orders()) {
    // The constructor checks every field axiom exhaustively.
    FiniteFieldTable f(q);
    CHECK(f.order() == q);
    CHECK(f.add(0, 1) == 1);
    CHECK(f.mul(1, 1) == 1);
  }
  CHECK_FALSE(FiniteFieldTable::supported(6));
  CHECK_THROWS_AS(FiniteFieldTable(6), mcbc::ParamError);
  CHECK_THROWS_AS(FiniteFieldTable(12), mcbc::ParamError);
}

TEST_CASE("GF(4) is not Z/4") {
  FiniteFieldTable f(4);
  CHECK(f.add(1, 1) == 0);        // characteristic 2
  CHECK(f.mul(2, 2) == 3);        // x * x = x + 1
  CHECK(f.mul(2, 3) == 1);        // x * (x+1) = 1
}

TEST_CASE("order-2 plane is the complete pair design on 4 points") {
  SteinerSystem s = mcbc::affine_plane(2);
  CHECK(s.point_count == 4);
  REQUIRE(s.blocks.size() == 6);
  std::set<std::vector<int>> got(s.blocks.begin(), s.blocks.end());
  std::set<std::vector<int>> want = {{1, 3}, {2, 4}, {1, 4}, {2, 3}, {1, 2}, {3, 4}};
  CHECK(got == want);
}

TEST_CASE("order-3 plane has 12 lines and 4 lines per point") {
  SteinerSystem s = mcbc::affine_plane(3);
  CHECK(s.point_count == 9);
  CHECK(s.blocks.size() == 12);
  std::vector<int> degree(10, 0);
  for (const auto& b : s.blocks)
    for (int p : b) ++degree[p];
  for (int p = 1; p <= 9; ++p) CHECK(degree[p] == 4);
}

TEST_CASE("order-4 plane matches the fixture's parameters") {
  SteinerSystem s = mcbc::affine_plane(4);
  CHECK(s.point_count == 16);
  CHECK(s.blocks.size() == 20);
  for (const auto& b : s.blocks) CHECK(b.size() == 4);
}

TEST_CASE("prime-power planes construct for larger supported orders") {
  for (int q : {5, 7, 8, 9}) {
    SteinerSystem s = mcbc::affine_plane(q);
    CHECK(static_cast<int>(s.blocks.size()) == q * q + q);
  }
  CHECK_THROWS_AS(mcbc::affine_plane(6), mcbc::ParamError);
  CHECK_THROWS_AS(mcbc::affine_plane(10), mcbc::ParamError);
}

TEST_CASE("Steiner validation rejects broken designs") {
  // Pair {1,2} covered twice.
  CHECK_THROWS_AS(SteinerSystem(2, 3, {{1, 2}, {1, 2}, {1, 3}, {2, 3}}),
                  mcbc::ParamError);
  // Pair {1,3} never covered.
  CHECK_THROWS_AS(SteinerSystem(2, 3, {{1, 2}, {2, 3}}), mcbc::ParamError);
  // Wrong block size.
  CHECK_THROWS_AS(SteinerSystem(3, 4, {{1, 2, 3}, {1, 4}}), mcbc::ParamError);
}

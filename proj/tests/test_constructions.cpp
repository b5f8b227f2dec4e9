#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "mcbc/constructions.hpp"
#include "mcbc/errors.hpp"
#include "mcbc/exhaustive.hpp"
#include "mcbc/util.hpp"
#include "mcbc/verify.hpp"

using mcbc::McbcCode;
using mcbc::SetSystem;

TEST_CASE("replication construction at the threshold uses every (k-1)-subset once") {
  McbcCode code = mcbc::construct_replication(6, 3, 4, 2);
  CHECK(code.total_storage == 12);  // 3*6 - 1*C(4,2)
  std::vector<std::vector<int>> want = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  CHECK(code.item_view.blocks == want);
  CHECK(mcbc::verify_multiset_hall(code.item_view, 3, 2).valid);
  CHECK(mcbc::verify_exhaustive(code, 3, 2, 1).valid);
}

TEST_CASE("replication construction with copies and filler blocks") {
  McbcCode code = mcbc::construct_replication(14, 3, 4, 1);
  CHECK(code.total_storage == 3 * 14 - 2 * 6);
  CHECK(code.item_view.blocks[0] == code.item_view.blocks[1]);  // adjacent copies
  CHECK(code.item_view.blocks[12] == std::vector<int>{1, 2, 3});
  CHECK(mcbc::verify_multiset_hall(code.item_view, 3, 1).valid);

  McbcCode exact = mcbc::construct_replication(12, 3, 4, 1);
  CHECK(exact.total_storage == 24);
  for (const auto& b : exact.item_view.blocks) CHECK(b.size() == 2);
  auto profile = mcbc::block_profile(exact.item_view, 3);
  CHECK(profile.counts[2] == 12);  // at the threshold every block has size k-1
  CHECK(profile.counts[3] == 0);

  CHECK_THROWS_AS(mcbc::construct_replication(11, 3, 4, 1), mcbc::ParamError);
  CHECK_THROWS_AS(mcbc::construct_replication(10, 3, 4, 3), mcbc::ParamError);  // r >= k
  CHECK_THROWS_AS(mcbc::construct_replication(10, 5, 4, 1), mcbc::ParamError);  // k > m
}

TEST_CASE("small-n construction takes the first distinct (k-1)-subsets") {
  McbcCode code = mcbc::construct_small_n_distinct(3, 3, 4);
  CHECK(code.item_view.blocks ==
        std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}});
  CHECK(code.total_storage == 6);
  CHECK(mcbc::verify_multiset_hall(code.item_view, 3, 2).valid);

  McbcCode tiny = mcbc::construct_small_n_distinct(1, 2, 3);
  CHECK(tiny.item_view.blocks == std::vector<std::vector<int>>{{1}});
  CHECK(tiny.total_storage == 1);

  CHECK_THROWS_AS(mcbc::construct_small_n_distinct(5, 4, 4), mcbc::ParamError);
  CHECK_THROWS_AS(mcbc::construct_small_n_distinct(6, 3, 4), mcbc::ParamError);
}

TEST_CASE("constant-weight construction validates its window") {
  mcbc::ConstantWeightCode disjoint(4, 2, 4, {{1, 2}, {3, 4}});
  McbcCode code = mcbc::construct_from_cwc(disjoint, 4, 2);
  CHECK(code.n == 2);
  CHECK(code.total_storage == 4);
  CHECK(mcbc::verify_multiset_hall(code.item_view, 4, 2).valid);
  CHECK(mcbc::verify_exhaustive(code, 4, 2, 1).valid);

  // Single codeword of weight k-1 serves any r <= w at h = 1.
  mcbc::ConstantWeightCode one(5, 3, 4, {{1, 3, 5}});
  for (int r = 1; r <= 3; ++r)
    CHECK(mcbc::verify_multiset_hall(
              mcbc::construct_from_cwc(one, 4, r).item_view, 4, r)
              .valid);

  CHECK_THROWS_AS(mcbc::construct_from_cwc(disjoint, 4, 3), mcbc::ParamError);
  CHECK_THROWS_AS(mcbc::construct_from_cwc(disjoint, 5, 2), mcbc::ParamError);
}

TEST_CASE("graham-sloane at weight r meets the rn storage floor") {
  // w = r = 2, k = 4, m = 7: GS(7,2) has size >= C(7,2)/7 = 3.
  mcbc::ConstantWeightCode gs = mcbc::graham_sloane_cwc(7, 2);
  McbcCode code = mcbc::construct_from_cwc(gs, 4, 2);
  CHECK(code.total_storage == 2LL * code.n);
  CHECK(mcbc::verify_multiset_hall(code.item_view, 4, 2).valid);
}

TEST_CASE("distance-4 construction hits the formula storage") {
  McbcCode code = mcbc::construct_distance4(8, 4, 5, 2);
  CHECK(code.n == 8);
  CHECK(code.total_storage == 23);  // 8*3 - 1
  CHECK(mcbc::verify_multiset_hall(code.item_view, 4, 2).valid);
  CHECK(mcbc::verify_exhaustive(code, 4, 2, 1).valid);

  // alpha = 0 degenerates to the replication multiset.
  McbcCode plain = mcbc::construct_distance4(10, 4, 5, 2);
  McbcCode repl = mcbc::construct_replication(10, 4, 5, 2);
  CHECK(plain.item_view == repl.item_view);

  // Feasible range sweeps: storage always n(k-1) - floor((T-n)/(m-k+1)).
  const long long T = 1 * mcbc::binomial(5, 3);
  const long long gs_size = mcbc::graham_sloane_size(5, 2);
  for (int n = static_cast<int>(T); n >= 1; --n) {
    const long long alpha = (T - n) / 2;
    if (alpha > gs_size) {
      CHECK_THROWS_AS(mcbc::construct_distance4(n, 4, 5, 2), mcbc::ParamError);
      break;
    }
    McbcCode c = mcbc::construct_distance4(n, 4, 5, 2);
    CHECK(c.total_storage == 3LL * n - alpha);
    CHECK(mcbc::verify_multiset_hall(c.item_view, 4, 2).valid);
  }
  CHECK_THROWS_AS(mcbc::construct_distance4(11, 4, 5, 2), mcbc::ParamError);
  CHECK_THROWS_AS(mcbc::construct_distance4(8, 4, 5, 3), mcbc::ParamError);
}

TEST_CASE("diagonal construction for m = k") {
  McbcCode code = mcbc::construct_diagonal(4, 5, 2);
  std::vector<std::vector<int>> want = {{1, 2}, {3, 4}, {2, 4, 5}, {1, 3, 5}};
  CHECK(code.item_view.blocks == want);
  CHECK(code.total_storage == 10);  // 5*4 - 2*5
  CHECK(mcbc::verify_multiset_hall(code.item_view, 5, 2).valid);
  CHECK(mcbc::verify_exhaustive(code, 5, 2, 1).valid);

  McbcCode even = mcbc::construct_diagonal(3, 4, 2);
  CHECK(even.item_view.blocks ==
        std::vector<std::vector<int>>{{1, 2}, {3, 4}, {1, 2, 3, 4}});
  CHECK(even.total_storage == 8);
  CHECK(mcbc::verify_exhaustive(even, 4, 2, 1).valid);

  McbcCode full = mcbc::construct_diagonal(3, 4, 4);
  CHECK(full.total_storage == 12);  // kn, floor((k-1)/k) = 0
  for (const auto& b : full.item_view.blocks)
    CHECK(b == std::vector<int>{1, 2, 3, 4});

  CHECK_THROWS_AS(mcbc::construct_diagonal(1, 4, 2), mcbc::ParamError);
  CHECK_THROWS_AS(mcbc::construct_diagonal(3, 5, 2), mcbc::ParamError);  // n < a+r
}

TEST_CASE("steiner blocks become an MCBC inside the (r,k) window") {
  mcbc::SteinerSystem plane = mcbc::affine_plane(4);
  McbcCode code = mcbc::steiner_to_mcbc(plane, 7, 4);
  CHECK(code.n == 20);
  CHECK(code.m == 16);
  CHECK(code.total_storage == 80);
  CHECK(mcbc::verify_multiset_hall(code.item_view, 7, 4).valid);

  McbcCode mid = mcbc::steiner_to_mcbc(plane, 10, 3);
  CHECK(mcbc::verify_multiset_hall(mid.item_view, 10, 3).valid);

  // r = l, k = 2l-1: two blocks share at most one point.
  McbcCode edge = mcbc::steiner_to_mcbc(plane, 7, 4);
  CHECK(mcbc::verify_multiset_hall(edge.item_view, 2 * 4 - 1, 4).valid);

  CHECK_THROWS_AS(mcbc::steiner_to_mcbc(plane, 11, 2), mcbc::ParamError);
  CHECK_THROWS_AS(mcbc::steiner_to_mcbc(plane, 8, 4), mcbc::ParamError);
  CHECK_THROWS_AS(mcbc::steiner_to_mcbc(plane, 11, 3), mcbc::ParamError);
}

TEST_CASE("steiner-based code has the same union profile as the fixture") {
  // Affine planes of order 4 are unique up to relabeling, so the minimum
  // union sizes must match the stored fixture exactly.
  mcbc::SteinerSystem plane = mcbc::affine_plane(4);
  McbcCode code = mcbc::steiner_to_mcbc(plane, 7, 4);
  auto table = mcbc::union_size_table(code.item_view, 6);
  auto fixture = testutil::load_fixture("affine_plane_4_cbc.json");
  CHECK(table == mcbc::union_size_table(fixture.item_view, 6));
  CHECK(table == std::vector<int>{4, 7, 9, 10, 10, 12});
}

TEST_CASE("regular construction balances server loads") {
  McbcCode code = mcbc::construct_regular(3, 4, 6);
  CHECK(code.item_view.blocks ==
        std::vector<std::vector<int>>{{1, 2, 3, 4}, {1, 2, 5, 6}, {3, 4, 5, 6}});
  for (const auto& server : code.server_view.blocks) CHECK(server.size() == 2);
  CHECK(mcbc::verify_multiset_hall(code.item_view, 4, 4).valid);
  CHECK(mcbc::verify_exhaustive(code, 4, 4, 1).valid);

  // k = m: every block is the full set, every server stores n items.
  McbcCode full = mcbc::construct_regular(2, 4, 4);
  for (const auto& b : full.item_view.blocks) CHECK(b.size() == 4);
  for (const auto& server : full.server_view.blocks) CHECK(server.size() == 2);

  // Two copies of the base case.
  McbcCode doubled = mcbc::construct_regular(6, 4, 6);
  CHECK(doubled.n == 6);
  for (const auto& server : doubled.server_view.blocks) CHECK(server.size() == 4);

  CHECK_THROWS_AS(mcbc::construct_regular(5, 4, 6), mcbc::ParamError);
  CHECK_THROWS_AS(mcbc::construct_regular(1, 7, 6), mcbc::ParamError);
}

TEST_CASE("construction outputs are deterministic") {
  auto a = mcbc::construct_distance4(8, 4, 5, 2);
  auto b = mcbc::construct_distance4(8, 4, 5, 2);
  CHECK(a == b);
  CHECK(mcbc::code_to_json(a) == mcbc::code_to_json(b));
}

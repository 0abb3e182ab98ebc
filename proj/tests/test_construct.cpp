#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <utility>
#include <vector>

#include "concov/bounds.hpp"
#include "concov/construct.hpp"
#include "concov/verify.hpp"

using namespace concov;
using construct::ThickSystem;

namespace {

DesignFamily cover(int n, int k, int r, const std::vector<std::vector<int>>& blocks) {
  std::vector<Block> bs;
  for (const auto& b : blocks) bs.push_back(Block::of(b));
  return DesignFamily(CoverParams{n, k, r}, std::move(bs));
}

// A minimum (6, 3, 2)-covering: the doubled pairs {1,2}, {3,4}, {5,6} form a
// perfect matching, every other pair appears exactly once.
DesignFamily six_point_pair_cover() {
  return cover(6, 3, 2, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}, {3, 4, 6}, {1, 5, 6}, {2, 5, 6}});
}

}  // namespace

TEST_CASE("forced families at the parameter corners") {
  const DesignFamily single = construct::trivial_cases(5, 0);
  REQUIRE(single.cover_params() == CoverParams{5, 1, 0});
  REQUIRE(single.size() == 1);
  REQUIRE(verify_family(single).valid());

  const DesignFamily path = construct::trivial_cases(6, 1);
  REQUIRE(path.cover_params() == CoverParams{6, 2, 1});
  REQUIRE(path.size() == 5);
  REQUIRE(verify_family(path).valid());

  const DesignFamily near_full = construct::trivial_cases(7, 5);
  REQUIRE(near_full.cover_params() == CoverParams{7, 6, 5});
  REQUIRE(near_full.size() == 6);
  REQUIRE(verify_family(near_full).valid());

  const DesignFamily full = construct::trivial_cases(9, 8);
  REQUIRE(full.size() == 1);
  REQUIRE(full.blocks()[0] == Block::full(9));
  REQUIRE(verify_family(full).valid());

  REQUIRE_THROWS_AS(construct::trivial_cases(7, 3), std::domain_error);
  REQUIRE_THROWS_AS(construct::trivial_cases(0, 0), std::domain_error);
  REQUIRE_THROWS_AS(construct::trivial_cases(5, 5), std::domain_error);
}

TEST_CASE("triangle chain meets the counting bound") {
  const DesignFamily three = construct::triangle_chain(3);
  REQUIRE(three.size() == 1);
  REQUIRE(three.blocks()[0] == Block::of({1, 2, 3}));

  for (int n = 3; n <= 20; ++n) {
    const DesignFamily fam = construct::triangle_chain(n);
    CAPTURE(n);
    REQUIRE(fam.cover_params() == CoverParams{n, 3, 2});
    REQUIRE(BigInt(static_cast<long>(fam.size())) == bounds::counting_lower(n, 2).rounded_up);
    REQUIRE(verify_family(fam).valid());
  }
}

TEST_CASE("layered covering on seven points, four-subsets") {
  const DesignFamily fam = construct::layered_covering(7, 4);
  const std::vector<std::vector<int>> expected = {
      {1, 2, 3, 4, 5}, {1, 2, 3, 4, 6}, {1, 2, 3, 4, 7}, {1, 2, 4, 5, 6},
      {1, 2, 5, 6, 7}, {1, 3, 5, 6, 7}, {1, 4, 5, 6, 7}, {2, 3, 5, 6, 7},
      {2, 4, 5, 6, 7}, {3, 4, 5, 6, 7}};
  REQUIRE(fam.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    REQUIRE(fam.blocks()[i] == Block::of(expected[i]));
  }
}

TEST_CASE("layered covering size matches the formula") {
  for (int r = 2; r <= 7; ++r) {
    for (int n = r + 2; n <= 12; ++n) {
      CAPTURE(n, r);
      const DesignFamily fam = construct::layered_covering(n, r);
      REQUIRE(fam.cover_params() == CoverParams{n, r + 1, r});
      REQUIRE(verify_family(fam).valid());
      if ((n - r) % 2 != 0) {
        REQUIRE(BigInt(static_cast<long>(fam.size())) == bounds::layered_size(n, r, 0));
      } else {
        const BigInt sub_size(static_cast<long>(construct::layered_default_sub(n, r).size()));
        REQUIRE(BigInt(static_cast<long>(fam.size())) == bounds::layered_size(n, r, sub_size));
      }
    }
  }
}

TEST_CASE("layered covering accepts a better sub-covering") {
  const DesignFamily sub = six_point_pair_cover();
  REQUIRE(is_covering(sub));
  const DesignFamily fam = construct::layered_covering(8, 4, sub);
  REQUIRE(fam.size() == 23);
  REQUIRE(BigInt(23) == bounds::layered_size(8, 4, BigInt(6)));
  REQUIRE(verify_family(fam).valid());

  // The default sub is a layered (6, 3, 2)-covering of size 8, two worse.
  const DesignFamily dflt = construct::layered_covering(8, 4);
  REQUIRE(dflt.size() == 25);

  // Wrong parameters or a non-covering sub are rejected.
  REQUIRE_THROWS_AS(construct::layered_covering(8, 4, construct::triangle_chain(7)),
                    std::domain_error);
  const DesignFamily hole = cover(6, 3, 2, {{1, 2, 3}, {4, 5, 6}});
  REQUIRE_THROWS_AS(construct::layered_covering(8, 4, hole), std::domain_error);
}

TEST_CASE("two-clique covering is exact at block size n-2") {
  for (int n = 4; n <= 16; ++n) {
    CAPTURE(n);
    const DesignFamily fam = construct::two_clique_covering(n);
    REQUIRE(fam.cover_params() == CoverParams{n, n - 2, n - 3});
    REQUIRE(BigInt(static_cast<long>(fam.size())) == bounds::mantel_exact(n));
    REQUIRE(verify_family(fam).valid());
  }
  REQUIRE_THROWS_AS(construct::two_clique_covering(3), std::domain_error);
}

TEST_CASE("thick triple system hits the known sizes") {
  const std::vector<std::pair<int, long>> known = {
      {9, 31}, {10, 45}, {11, 63}, {12, 84}, {13, 112}, {14, 144}};
  for (auto [n, size] : known) {
    CAPTURE(n);
    const ThickSystem sys = construct::thick_triple_system(n);
    REQUIRE(sys.triples.size() == static_cast<std::size_t>(size));
    REQUIRE(sys.covering.size() == static_cast<std::size_t>(size));
    REQUIRE(sys.covering.cover_params() == CoverParams{n, n - 3, n - 4});
    REQUIRE_FALSE(sys.optimality_open);
    REQUIRE(blocks_hit_all_supersets(sys.triples));
    REQUIRE(verify_family(sys.covering).valid());
  }
}

TEST_CASE("thick triple system at eight points stays open") {
  const ThickSystem sys = construct::thick_triple_system(8);
  REQUIRE(sys.triples.size() == 21);
  REQUIRE(sys.optimality_open);
  REQUIRE(verify_family(sys.covering).valid());
  REQUIRE_THROWS_AS(construct::thick_triple_system(7), std::domain_error);
}

TEST_CASE("thick triple system follows the formula past fourteen") {
  for (int n = 15; n <= 18; ++n) {
    CAPTURE(n);
    const ThickSystem sys = construct::thick_triple_system(n);
    REQUIRE(BigInt(static_cast<long>(sys.triples.size())) == bounds::kostochka_formula(n));
    REQUIRE(verify_family(sys.covering).valid());
  }
}

TEST_CASE("loose nine-point system covers but splits") {
  const DesignFamily fam = construct::nine_point_loose_system();
  REQUIRE(fam.size() == 30);
  REQUIRE_FALSE(fam.is_covering_kind());
  REQUIRE(blocks_hit_all_supersets(fam));
  const VerifyReport rep = verify_family(fam);
  REQUIRE(rep.covers);
  REQUIRE_FALSE(rep.connected);
  REQUIRE(rep.component_count == 3);
}

TEST_CASE("ground extension glues a covering onto a new point") {
  const DesignFamily base = construct::triangle_chain(5);
  const DesignFamily pairs = cover(5, 2, 1, {{1, 2}, {3, 4}, {4, 5}});
  const DesignFamily fam = construct::extend_ground(base, pairs);
  REQUIRE(fam.cover_params() == CoverParams{6, 3, 2});
  REQUIRE(fam.size() == base.size() + pairs.size());
  REQUIRE(verify_family(fam).valid());

  // A disconnected first input is rejected even though it covers.
  const DesignFamily split = cover(4, 2, 1, {{1, 2}, {3, 4}});
  REQUIRE(is_covering(split));
  const DesignFamily quad_pairs = cover(4, 1, 0, {{1}});
  REQUIRE_THROWS_AS(construct::extend_ground(split, quad_pairs), std::domain_error);

  // Parameter mismatch between the two inputs is rejected.
  REQUIRE_THROWS_AS(construct::extend_ground(base, cover(5, 1, 0, {{1}})), std::domain_error);
}

TEST_CASE("apex triples cover every pair of the eleven-point set") {
  std::set<std::pair<int, int>> covered;
  for (const auto& t : construct::apex_triple_cover()) {
    covered.emplace(t[0], t[1]);
    covered.emplace(t[0], t[2]);
    covered.emplace(t[1], t[2]);
  }
  int want = 0;
  for (int a = 1; a <= 11; ++a) {
    for (int b = a + 1; b <= 11; ++b) {
      ++want;
      CAPTURE(a, b);
      REQUIRE(covered.count({a, b}) == 1);
    }
  }
  REQUIRE(want == 55);
  REQUIRE(construct::apex_triple_cover().size() == 19);
}

TEST_CASE("apex extension rejects a base with the wrong shape") {
  REQUIRE_THROWS_AS(construct::assemble_apex_extension(construct::triangle_chain(11)),
                    std::domain_error);
}

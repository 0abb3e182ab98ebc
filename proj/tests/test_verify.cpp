#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <optional>
#include <vector>

#include "concov/design.hpp"
#include "concov/solver.hpp"
#include "concov/verify.hpp"

using namespace concov;

namespace {

DesignFamily cover(int n, int k, int r, std::vector<std::vector<int>> blocks) {
  std::vector<Block> bs;
  for (auto& b : blocks) bs.push_back(Block::of(b));
  return DesignFamily(CoverParams{n, k, r}, std::move(bs));
}

}  // namespace

TEST_CASE("is_covering finds the lexicographically first miss") {
  // {1,3} lies only in {1,2,3} and {1,3,4}, neither of which is present.
  const DesignFamily fam = cover(4, 3, 2, {{1, 2, 4}, {2, 3, 4}});
  std::optional<Block> miss;
  REQUIRE_FALSE(is_covering(fam, &miss));
  REQUIRE(miss.has_value());
  REQUIRE(*miss == Block::of({1, 3}));

  const DesignFamily full = cover(4, 3, 2, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  REQUIRE(is_covering(full));
}

TEST_CASE("r = 0 needs one block, empty families cover nothing") {
  REQUIRE(is_covering(cover(5, 2, 0, {{1, 2}})));
  const DesignFamily empty(CoverParams{4, 3, 2}, {});
  REQUIRE_FALSE(is_covering(empty));
  REQUIRE_FALSE(verify_family(empty).valid());
}

TEST_CASE("block graph respects the threshold") {
  const DesignFamily fam = cover(6, 3, 2, {{1, 2, 3}, {2, 3, 4}, {4, 5, 6}});
  const BlockGraph g2 = block_graph(fam, 2);
  REQUIRE(g2.vertex_count == 3);
  REQUIRE(g2.edges == std::vector<std::pair<int, int>>{{0, 1}});
  const BlockGraph g1 = block_graph(fam, 1);
  REQUIRE(g1.edges.size() == 2);  // {1,2,3}-{2,3,4} and {2,3,4}-{4,5,6}
  const BlockGraph g0 = block_graph(fam, 0);
  REQUIRE(g0.edges.size() == 3);  // complete

  const Components c2 = components(g2);
  REQUIRE(c2.count == 2);
  REQUIRE(c2.sizes == std::vector<int>{2, 1});
  REQUIRE(components(g1).count == 1);
}

TEST_CASE("default threshold by kind") {
  const DesignFamily fam = cover(5, 3, 2, {{1, 2, 3}});
  REQUIRE(default_threshold(fam) == 2);
  const DesignFamily tur(TuranParams{9, 4, 3}, {Block::of({1, 2, 3})});
  REQUIRE(default_threshold(tur) == 2);  // 2p - m = 2
  const DesignFamily skew(TuranParams{9, 8, 3}, {Block::of({1, 2, 3})});
  REQUIRE_THROWS_AS(default_threshold(skew), std::domain_error);
}

TEST_CASE("verify_family combines covering and connectivity") {
  // Valid but split: two far-apart triangles plus enough blocks to cover.
  const DesignFamily split =
      cover(4, 2, 1, {{1, 2}, {3, 4}});
  const VerifyReport rep = verify_family(split);
  REQUIRE(rep.covers);
  REQUIRE_FALSE(rep.connected);
  REQUIRE(rep.component_count == 2);
  REQUIRE_FALSE(rep.valid());

  const DesignFamily chain = cover(4, 2, 1, {{1, 2}, {2, 3}, {3, 4}});
  REQUIRE(verify_family(chain).valid());
}

TEST_CASE("hitting check works directly on the complementary kind") {
  // Edges of two cliques on {1,2,3} and {4,5,6}: the complement is bipartite,
  // so every 3-subset contains one of these edges.
  std::vector<Block> edges;
  for (auto e : {std::pair{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}}) {
    edges.push_back(Block::of({e.first, e.second}));
  }
  DesignFamily tur(TuranParams{6, 3, 2}, edges);
  REQUIRE(blocks_hit_all_supersets(tur));
  REQUIRE(verify_family(tur).covers);
  REQUIRE_FALSE(verify_family(tur).connected);  // the two cliques never meet

  edges.pop_back();  // drop {5,6}
  DesignFamily broken(TuranParams{6, 3, 2}, edges);
  std::optional<Block> miss;
  REQUIRE_FALSE(blocks_hit_all_supersets(broken, &miss));
  // Any triple built from one clique vertex and the pair {5,6} now avoids
  // every edge; the lexicographically first is {1,5,6}.
  REQUIRE(*miss == Block::of({1, 5, 6}));
}

TEST_CASE("covering check agrees with the hitting check through the dual") {
  // The two verifiers are implemented independently, so checking a family on
  // one side against its complement on the other is a real cross-check.
  solver::SplitMix64 rng(20240817);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(rng.next_below(7));   // 4..10
    const int k = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n) - 2));
    const int r = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(k)));
    const int count = 1 + static_cast<int>(rng.next_below(12));
    std::vector<Block> blocks;
    for (int i = 0; i < count; ++i) {
      std::vector<int> pool;
      for (int e = 1; e <= n; ++e) pool.push_back(e);
      for (int j = 0; j < k; ++j) {
        const auto pick = rng.next_below(pool.size() - static_cast<std::size_t>(j)) +
                          static_cast<std::uint64_t>(j);
        std::swap(pool[static_cast<std::size_t>(j)], pool[pick]);
      }
      blocks.push_back(Block::of(std::vector<int>(pool.begin(), pool.begin() + k)));
    }
    const DesignFamily fam(CoverParams{n, k, r}, blocks);
    CAPTURE(n, k, r, count, trial);
    REQUIRE(is_covering(fam) == blocks_hit_all_supersets(dualize(fam)));
  }
}

#include "concov/construct.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "concov/bounds.hpp"
#include "concov/verify.hpp"

namespace concov {
namespace construct {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

void built(bool ok, const char* msg) {
  // Postcondition of a builder; a failure here is a bug, not bad input.
  if (!ok) throw std::logic_error(msg);
}

template <typename Fn>
void for_each_pair(const std::vector<int>& pool, Fn&& fn) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) fn(pool[i], pool[j]);
  }
}

template <typename Fn>
void for_each_triple(const std::vector<int>& pool, Fn&& fn) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      for (std::size_t l = j + 1; l < pool.size(); ++l) {
        fn(pool[i], pool[j], pool[l]);
      }
    }
  }
}

}  // namespace

DesignFamily trivial_cases(int n, int r) {
  require(n >= 1 && n <= 64, "trivial_cases: n must be in [1, 64]");
  require(r >= 0 && r <= n - 1, "trivial_cases: need 0 <= r <= n - 1");
  std::vector<Block> blocks;
  if (r == 0) {
    blocks.push_back(Block::of({1}));
    return DesignFamily(CoverParams{n, 1, 0}, std::move(blocks));
  }
  if (r == n - 1) {
    blocks.push_back(Block::full(n));
    return DesignFamily(CoverParams{n, n, n - 1}, std::move(blocks));
  }
  if (r == 1) {
    for (int i = 1; i < n; ++i) blocks.push_back(Block::of({i, i + 1}));
    return DesignFamily(CoverParams{n, 2, 1}, std::move(blocks));
  }
  if (r == n - 2) {
    // Complements of the singletons {2}, ..., {n}.  Every (n-2)-set avoids
    // two elements, the larger of which is at least 2, so it lies in the
    // block missing that element.  Any two blocks share n - 2 = r elements.
    for (int x = 2; x <= n; ++x) {
      Block b = Block::full(n);
      b.bits &= ~(std::uint64_t{1} << (x - 1));
      blocks.push_back(b);
    }
    return DesignFamily(CoverParams{n, n - 1, n - 2}, std::move(blocks));
  }
  throw std::domain_error("trivial_cases: r must be one of 0, 1, n-2, n-1");
}

DesignFamily triangle_chain(int n) {
  require(n >= 3 && n <= 64, "triangle_chain: need 3 <= n <= 64");

  // Pair coverage bitmap indexed by colex rank of {a, b}, a < b.
  const auto pair_rank = [](int a, int b) {
    return static_cast<std::size_t>((b - 1) * (b - 2) / 2 + (a - 1));
  };
  const std::size_t total_pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<bool> covered(total_pairs, false);
  std::size_t covered_count = 0;
  std::vector<Block> blocks;
  int single_gain_blocks = 0;

  const auto emit = [&](int a, int b, int c) {
    int fresh = 0;
    for (auto [u, v] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}}) {
      const std::size_t idx = pair_rank(std::min(u, v), std::max(u, v));
      if (!covered[idx]) {
        covered[idx] = true;
        ++covered_count;
        ++fresh;
      }
    }
    // The size argument rests on every block past the first covering at
    // most two pairs nobody covered before.
    if (blocks.empty()) {
      built(fresh == 3, "triangle_chain: first block must be all-fresh");
    } else {
      built(fresh == 1 || fresh == 2, "triangle_chain: block gains outside {1, 2}");
      if (fresh == 1) ++single_gain_blocks;
    }
    blocks.push_back(Block::of({a, b, c}));
  };

  // Fan through 1: covers all pairs {1, j} and the consecutive pairs.
  for (int j = 2; j + 1 <= n; ++j) emit(1, j, j + 1);

  // Fans through each a over {a+2, ..., n}.  When that range has odd size
  // the pair {a, a+2} is deferred and mopped up below.
  std::vector<int> deferred;
  for (int a = 2; a <= n - 2; ++a) {
    const bool odd_range = (n - a - 1) % 2 != 0;
    int b = odd_range ? a + 3 : a + 2;
    if (odd_range) deferred.push_back(a);
    for (; b + 1 <= n; b += 2) emit(a, b, b + 1);
  }

  // Deferred starts differ by 2; one block {a, a+2, a+4} settles two of them
  // at once.  Pair them off from the top.
  std::sort(deferred.rbegin(), deferred.rend());
  std::size_t d = 0;
  for (; d + 1 < deferred.size(); d += 2) {
    const int lo = deferred[d + 1];
    built(deferred[d] == lo + 2, "triangle_chain: deferred starts not adjacent");
    emit(lo, lo + 2, lo + 4);
  }
  if (d < deferred.size()) {
    const int m0 = deferred[d];
    emit(m0, m0 + 1, m0 + 2);
  }

  const BigInt expected =
      ceil_div(binom(n, 2) - 1, 2);
  built(covered_count == total_pairs, "triangle_chain: pairs left uncovered");
  built(single_gain_blocks <= 1, "triangle_chain: more than one single-gain block");
  built(BigInt(static_cast<long>(blocks.size())) == expected,
        "triangle_chain: size misses the counting bound");

  DesignFamily fam(CoverParams{n, 3, 2}, std::move(blocks));
  built(verify_family(fam).valid(), "triangle_chain: output failed verification");
  return fam;
}

DesignFamily layered_default_sub(int n, int r) {
  require(r >= 2 && n >= r + 2, "layered_default_sub: need 2 <= r <= n - 2");
  const int sub_n = n - 2;
  if (r == 2) {
    // (sub_n, 1, 0): any single block covers the empty set.
    return DesignFamily(CoverParams{sub_n, 1, 0}, {Block::of({1})});
  }
  if (r == 3) {
    // (sub_n, 2, 1): a near-perfect matching.
    std::vector<Block> blocks;
    for (int i = 1; i + 1 <= sub_n; i += 2) blocks.push_back(Block::of({i, i + 1}));
    if (sub_n % 2 != 0) blocks.push_back(Block::of({sub_n - 1, sub_n}));
    return DesignFamily(CoverParams{sub_n, 2, 1}, std::move(blocks));
  }
  return layered_covering(sub_n, r - 2);
}

DesignFamily layered_covering(int n, int r, const std::optional<DesignFamily>& sub) {
  require(r >= 2, "layered_covering: need r >= 2");
  require(n >= r + 2 && n <= 64, "layered_covering: need r + 2 <= n <= 64");

  const int gap = n - r;
  const bool even_gap = gap % 2 == 0;
  const int regular_layers = even_gap ? gap / 2 : (gap + 1) / 2;

  std::vector<Block> blocks;

  // Layer i: an (r-2)-prefix from [r+2i-2], the pair {r+2i-1, r+2i}, one
  // tail element above the pair.  Any r-set meeting some pair in at most one
  // element has at most r - 2 elements below that pair, so it fits a block
  // of the first such layer.
  for (int i = 0; i < regular_layers; ++i) {
    const int prefix_top = r + 2 * i - 2;
    const int lo = r + 2 * i - 1;
    std::vector<int> prefix = first_combination(r - 2);
    do {
      for (int t = lo + 2; t <= n; ++t) {
        std::vector<int> elems = prefix;
        elems.push_back(lo);
        elems.push_back(lo + 1);
        elems.push_back(t);
        blocks.push_back(Block::of(elems));
      }
    } while (next_combination(prefix, prefix_top));
  }

  // One connector per adjacent layer pair: the base prefix plus both pairs'
  // territory, sharing r elements with blocks on each side.
  for (int i = 0; i + 1 < regular_layers; ++i) {
    std::vector<int> elems = first_combination(r - 2);
    elems.push_back(r + 2 * i);
    elems.push_back(r + 2 * i + 1);
    elems.push_back(r + 2 * i + 2);
    blocks.push_back(Block::of(elems));
  }

  BigInt sub_size = 0;
  if (even_gap) {
    DesignFamily sub_fam = sub.has_value() ? *sub : layered_default_sub(n, r);
    require(sub_fam.is_covering_kind() &&
                sub_fam.cover_params() == CoverParams{n - 2, r - 1, r - 2},
            "layered_covering: sub must be an (n-2, r-1, r-2)-covering");
    require(is_covering(sub_fam), "layered_covering: sub does not cover");
    sub_size = static_cast<long>(sub_fam.size());
    // r-sets containing both n-1 and n reduce to (r-2)-sets of [n-2]; each
    // widened block shares r elements with a block of the layer covering
    // the r-set it loses by dropping its top element.
    for (const Block& b : sub_fam.blocks()) {
      std::vector<int> elems = b.elements();
      elems.push_back(n - 1);
      elems.push_back(n);
      blocks.push_back(Block::of(elems));
    }
  }

  DesignFamily fam(CoverParams{n, r + 1, r}, std::move(blocks));
  built(BigInt(static_cast<long>(fam.size())) == bounds::layered_size(n, r, sub_size),
        "layered_covering: size disagrees with the formula");
  built(verify_family(fam).valid(), "layered_covering: output failed verification");
  return fam;
}

DesignFamily two_clique_covering(int n) {
  require(n >= 4 && n <= 64, "two_clique_covering: need 4 <= n <= 64");
  const int half = (n + 1) / 2;
  std::vector<Block> edges;
  for (int a = 1; a <= half; ++a) {
    for (int b = a + 1; b <= half; ++b) edges.push_back(Block::of({a, b}));
  }
  for (int a = half + 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) edges.push_back(Block::of({a, b}));
  }
  edges.push_back(Block::of({half, half + 1}));

  DesignFamily graph_side(TuranParams{n, 3, 2}, std::move(edges));
  DesignFamily covering = dualize(graph_side);
  built(BigInt(static_cast<long>(covering.size())) == bounds::mantel_exact(n),
        "two_clique_covering: size disagrees with the formula");
  built(verify_family(covering).valid(), "two_clique_covering: output failed verification");
  return covering;
}

namespace {

// The three-part triple system on [3t]: all triples inside a part, plus four
// straddling families steered by two special elements per part.  The t3_prev_y
// flag picks which neighbour's y joins the T3 pool; the variant used first
// keeps the chain x -> y_i -> y_{i+1} inside reach of T2/T3 blocks.
DesignFamily three_part_system(int t, bool t3_prev_y) {
  const int n = 3 * t;
  std::vector<std::vector<int>> part(3), rest(3);
  std::vector<int> x(3), y(3);
  for (int i = 0; i < 3; ++i) {
    for (int e = i * t + 1; e <= (i + 1) * t; ++e) part[static_cast<std::size_t>(i)].push_back(e);
    x[static_cast<std::size_t>(i)] = i * t + 1;
    y[static_cast<std::size_t>(i)] = i * t + 2;
    for (int e = i * t + 3; e <= (i + 1) * t; ++e) rest[static_cast<std::size_t>(i)].push_back(e);
  }

  std::vector<Block> blocks;
  for (int i = 0; i < 3; ++i) {
    const auto iu = static_cast<std::size_t>(i);
    const auto next = static_cast<std::size_t>((i + 1) % 3);
    const auto prev = static_cast<std::size_t>((i + 2) % 3);

    for_each_triple(part[iu], [&](int a, int b, int c) {
      blocks.push_back(Block::of({a, b, c}));
    });
    for_each_pair(part[next], [&](int b, int c) {
      blocks.push_back(Block::of({x[iu], b, c}));
    });
    std::vector<int> t2_pool = rest[prev];
    t2_pool.push_back(x[next]);
    t2_pool.push_back(y[next]);
    for_each_pair(t2_pool, [&](int b, int c) {
      blocks.push_back(Block::of({y[iu], b, c}));
    });
    std::vector<int> t3_pool = rest[prev];
    t3_pool.push_back(x[next]);
    t3_pool.push_back(t3_prev_y ? y[prev] : y[next]);
    for (int a : rest[iu]) {
      for_each_pair(t3_pool, [&](int b, int c) {
        blocks.push_back(Block::of({a, b, c}));
      });
    }
  }

  DesignFamily fam(TuranParams{n, 4, 3}, std::move(blocks));
  built(BigInt(static_cast<long>(fam.size())) ==
            BigInt(t) * (t - 1) * (2 * t - 1),
        "three_part_system: block classes collided");
  return fam;
}

// The 31-block connected (9, 4, 3)-system: triples inside each part, stars
// from every element into the next part, one tie block across all parts.
DesignFamily nine_point_connected_system() {
  std::vector<Block> blocks;
  for (int i = 0; i < 3; ++i) {
    std::vector<int> part{3 * i + 1, 3 * i + 2, 3 * i + 3};
    std::vector<int> next{(3 * (i + 1)) % 9 + 1, (3 * (i + 1)) % 9 + 2, (3 * (i + 1)) % 9 + 3};
    blocks.push_back(Block::of(part));
    for (int a : part) {
      for_each_pair(next, [&](int b, int c) { blocks.push_back(Block::of({a, b, c})); });
    }
  }
  blocks.push_back(Block::of({1, 4, 7}));
  DesignFamily fam(TuranParams{9, 4, 3}, std::move(blocks));
  built(fam.size() == 31, "nine_point_connected_system: expected 31 blocks");
  return fam;
}

std::vector<Block> drop_elements_and_relabel(const std::vector<Block>& blocks,
                                             const std::vector<int>& removed) {
  std::vector<Block> out;
  for (const Block& b : blocks) {
    bool keep = true;
    for (int e : removed) {
      if (b.contains(e)) {
        keep = false;
        break;
      }
    }
    if (!keep) continue;
    std::vector<int> elems;
    for (int e : b.elements()) {
      int shift = 0;
      for (int rm : removed) {
        if (rm < e) ++shift;
      }
      elems.push_back(e - shift);
    }
    out.push_back(Block::of(elems));
  }
  return out;
}

}  // namespace

DesignFamily nine_point_loose_system() {
  std::vector<Block> blocks;
  std::vector<std::vector<int>> part(3);
  for (int i = 0; i < 3; ++i) {
    part[static_cast<std::size_t>(i)] = {3 * i + 1, 3 * i + 2, 3 * i + 3};
  }
  for (int i = 0; i < 3; ++i) {
    const auto iu = static_cast<std::size_t>(i);
    const auto next = static_cast<std::size_t>((i + 1) % 3);
    const auto prev = static_cast<std::size_t>((i + 2) % 3);
    const int xi = part[iu][0];

    blocks.push_back(Block::of(part[iu]));
    for_each_pair(part[next], [&](int b, int c) {
      blocks.push_back(Block::of({xi, b, c}));
    });
    std::vector<int> pool{part[prev][1], part[prev][2], part[next][0]};
    for (std::size_t ai = 1; ai < 3; ++ai) {
      for_each_pair(pool, [&](int b, int c) {
        blocks.push_back(Block::of({part[iu][ai], b, c}));
      });
    }
  }
  DesignFamily fam(TuranParams{9, 4, 3}, std::move(blocks));
  built(fam.size() == 30, "nine_point_loose_system: expected 30 blocks");
  built(blocks_hit_all_supersets(fam), "nine_point_loose_system: not a valid system");
  return fam;
}

ThickSystem thick_triple_system(int n) {
  require(n >= 8 && n <= 64, "thick_triple_system: need n >= 8");

  ThickSystem out{DesignFamily(TuranParams{1, 1, 1}, {Block::of({1})}),
                  DesignFamily(CoverParams{1, 1, 0}, {Block::of({1})}), false};

  if (n == 9) {
    out.triples = nine_point_connected_system();
  } else if (n == 8) {
    // Drop the top element of the 9-point connected system; it avoids the
    // tie block {1, 4, 7}, so connectivity survives.  Whether 20 blocks are
    // possible for a connected system stays open.
    DesignFamily nine = nine_point_connected_system();
    out.triples = DesignFamily(TuranParams{8, 4, 3},
                               drop_elements_and_relabel(nine.blocks(), {9}));
    built(out.triples.size() == 21, "thick_triple_system: expected 21 blocks at n = 8");
    out.optimality_open = true;
  } else {
    const int base = ((std::max(n, 12) + 2) / 3) * 3;
    const int t = base / 3;
    const int delta = base - n;
    built(delta >= 0 && delta <= 2, "thick_triple_system: base alignment is off");

    DesignFamily base_fam = three_part_system(t, /*t3_prev_y=*/true);
    if (!blocks_hit_all_supersets(base_fam)) {
      base_fam = three_part_system(t, /*t3_prev_y=*/false);
      built(blocks_hit_all_supersets(base_fam),
            "thick_triple_system: neither pool variant yields a valid system");
    }

    // Removing an element keeps validity: a covering triple of a surviving
    // 4-set never used the removed element.  x_0 (= 1) sits outside the
    // connecting chains; the pair {x_0, x_1} meets exactly t - 1 common
    // blocks, which is what the two-point size drop needs.
    std::vector<int> removed;
    if (delta >= 1) removed.push_back(1);
    if (delta == 2) removed.push_back(t + 1);
    out.triples = DesignFamily(TuranParams{n, 4, 3},
                               drop_elements_and_relabel(base_fam.blocks(), removed));
    built(BigInt(static_cast<long>(out.triples.size())) == bounds::kostochka_formula(n),
          "thick_triple_system: size disagrees with the formula");
  }

  built(blocks_hit_all_supersets(out.triples),
        "thick_triple_system: triple side failed verification");
  out.covering = dualize(out.triples);
  built(verify_family(out.covering).valid(),
        "thick_triple_system: dual covering failed verification");
  return out;
}

DesignFamily extend_ground(const DesignFamily& connected_cover,
                           const DesignFamily& plain_smaller_cover) {
  require(connected_cover.is_covering_kind() && plain_smaller_cover.is_covering_kind(),
          "extend_ground: both inputs must be coverings");
  const CoverParams big = connected_cover.cover_params();
  const CoverParams small = plain_smaller_cover.cover_params();
  require(small.n == big.n && small.k == big.k - 1 && small.r == big.r - 1,
          "extend_ground: inputs must be (n, k, r) and (n, k-1, r-1)");
  require(big.n + 1 <= 64, "extend_ground: extended ground set exceeds 64");
  require(verify_family(connected_cover).valid(),
          "extend_ground: first input must be a connected covering");
  require(is_covering(plain_smaller_cover), "extend_ground: second input must cover");

  std::vector<Block> blocks = connected_cover.blocks();
  for (const Block& b : plain_smaller_cover.blocks()) {
    std::vector<int> elems = b.elements();
    elems.push_back(big.n + 1);
    blocks.push_back(Block::of(elems));
  }
  // r-sets containing the new point shrink to (r-1)-sets of the old ground,
  // which the widened blocks cover; a widened block contains an r-set of the
  // old ground, so it shares r elements with whichever old block covers it.
  DesignFamily fam(CoverParams{big.n + 1, big.k, big.r}, std::move(blocks));
  built(verify_family(fam).valid(), "extend_ground: output failed verification");
  return fam;
}

const std::vector<std::array<int, 3>>& apex_triple_cover() {
  static const std::vector<std::array<int, 3>> triples = {
      {1, 3, 11}, {1, 4, 6},  {1, 2, 8},  {1, 5, 9},  {1, 7, 10},
      {3, 4, 9},  {2, 3, 10}, {3, 5, 6},  {3, 7, 8},  {2, 4, 6},
      {4, 5, 7},  {4, 10, 11}, {4, 6, 8}, {2, 5, 11}, {2, 7, 9},
      {5, 8, 10}, {6, 7, 11}, {8, 9, 11}, {6, 9, 10}};
  return triples;
}

std::optional<DesignFamily> assemble_apex_extension(const DesignFamily& base) {
  require(base.is_covering_kind() && base.cover_params() == CoverParams{11, 4, 3},
          "assemble_apex_extension: base must be an (11, 4, 3)-covering");
  require(base.size() == 55, "assemble_apex_extension: base must have 55 blocks");
  require(verify_family(base).valid(),
          "assemble_apex_extension: base must be a verified connected covering");

  std::vector<Block> widened;
  for (const auto& t : apex_triple_cover()) {
    widened.push_back(Block::of({t[0], t[1], t[2], 12}));
  }

  for (std::size_t drop = 0; drop < base.size(); ++drop) {
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (i != drop) blocks.push_back(base.blocks()[i]);
    }
    blocks.insert(blocks.end(), widened.begin(), widened.end());
    DesignFamily candidate(CoverParams{12, 4, 3}, std::move(blocks));
    if (candidate.size() == 73 && verify_family(candidate).valid()) {
      return candidate;
    }
  }
  return std::nullopt;
}

}  // namespace construct
}  // namespace concov

#include "concov/verify.hpp"

#include <cstdint>
#include <stdexcept>

namespace concov {

namespace {

constexpr std::size_t kMaxSubsets = std::size_t{1} << 27;

}  // namespace

bool is_covering(const DesignFamily& fam, std::optional<Block>* first_uncovered) {
  if (!fam.is_covering_kind()) {
    throw std::domain_error("is_covering: family is not of covering kind");
  }
  const CoverParams p = fam.cover_params();
  const BigInt total_big = binom(p.n, p.r);
  if (total_big > static_cast<unsigned long>(kMaxSubsets)) {
    throw std::length_error("is_covering: too many r-subsets to enumerate");
  }
  const std::size_t total = static_cast<std::size_t>(total_big.get_ui());

  BinomialTable tab(p.n);
  std::vector<bool> hit(total, false);

  // Mark the r-subsets of each block rather than scanning all blocks per
  // subset: cost sum_b binom(k, r) instead of binom(n, r) * |family|.
  for (const Block& b : fam.blocks()) {
    const std::vector<int> elems = b.elements();
    if (p.r == 0) {
      hit[0] = true;
      break;
    }
    std::vector<int> idx = first_combination(p.r);
    do {
      std::vector<int> sub(static_cast<std::size_t>(p.r));
      for (int i = 0; i < p.r; ++i) {
        sub[static_cast<std::size_t>(i)] =
            elems[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)]) - 1];
      }
      hit[colex_rank(sub, tab)] = true;
    } while (next_combination(idx, p.k));
  }
  // Report the lexicographically first miss, scanning subsets in lex order.
  std::vector<int> c = first_combination(p.r);
  do {
    if (!hit[colex_rank(c, tab)]) {
      if (first_uncovered) *first_uncovered = Block::of(c);
      return false;
    }
  } while (next_combination(c, p.n));
  if (first_uncovered) first_uncovered->reset();
  return true;
}

bool blocks_hit_all_supersets(const DesignFamily& fam, std::optional<Block>* first_missed) {
  if (fam.is_covering_kind()) {
    throw std::domain_error("blocks_hit_all_supersets: family is of covering kind");
  }
  const TuranParams p = fam.turan_params();
  const BigInt total = binom(p.n, p.m);
  if (total > static_cast<unsigned long>(kMaxSubsets)) {
    throw std::length_error("blocks_hit_all_supersets: too many m-subsets");
  }

  std::vector<int> c = first_combination(p.m);
  do {
    const Block m_set = Block::of(c);
    bool contains_block = false;
    for (const Block& b : fam.blocks()) {
      if (b.subset_of(m_set)) {
        contains_block = true;
        break;
      }
    }
    if (!contains_block) {
      if (first_missed) *first_missed = m_set;
      return false;
    }
  } while (next_combination(c, p.n));
  if (first_missed) first_missed->reset();
  return true;
}

BlockGraph block_graph(const DesignFamily& fam, int threshold) {
  BlockGraph g;
  g.vertex_count = static_cast<int>(fam.size());
  g.adjacency.resize(fam.size());
  const auto& blocks = fam.blocks();

  for (int i = 0; i < g.vertex_count; ++i) {
    for (int j = i + 1; j < g.vertex_count; ++j) {
      const Block& a = blocks[static_cast<std::size_t>(i)];
      const Block& b = blocks[static_cast<std::size_t>(j)];
      if (a.intersect_size(b) >= threshold) {
        g.edges.emplace_back(i, j);
        g.adjacency[static_cast<std::size_t>(i)].push_back(j);
        g.adjacency[static_cast<std::size_t>(j)].push_back(i);
      }
    }
  }
  return g;
}

int default_threshold(const DesignFamily& fam) {
  if (fam.is_covering_kind()) return fam.cover_params().r;
  const TuranParams p = fam.turan_params();
  // Blocks have p.p elements each, so |A union B| <= m is the same as
  // |A intersect B| >= 2p - m.
  const int t = 2 * p.p - p.m;
  if (t < 0 || t > p.p) {
    throw std::domain_error("default_threshold: 2p - m outside [0, p]");
  }
  return t;
}

Components components(const BlockGraph& g) {
  Components c;
  c.label.assign(static_cast<std::size_t>(g.vertex_count), -1);
  for (int start = 0; start < g.vertex_count; ++start) {
    if (c.label[static_cast<std::size_t>(start)] != -1) continue;
    const int id = c.count++;
    c.sizes.push_back(0);
    std::vector<int> stack{start};
    c.label[static_cast<std::size_t>(start)] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++c.sizes[static_cast<std::size_t>(id)];
      for (int w : g.adjacency[static_cast<std::size_t>(v)]) {
        if (c.label[static_cast<std::size_t>(w)] == -1) {
          c.label[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return c;
}

VerifyReport verify_family(const DesignFamily& fam) {
  VerifyReport rep;
  std::optional<Block> violation;
  rep.covers = fam.is_covering_kind() ? is_covering(fam, &violation)
                                      : blocks_hit_all_supersets(fam, &violation);
  rep.first_violation = violation;

  const Components comp = components(block_graph(fam, default_threshold(fam)));
  rep.component_count = comp.count;
  rep.component_sizes = comp.sizes;
  rep.connected = fam.size() >= 1 && comp.count == 1;
  return rep;
}

}  // namespace concov

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "concov/design.hpp"

namespace concov {

// Graph on block indices (positions in DesignFamily::blocks()).  Two blocks
// are adjacent when they share at least `threshold` elements.
struct BlockGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted
  std::vector<std::vector<int>> adjacency;
};

BlockGraph block_graph(const DesignFamily& fam, int threshold);

// Adjacency threshold that makes connectivity meaningful for the family's
// kind: r for coverings, 2p - m for the complementary kind (where sharing
// 2p - m elements is the same as having a union of at most m elements).
// Throws std::domain_error when 2p - m is negative or exceeds p, since the
// resulting graph would be complete or empty by fiat.
int default_threshold(const DesignFamily& fam);

// Connected-component labels for the block graph, 0-based, numbered by the
// smallest vertex they contain.
struct Components {
  int count = 0;
  std::vector<int> label;  // size == vertex_count
  std::vector<int> sizes;  // size == count
};

Components components(const BlockGraph& g);

struct VerifyReport {
  bool covers = false;
  // Lexicographically first r-subset (m-subset for the complementary kind)
  // witnessing failure; empty when covers.
  std::optional<Block> first_violation;
  bool connected = false;
  int component_count = 0;
  std::vector<int> component_sizes;

  bool valid() const { return covers && connected; }
};

// Does every r-subset of the ground set lie inside some block?
bool is_covering(const DesignFamily& fam, std::optional<Block>* first_uncovered = nullptr);

// Does every m-subset of the ground set contain some block?  Checked
// directly, not through dualize, so the two sides stay independent oracles
// for each other.
bool blocks_hit_all_supersets(const DesignFamily& fam,
                              std::optional<Block>* first_missed = nullptr);

// Full report: covering (or hitting) property plus block-graph connectivity.
// A one-block family is connected; an empty family is neither.
VerifyReport verify_family(const DesignFamily& fam);

}  // namespace concov

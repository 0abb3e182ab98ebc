#pragma once

#include <cstdint>
#include <optional>

#include "concov/design.hpp"

namespace concov {
namespace solver {

// Deterministic 64-bit generator (splitmix64).  Each draw adds the constant
// 0x9E3779B97F4A7C15 to the state, then mixes the result through two
// xor-shift-multiply rounds.  Small, seedable, and stable across platforms,
// which is what reproducible searches need.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform draw from [0, bound) by rejection; bound must be positive.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

struct SearchConfig {
  std::uint64_t seed = 1;
  // Total move budget per worker; restarts share it.
  std::uint64_t budget = 1'000'000;
  // Fixed family size to search at.  Absent means: start from the greedy
  // size and keep lowering the target until a search fails.
  std::optional<int> target_size;
  bool require_connected = false;
  // Independent workers; each derives its own seed from `seed` and the
  // worker index, and the best (then lexicographically smallest) result
  // wins, so output depends only on (seed, parallelism), not thread timing.
  int parallelism = 1;
};

enum class SearchStatus {
  exact,            // witness size matches the proven lower bound
  upper_bound_only, // witness found, optimality unknown
  failed,           // no witness within the budget / size cap
};

struct SearchOutcome {
  std::optional<DesignFamily> witness;
  SearchStatus status = SearchStatus::failed;
  // The lower bound the status judgement used (also meaningful on failure:
  // for the exhaustive search it is the smallest size not yet refuted).
  BigInt lower_bound_used;
};

// Covering by repeatedly taking the block that covers the most r-subsets
// still missing, ties broken by lexicographically smallest block.  Fully
// deterministic; ignores connectivity.
DesignFamily greedy_cover(const CoverParams& params);

// Randomized fixed-size search: keeps a family of target_size blocks,
// repeatedly patches a random uncovered r-subset and evicts the block whose
// loss hurts least, with a short tabu list and occasional random evictions
// to escape plateaus.  When require_connected is set, complete-but-split
// families are repaired by bridging components before counting as done.
// Progress goes to stderr; results are byte-stable for a fixed config.
SearchOutcome local_search(const CoverParams& params, const SearchConfig& config);

// Provably minimum covering (connected covering when require_connected) by
// iterative deepening up to size_cap.  Without the connectivity requirement
// the search branches on blocks containing the first uncovered r-subset;
// with it, connector blocks may cover nothing new, so it enumerates block
// subsets in lexicographic order instead.  Both prune on how much the
// remaining choices could still cover.
SearchOutcome exhaustive_min(const CoverParams& params, bool require_connected,
                             int size_cap);

}  // namespace solver
}  // namespace concov

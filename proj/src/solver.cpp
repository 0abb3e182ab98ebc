#include "concov/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <thread>

#include "concov/bounds.hpp"
#include "concov/verify.hpp"

namespace concov {
namespace solver {

namespace {

// Search state sizes are bounded so the precomputed incidence lists stay in
// memory comfortably.
constexpr std::size_t kMaxUniverse = std::size_t{1} << 22;
constexpr std::size_t kMaxSubsets = std::size_t{1} << 24;
constexpr std::size_t kMaxIncidence = std::size_t{1} << 27;

struct Instance {
  CoverParams params;
  std::vector<Block> universe;  // all k-blocks in lex order
  std::size_t subset_count = 0;
  // block index -> colex ranks of the r-subsets it covers (ascending)
  std::vector<std::vector<std::uint32_t>> covers;
  // r-subset rank -> indices of blocks covering it (ascending)
  std::vector<std::vector<std::uint32_t>> covered_by;
};

Instance build_instance(const CoverParams& p) {
  validate(p);
  Instance inst;
  inst.params = p;

  const BigInt universe_big = binom(p.n, p.k);
  const BigInt subsets_big = binom(p.n, p.r);
  const BigInt incidence_big = universe_big * binom(p.k, p.r);
  if (universe_big > static_cast<unsigned long>(kMaxUniverse) ||
      subsets_big > static_cast<unsigned long>(kMaxSubsets) ||
      incidence_big > static_cast<unsigned long>(kMaxIncidence)) {
    throw std::length_error("solver: instance too large to enumerate");
  }
  inst.subset_count = static_cast<std::size_t>(subsets_big.get_ui());

  BinomialTable tab(p.n);
  std::vector<int> combo = first_combination(p.k);
  do {
    inst.universe.push_back(Block::of(combo));
  } while (next_combination(combo, p.n));
  std::sort(inst.universe.begin(), inst.universe.end(), lex_less);

  inst.covers.resize(inst.universe.size());
  inst.covered_by.resize(inst.subset_count);
  for (std::uint32_t bi = 0; bi < inst.universe.size(); ++bi) {
    const std::vector<int> elems = inst.universe[bi].elements();
    std::vector<int> idx = first_combination(p.r);
    std::vector<int> sub(static_cast<std::size_t>(p.r));
    do {
      for (int i = 0; i < p.r; ++i) {
        sub[static_cast<std::size_t>(i)] =
            elems[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)]) - 1];
      }
      const auto rank = static_cast<std::uint32_t>(colex_rank(sub, tab));
      inst.covers[bi].push_back(rank);
      inst.covered_by[rank].push_back(bi);
    } while (next_combination(idx, p.k));
    std::sort(inst.covers[bi].begin(), inst.covers[bi].end());
  }
  return inst;
}

std::vector<std::uint32_t> greedy_indices(const Instance& inst) {
  std::vector<std::uint16_t> cover_count(inst.subset_count, 0);
  std::size_t uncovered = inst.subset_count;
  std::vector<std::uint32_t> picked;
  std::vector<bool> in_family(inst.universe.size(), false);

  while (uncovered > 0) {
    std::uint32_t best = 0;
    std::size_t best_gain = 0;
    bool have = false;
    for (std::uint32_t bi = 0; bi < inst.universe.size(); ++bi) {
      if (in_family[bi]) continue;
      std::size_t gain = 0;
      for (std::uint32_t s : inst.covers[bi]) {
        if (cover_count[s] == 0) ++gain;
      }
      if (gain > best_gain) {  // ascending scan keeps ties lexicographic
        best_gain = gain;
        best = bi;
        have = true;
      }
    }
    if (!have) throw std::logic_error("greedy_cover: no block makes progress");
    picked.push_back(best);
    in_family[best] = true;
    for (std::uint32_t s : inst.covers[best]) {
      if (cover_count[s]++ == 0) --uncovered;
    }
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

DesignFamily family_from(const Instance& inst, const std::vector<std::uint32_t>& indices) {
  std::vector<Block> blocks;
  blocks.reserve(indices.size());
  for (std::uint32_t i : indices) blocks.push_back(inst.universe[i]);
  return DesignFamily(inst.params, std::move(blocks));
}

bool indices_connected(const Instance& inst, const std::vector<std::uint32_t>& members,
                       std::vector<int>* labels_out = nullptr) {
  const int t = static_cast<int>(members.size());
  std::vector<int> label(static_cast<std::size_t>(t), -1);
  int comp = 0;
  for (int start = 0; start < t; ++start) {
    if (label[static_cast<std::size_t>(start)] != -1) continue;
    std::vector<int> stack{start};
    label[static_cast<std::size_t>(start)] = comp;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      const Block& bv = inst.universe[members[static_cast<std::size_t>(v)]];
      for (int w = 0; w < t; ++w) {
        if (label[static_cast<std::size_t>(w)] != -1) continue;
        if (bv.intersect_size(inst.universe[members[static_cast<std::size_t>(w)]]) >=
            inst.params.r) {
          label[static_cast<std::size_t>(w)] = comp;
          stack.push_back(w);
        }
      }
    }
    ++comp;
  }
  if (labels_out) *labels_out = std::move(label);
  return comp <= 1;
}

// One fixed-size search run.  Returns the sorted member indices on success.
class Run {
 public:
  Run(const Instance& inst, const std::vector<std::uint32_t>& greedy, int target,
      bool require_connected, std::uint64_t budget, std::uint64_t seed)
      : inst_(inst),
        greedy_(greedy),
        target_(target),
        require_connected_(require_connected),
        budget_(budget),
        rng_(seed) {}

  std::optional<std::vector<std::uint32_t>> operator()() {
    init_members();
    std::size_t best_uncovered = uncovered_;
    std::uint64_t stall = 0;
    const std::uint64_t stall_limit =
        std::clamp<std::uint64_t>(budget_ / 16, 25000, 1'500'000);

    for (std::uint64_t move = 0; move < budget_; ++move) {
      if (uncovered_ == 0) {
        if (!require_connected_ || repair_connectivity(move)) {
          std::vector<std::uint32_t> out = members_;
          std::sort(out.begin(), out.end());
          return out;
        }
        if (uncovered_ == 0) {
          // Connectivity repair stalled with the covering intact: break it
          // open near the smallest component and keep searching.
          perturb_smallest_component();
        }
        continue;
      }
      patch_and_evict();
      if (uncovered_ > 0) bump_uncovered_weights();
      if (uncovered_ < best_uncovered) {
        best_uncovered = uncovered_;
        stall = 0;
      } else if (++stall >= stall_limit) {
        if (std::getenv("CONCOV_TRACE")) {
          std::cerr << "restart move=" << move << " best=" << best_uncovered << '\n';
        }
        init_members();
        best_uncovered = uncovered_;
        stall = 0;
      }
    }
    return std::nullopt;
  }

 private:
  void rebuild_counts() {
    cover_count_.assign(inst_.subset_count, 0);
    for (std::uint32_t b : members_) {
      for (std::uint32_t s : inst_.covers[b]) ++cover_count_[s];
    }
    uncovered_list_.clear();
    position_.assign(inst_.subset_count, kAbsent);
    for (std::uint32_t s = 0; s < inst_.subset_count; ++s) {
      if (cover_count_[s] == 0) {
        position_[s] = static_cast<std::uint32_t>(uncovered_list_.size());
        uncovered_list_.push_back(s);
      }
    }
    uncovered_ = uncovered_list_.size();
    weight_.assign(inst_.subset_count, 1);
  }

  // Subsets that stay uncovered grow heavier, which re-ranks the gain and
  // damage scores until the walk is forced off a plateau.
  void bump_uncovered_weights() {
    bool cap_hit = false;
    for (std::uint32_t s : uncovered_list_) {
      if (++weight_[s] >= kWeightCap) cap_hit = true;
    }
    if (cap_hit) {
      for (auto& w : weight_) w = std::max<std::uint32_t>(1, w >> 1);
    }
  }

  void init_members() {
    // Alternate the restart seed: the greedy family marks one good basin, but
    // every greedy restart lands in it again, so odd restarts draw a fresh
    // uniform family instead.
    if (inits_++ % 2 == 0) {
      members_ = greedy_;
      in_family_.assign(inst_.universe.size(), false);
      for (std::uint32_t b : members_) in_family_[b] = true;
      rebuild_counts();
      while (static_cast<int>(members_.size()) > target_) evict_least_damaging(true);
    } else {
      members_.clear();
      in_family_.assign(inst_.universe.size(), false);
      rebuild_counts();
    }
    while (static_cast<int>(members_.size()) < target_) {
      const auto b = static_cast<std::uint32_t>(rng_.next_below(inst_.universe.size()));
      if (!in_family_[b]) add_block(b);
    }
    // A tabu list longer than a quarter of the family freezes small searches
    // solid: once every member is tabu, eviction degenerates to a random walk.
    const auto len = std::min<std::size_t>(
        kTabuLen, std::max<std::size_t>(2, static_cast<std::size_t>(target_) / 4));
    tabu_.assign(len, kAbsent);
    tabu_head_ = 0;
  }

  void add_block(std::uint32_t b) {
    members_.push_back(b);
    in_family_[b] = true;
    for (std::uint32_t s : inst_.covers[b]) {
      if (cover_count_[s]++ == 0) remove_uncovered(s);
    }
  }

  void remove_member(std::size_t pos) {
    const std::uint32_t b = members_[pos];
    members_[pos] = members_.back();
    members_.pop_back();
    in_family_[b] = false;
    for (std::uint32_t s : inst_.covers[b]) {
      if (--cover_count_[s] == 0) push_uncovered(s);
    }
  }

  void push_uncovered(std::uint32_t s) {
    position_[s] = static_cast<std::uint32_t>(uncovered_list_.size());
    uncovered_list_.push_back(s);
    ++uncovered_;
  }

  void remove_uncovered(std::uint32_t s) {
    const std::uint32_t pos = position_[s];
    const std::uint32_t last = uncovered_list_.back();
    uncovered_list_[pos] = last;
    position_[last] = pos;
    uncovered_list_.pop_back();
    position_[s] = kAbsent;
    --uncovered_;
  }

  std::uint64_t damage_of(std::uint32_t b) const {
    std::uint64_t d = 0;
    for (std::uint32_t s : inst_.covers[b]) {
      if (cover_count_[s] == 1) d += weight_[s];
    }
    return d;
  }

  bool is_tabu(std::uint32_t b) const {
    for (std::uint32_t t : tabu_) {
      if (t == b) return true;
    }
    return false;
  }

  void push_tabu(std::uint32_t b) {
    tabu_[tabu_head_] = b;
    tabu_head_ = (tabu_head_ + 1) % tabu_.size();
  }

  void evict_least_damaging(bool ignore_tabu) {
    std::size_t best_pos = 0;
    std::uint64_t best_damage = kNoDamage;
    std::uint64_t ties = 0;
    for (std::size_t pos = 0; pos < members_.size(); ++pos) {
      const std::uint32_t b = members_[pos];
      if (!ignore_tabu && is_tabu(b)) continue;
      const std::uint64_t d = damage_of(b);
      if (d < best_damage) {
        best_damage = d;
        best_pos = pos;
        ties = 1;
      } else if (d == best_damage && rng_.next_below(++ties) == 0) {
        best_pos = pos;
      }
    }
    if (best_damage == kNoDamage) {
      best_pos = static_cast<std::size_t>(rng_.next_below(members_.size()));
    }
    remove_member(best_pos);
  }

  void patch_and_evict() {
    const std::uint32_t u =
        uncovered_list_[static_cast<std::size_t>(rng_.next_below(uncovered_list_.size()))];
    const auto& cands = inst_.covered_by[u];
    std::uint32_t best = cands.front();
    std::uint64_t best_gain = 0;
    std::uint64_t ties = 0;
    for (std::uint32_t b : cands) {
      std::uint64_t gain = 0;
      for (std::uint32_t s : inst_.covers[b]) {
        if (cover_count_[s] == 0) gain += weight_[s];
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = b;
        ties = 1;
      } else if (gain == best_gain && rng_.next_below(++ties) == 0) {
        best = b;
      }
    }
    add_block(best);
    push_tabu(best);
    if (rng_.next_below(16) == 0) {
      // Plateau noise: drop any non-tabu member at random.
      for (int attempt = 0; attempt < 8; ++attempt) {
        const std::size_t pos = static_cast<std::size_t>(rng_.next_below(members_.size()));
        if (members_[pos] != best && !is_tabu(members_[pos])) {
          remove_member(pos);
          return;
        }
      }
    }
    evict_least_damaging(false);
  }

  // Covering complete but split: swap a coverage-redundant member for a block
  // bridging two components.  Returns true once connected; false when the
  // attempt allotment runs out.
  bool repair_connectivity(std::uint64_t& move) {
    for (int attempt = 0; attempt < 64 && move < budget_; ++attempt, ++move) {
      std::vector<int> labels;
      if (indices_connected(inst_, members_, &labels)) return true;

      std::size_t redundant_pos = kAbsent;
      for (std::size_t i = 0; i < members_.size(); ++i) {
        if (damage_of(members_[i]) == 0) {
          redundant_pos = i;
          break;
        }
      }
      if (redundant_pos == kAbsent) return false;

      std::uint32_t bridge = kAbsent;
      for (int probe = 0; probe < 256; ++probe) {
        const auto b = static_cast<std::uint32_t>(rng_.next_below(inst_.universe.size()));
        if (in_family_[b]) continue;
        int first_comp = -1;
        bool bridges = false;
        for (std::size_t i = 0; i < members_.size() && !bridges; ++i) {
          if (i == redundant_pos) continue;
          if (inst_.universe[b].intersect_size(inst_.universe[members_[i]]) >=
              inst_.params.r) {
            const int c = labels[i];
            if (first_comp == -1) {
              first_comp = c;
            } else if (c != first_comp) {
              bridges = true;
            }
          }
        }
        if (bridges) {
          bridge = b;
          break;
        }
      }
      if (bridge == kAbsent) return false;
      remove_member(redundant_pos);
      add_block(bridge);
      push_tabu(bridge);
      if (uncovered_ != 0) return false;  // the swap broke coverage; resume
    }
    return false;
  }

  void perturb_smallest_component() {
    if (members_.size() >= inst_.universe.size()) return;
    std::vector<int> labels;
    if (indices_connected(inst_, members_, &labels)) return;
    int comps = 0;
    for (int l : labels) comps = std::max(comps, l + 1);
    std::vector<int> sizes(static_cast<std::size_t>(comps), 0);
    for (int l : labels) ++sizes[static_cast<std::size_t>(l)];
    int smallest = 0;
    for (int c = 1; c < comps; ++c) {
      if (sizes[static_cast<std::size_t>(c)] < sizes[static_cast<std::size_t>(smallest)]) {
        smallest = c;
      }
    }
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (labels[i] == smallest) pool.push_back(i);
    }
    const std::size_t pos = pool[static_cast<std::size_t>(rng_.next_below(pool.size()))];
    remove_member(pos);
    // Keep the size invariant: any random outside block replaces it.
    for (;;) {
      const auto b = static_cast<std::uint32_t>(rng_.next_below(inst_.universe.size()));
      if (!in_family_[b]) {
        add_block(b);
        push_tabu(b);
        break;
      }
    }
  }

  static constexpr std::size_t kAbsent = static_cast<std::uint32_t>(-1);
  static constexpr std::size_t kTabuLen = 12;
  static constexpr std::uint64_t kNoDamage = static_cast<std::uint64_t>(-1);
  static constexpr std::uint32_t kWeightCap = 1u << 20;

  const Instance& inst_;
  const std::vector<std::uint32_t>& greedy_;
  int target_;
  bool require_connected_;
  std::uint64_t budget_;
  SplitMix64 rng_;

  std::vector<std::uint32_t> members_;
  std::vector<bool> in_family_;
  std::vector<std::uint16_t> cover_count_;
  std::vector<std::uint32_t> uncovered_list_;
  std::vector<std::uint32_t> position_;
  std::size_t uncovered_ = 0;
  std::vector<std::uint32_t> tabu_;
  std::size_t tabu_head_ = 0;
  std::uint64_t inits_ = 0;
  std::vector<std::uint32_t> weight_;
};

BigInt search_lower_bound(const CoverParams& p, bool require_connected) {
  BigInt lb = bounds::covering_lower_schoenheim(p.n, p.k, p.r);
  if (require_connected && p.k == p.r + 1 && p.r >= 1) {
    lb = std::max(lb, bounds::connected_lower(p.n, p.r));
  }
  return lb;
}

// Runs `parallelism` independent searches and keeps the lexicographically
// smallest successful member list, which makes the result a function of the
// config alone.
std::optional<std::vector<std::uint32_t>> run_workers(const Instance& inst,
                                                      const std::vector<std::uint32_t>& greedy,
                                                      int target, const SearchConfig& cfg) {
  const int workers = std::max(1, cfg.parallelism);
  std::vector<std::optional<std::vector<std::uint32_t>>> results(
      static_cast<std::size_t>(workers));

  SplitMix64 derive(cfg.seed);
  std::vector<std::uint64_t> seeds;
  for (int w = 0; w < workers; ++w) seeds.push_back(derive.next());

  if (workers == 1) {
    results[0] = Run(inst, greedy, target, cfg.require_connected, cfg.budget, seeds[0])();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        results[static_cast<std::size_t>(w)] =
            Run(inst, greedy, target, cfg.require_connected, cfg.budget,
                seeds[static_cast<std::size_t>(w)])();
      });
    }
    for (auto& th : pool) th.join();
  }

  std::optional<std::vector<std::uint32_t>> best;
  for (const auto& r : results) {
    if (r && (!best || *r < *best)) best = r;
  }
  return best;
}

}  // namespace

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::domain_error("SplitMix64::next_below: bound must be positive");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return v % bound;
}

DesignFamily greedy_cover(const CoverParams& params) {
  const Instance inst = build_instance(params);
  return family_from(inst, greedy_indices(inst));
}

SearchOutcome local_search(const CoverParams& params, const SearchConfig& config) {
  const Instance inst = build_instance(params);
  const std::vector<std::uint32_t> greedy = greedy_indices(inst);
  const BigInt lb = search_lower_bound(params, config.require_connected);

  SearchOutcome out;
  out.lower_bound_used = lb;

  const auto finish = [&](const std::vector<std::uint32_t>& indices) {
    out.witness = family_from(inst, indices);
    out.status = BigInt(static_cast<long>(indices.size())) == lb
                     ? SearchStatus::exact
                     : SearchStatus::upper_bound_only;
  };

  if (config.target_size.has_value()) {
    const int target = *config.target_size;
    if (BigInt(target) < lb) {
      throw std::domain_error("local_search: target below the proven lower bound");
    }
    if (static_cast<std::size_t>(target) > inst.universe.size()) {
      throw std::domain_error("local_search: target exceeds the number of distinct blocks");
    }
    std::cerr << "search: (" << params.n << ", " << params.k << ", " << params.r
              << ") target " << target << (config.require_connected ? " connected" : "")
              << "\n";
    const auto found = run_workers(inst, greedy, target, config);
    if (found) finish(*found);
    return out;
  }

  // No target: walk downward from the greedy size.
  int ceiling = static_cast<int>(greedy.size());
  if (!config.require_connected || indices_connected(inst, greedy)) {
    finish(greedy);
  }
  for (int t = out.witness ? ceiling - 1 : ceiling; BigInt(t) >= lb && t >= 1; --t) {
    std::cerr << "search: (" << params.n << ", " << params.k << ", " << params.r
              << ") trying size " << t << "\n";
    const auto found = run_workers(inst, greedy, t, config);
    if (!found) break;
    finish(*found);
  }
  return out;
}

SearchOutcome exhaustive_min(const CoverParams& params, bool require_connected,
                             int size_cap) {
  const Instance inst = build_instance(params);
  const BigInt lb = search_lower_bound(params, require_connected);

  SearchOutcome out;
  long start = 1;
  if (lb.fits_slong_p()) start = std::max(start, lb.get_si());

  const std::size_t per_block = inst.covers.empty() ? 1 : inst.covers[0].size();

  std::vector<std::uint16_t> cover_count(inst.subset_count, 0);
  std::size_t uncovered = inst.subset_count;
  std::vector<std::uint32_t> chosen;

  const auto add = [&](std::uint32_t b) {
    chosen.push_back(b);
    for (std::uint32_t s : inst.covers[b]) {
      if (cover_count[s]++ == 0) --uncovered;
    }
  };
  const auto undo = [&]() {
    const std::uint32_t b = chosen.back();
    chosen.pop_back();
    for (std::uint32_t s : inst.covers[b]) {
      if (--cover_count[s] == 0) ++uncovered;
    }
  };
  const auto first_uncovered = [&]() -> std::uint32_t {
    for (std::uint32_t s = 0; s < inst.subset_count; ++s) {
      if (cover_count[s] == 0) return s;
    }
    return static_cast<std::uint32_t>(-1);
  };

  // Covering minimum: branch on the blocks containing the first uncovered
  // subset.  Complete because some chosen block must contain it.
  const std::function<bool(int)> dfs_forcing = [&](int t) -> bool {
    if (uncovered == 0) return true;
    const int slots = t - static_cast<int>(chosen.size());
    if (slots <= 0) return false;
    if (static_cast<std::size_t>(slots) * per_block < uncovered) return false;
    const std::uint32_t u = first_uncovered();
    for (std::uint32_t b : inst.covered_by[u]) {
      bool already = false;
      for (std::uint32_t c : chosen) {
        if (c == b) {
          already = true;
          break;
        }
      }
      if (already) continue;
      add(b);
      if (dfs_forcing(t)) return true;
      undo();
    }
    return false;
  };

  // Connected minimum: connector blocks may cover nothing new, so enumerate
  // index-increasing subsets instead; prune when the first uncovered subset
  // has no covering block left ahead.
  const std::function<bool(int, std::uint32_t)> dfs_subsets =
      [&](int t, std::uint32_t next) -> bool {
    const int slots = t - static_cast<int>(chosen.size());
    if (slots == 0) {
      return uncovered == 0 && indices_connected(inst, chosen);
    }
    if (static_cast<std::size_t>(slots) * per_block < uncovered) return false;
    if (uncovered > 0) {
      const std::uint32_t u = first_uncovered();
      if (inst.covered_by[u].back() < next) return false;
    }
    if (inst.universe.size() - next < static_cast<std::size_t>(slots)) return false;
    for (std::uint32_t b = next; b < inst.universe.size(); ++b) {
      add(b);
      if (dfs_subsets(t, b + 1)) return true;
      undo();
    }
    return false;
  };

  for (long t = start; t <= size_cap; ++t) {
    std::cerr << "exhaustive: (" << params.n << ", " << params.k << ", " << params.r
              << ") depth " << t << (require_connected ? " connected" : "") << "\n";
    const bool found = require_connected ? dfs_subsets(static_cast<int>(t), 0)
                                         : dfs_forcing(static_cast<int>(t));
    if (found) {
      out.witness = family_from(inst, chosen);
      out.status = SearchStatus::exact;
      out.lower_bound_used = t;
      return out;
    }
  }
  out.status = SearchStatus::failed;
  out.lower_bound_used = BigInt(size_cap) + 1;
  return out;
}

}  // namespace solver
}  // namespace concov

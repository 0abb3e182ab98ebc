// Integration gate: one line per acceptance criterion, exit code = number of
// failures.  Run from the repository root so the witness store is found.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "concov/bounds.hpp"
#include "concov/catalog.hpp"
#include "concov/construct.hpp"
#include "concov/design_io.hpp"
#include "concov/solver.hpp"
#include "concov/table.hpp"
#include "concov/verify.hpp"

using namespace concov;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream log;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "    " << what << "\n";
    }
  }
};

bool triangle_chains(Check& c) {
  const std::vector<long> row = {1, 3, 5, 7, 10, 14, 18, 22, 27, 33, 39, 45};
  for (int n = 3; n <= 60; ++n) {
    const DesignFamily fam = construct::triangle_chain(n);
    const BigInt want = bounds::counting_lower(n, 2).rounded_up;
    c.expect(BigInt(static_cast<long>(fam.size())) == want,
             "triangle chain size off at n=" + std::to_string(n));
    c.expect(verify_family(fam).valid(),
             "triangle chain invalid at n=" + std::to_string(n));
    if (n <= 14) {
      c.expect(BigInt(row[static_cast<std::size_t>(n - 3)]) == want,
               "triangle row value off at n=" + std::to_string(n));
    }
  }
  return c.ok;
}

bool layered_coverings(Check& c) {
  for (int r = 2; r <= 12; ++r) {
    for (int n = r + 2; n <= 16; ++n) {
      const DesignFamily fam = construct::layered_covering(n, r);
      const std::string at = " at (" + std::to_string(n) + ", " + std::to_string(r) + ")";
      c.expect(verify_family(fam).valid(), "layered covering invalid" + at);
      BigInt sub = 0;
      if ((n - r) % 2 == 0) {
        sub = static_cast<long>(construct::layered_default_sub(n, r).size());
      }
      c.expect(BigInt(static_cast<long>(fam.size())) == bounds::layered_size(n, r, sub),
               "layered size formula off" + at);
    }
  }

  const DesignFamily seven = construct::layered_covering(7, 4);
  const std::vector<std::vector<int>> expected = {
      {1, 2, 3, 4, 5}, {1, 2, 3, 4, 6}, {1, 2, 3, 4, 7}, {1, 2, 4, 5, 6},
      {1, 2, 5, 6, 7}, {1, 3, 5, 6, 7}, {1, 4, 5, 6, 7}, {2, 3, 5, 6, 7},
      {2, 4, 5, 6, 7}, {3, 4, 5, 6, 7}};
  c.expect(seven.size() == expected.size(), "seven-point layered covering size off");
  for (std::size_t i = 0; i < expected.size() && i < seven.size(); ++i) {
    c.expect(seven.blocks()[i] == Block::of(expected[i]),
             "seven-point layered covering block " + std::to_string(i) + " off");
  }
  return c.ok;
}

bool stored_triple_witnesses(Check& c) {
  Catalog cat;
  const std::vector<long> want = {12, 19, 28, 40, 55, 73};
  for (int n = 7; n <= 12; ++n) {
    const long target = want[static_cast<std::size_t>(n - 7)];
    c.expect(bounds::counting_lower(n, 3).rounded_up == target,
             "counting value off at n=" + std::to_string(n));
    bool found = false;
    for (const auto& w : cat.witnesses()) {
      if (!w.connected || !(w.params == CoverParams{n, 4, 3})) continue;
      const DesignFamily fam = load_design(w.file);
      const VerifyReport rep = verify_family(fam);
      c.expect(rep.valid(), w.file.filename().string() + " fails re-verification");
      if (rep.valid() && BigInt(static_cast<long>(fam.size())) == target) found = true;
    }
    c.expect(found, "no stored connected witness of size " + std::to_string(target) +
                        " for n=" + std::to_string(n));
    const CatalogEntry entry = cat.connected_covering_number(n, 3);
    c.expect(entry.exact() && entry.lower == target,
             "catalog not settled at n=" + std::to_string(n));
  }
  return c.ok;
}

bool two_clique_row(Check& c) {
  for (int n = 4; n <= 60; ++n) {
    const DesignFamily fam = construct::two_clique_covering(n);
    c.expect(BigInt(static_cast<long>(fam.size())) == bounds::mantel_exact(n),
             "two-clique size off at n=" + std::to_string(n));
    c.expect(verify_family(fam).valid(), "two-clique invalid at n=" + std::to_string(n));
  }
  Catalog cat;
  const std::vector<long> row = {5, 7, 10, 13, 17, 21, 26, 31, 37, 43};
  for (int n = 5; n <= 14; ++n) {
    const CatalogEntry e = cat.connected_covering_number(n, n - 3);
    c.expect(e.exact() && e.lower == row[static_cast<std::size_t>(n - 5)],
             "catalog value off at block size n-2, n=" + std::to_string(n));
  }
  return c.ok;
}

bool thick_systems(Check& c) {
  const std::vector<long> want = {31, 45, 63, 84, 112, 144};
  for (int n = 9; n <= 14; ++n) {
    const construct::ThickSystem sys = construct::thick_triple_system(n);
    c.expect(sys.triples.size() == static_cast<std::size_t>(want[static_cast<std::size_t>(n - 9)]),
             "triple system size off at n=" + std::to_string(n));
    c.expect(verify_family(sys.covering).valid(),
             "dual covering invalid at n=" + std::to_string(n));
    c.expect(!sys.optimality_open, "optimality unexpectedly open at n=" + std::to_string(n));
  }
  for (int n = 15; n <= 30; ++n) {
    const construct::ThickSystem sys = construct::thick_triple_system(n);
    c.expect(BigInt(static_cast<long>(sys.triples.size())) == bounds::kostochka_formula(n),
             "triple system misses the formula at n=" + std::to_string(n));
    c.expect(verify_family(sys.covering).valid(),
             "dual covering invalid at n=" + std::to_string(n));
  }
  const construct::ThickSystem eight = construct::thick_triple_system(8);
  c.expect(eight.triples.size() == 21, "eight-point system size off");
  c.expect(eight.optimality_open, "eight-point system must stay flagged open");
  return c.ok;
}

bool bound_identities(Check& c) {
  for (int r = 2; r <= 12; ++r) {
    for (int n = r + 2; n <= 40; ++n) {
      for (long sub : {0L, 1L, 17L}) {
        c.expect(bounds::star_layer_identity(n, r, BigInt(sub)),
                 "identity fails at (" + std::to_string(n) + ", " + std::to_string(r) +
                     ", sub=" + std::to_string(sub) + ")");
      }
      if ((n - r) % 2 == 0) {
        const BigInt limit = bounds::star_vs_layered(n, r, 0).sub_limit;
        const auto at = bounds::star_vs_layered(n, r, limit);
        const auto beyond = bounds::star_vs_layered(n, r, limit + 1);
        c.expect(at.holds && at.criterion && !beyond.holds && !beyond.criterion,
                 "dominance threshold off at (" + std::to_string(n) + ", " +
                     std::to_string(r) + ")");
      }
    }
  }
  for (int n = 3; n <= 100; ++n) {
    for (int r = 1; r + 2 <= n; ++r) {
      const bool beats = bounds::density_beats_counting(n, r);
      c.expect(beats == bounds::density_dominance_criterion(n, r),
               "dominance criterion off at (" + std::to_string(n) + ", " +
                   std::to_string(r) + ")");
      const bool tie =
          bounds::density_lower(n, r).exact == bounds::counting_lower(n, r).exact;
      c.expect(tie == (n == 3 && r == 1),
               "unexpected tie at (" + std::to_string(n) + ", " + std::to_string(r) + ")");
    }
  }
  return c.ok;
}

bool table_reproduction(Check& c) {
  Catalog cat;
  const table::TableReport report = table::build_table(cat, 14);
  c.expect(report.mismatch == 0, std::to_string(report.mismatch) + " mismatched cells");
  c.expect(report.unmatched == 0, std::to_string(report.unmatched) + " unmatched cells");
  for (const auto& cell : report.cells) {
    if (cell.match == table::Match::mismatch && cell.reference) {
      c.log << "    (" << cell.n << ", " << cell.r << "): ours [" << cell.entry.lower
            << ", " << cell.entry.upper << "] vs [" << cell.reference->lo << ", "
            << cell.reference->hi << "]\n";
    }
  }

  const std::vector<std::pair<std::pair<int, int>, long>> lows = {
      {{13, 3}, 95},  {{14, 3}, 121}, {{9, 4}, 32},   {{10, 4}, 53},  {{11, 4}, 83},
      {{12, 4}, 124}, {{13, 4}, 179}, {{14, 4}, 250}, {{10, 5}, 51},  {{11, 5}, 96},
      {{12, 5}, 159}, {{13, 5}, 258}, {{14, 5}, 401}, {{11, 6}, 84},  {{12, 6}, 165},
      {{13, 6}, 286}, {{14, 6}, 501}, {{12, 7}, 126}, {{13, 7}, 269}, {{14, 7}, 491},
      {{13, 8}, 185}, {{14, 8}, 419}, {{14, 9}, 259}, {{14, 10}, 143}};
  for (const auto& [cell, lo] : lows) {
    const CatalogEntry e = cat.connected_covering_number(cell.first, cell.second);
    c.expect(e.lower == lo, "lower bound not reached at (" + std::to_string(cell.first) +
                                ", " + std::to_string(cell.second) + "): have " +
                                e.lower.get_str() + ", want " + std::to_string(lo));
  }
  return c.ok;
}

bool exhaustive_minima(Check& c) {
  struct Case {
    CoverParams params;
    bool connected;
    int cap;
    long want;
  };
  const std::vector<Case> cases = {
      {{4, 2, 1}, true, 6, 3},  {{5, 3, 2}, true, 7, 5},  {{5, 4, 3}, true, 6, 4},
      {{6, 4, 3}, true, 9, 7},  {{6, 5, 4}, true, 7, 5},  {{6, 3, 2}, false, 8, 6},
  };
  for (const auto& tc : cases) {
    const auto out = solver::exhaustive_min(tc.params, tc.connected, tc.cap);
    const std::string at = "(" + std::to_string(tc.params.n) + ", " +
                           std::to_string(tc.params.k) + ", " + std::to_string(tc.params.r) +
                           (tc.connected ? ") connected" : ")");
    c.expect(out.status == solver::SearchStatus::exact, "search not exact at " + at);
    if (out.witness) {
      c.expect(out.witness->size() == static_cast<std::size_t>(tc.want),
               "minimum off at " + at);
      const VerifyReport rep = verify_family(*out.witness);
      c.expect(rep.covers && (!tc.connected || rep.connected), "witness invalid at " + at);
    } else {
      c.expect(false, "no witness at " + at);
    }
  }
  return c.ok;
}

bool duality_and_determinism(Check& c) {
  solver::SplitMix64 rng(20240815);
  int iso_checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(11));  // 2..12
    // Complementing needs nonempty co-blocks, so k stays below n.
    const int k = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n) - 1));
    const int r = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(k) + 1));
    // No more blocks than exist: k = n leaves a single possible mask.
    std::uint64_t distinct = 1;
    for (int i = 0; i < k; ++i) distinct = distinct * (n - i) / (i + 1);
    const int count =
        1 + static_cast<int>(rng.next_below(std::min<std::uint64_t>(10, distinct)));

    std::set<std::uint64_t> masks;
    while (static_cast<int>(masks.size()) < count) {
      std::uint64_t m = 0;
      while (__builtin_popcountll(m) < k) {
        m |= std::uint64_t{1} << rng.next_below(static_cast<std::uint64_t>(n));
      }
      masks.insert(m);
    }
    std::vector<Block> blocks;
    for (std::uint64_t m : masks) blocks.push_back(Block{m});
    const DesignFamily fam(CoverParams{n, k, r}, std::move(blocks));

    c.expect(dualize(dualize(fam)) == fam, "double dual differs from the original");
    const std::string text = serialize_design(fam);
    c.expect(serialize_design(parse_design(text)) == text, "serialization not canonical");

    // Complementing maps "share >= t" to "share >= n - 2k + t" and reverses
    // the lex order of the blocks.
    const int t = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(k) + 1));
    const int td = n - 2 * k + t;
    if (td >= 0 && td <= n - k) {
      const DesignFamily dual = dualize(fam);
      const auto g = block_graph(fam, t);
      const auto h = block_graph(dual, td);
      const int s = static_cast<int>(fam.size());
      std::vector<std::pair<int, int>> mapped;
      for (auto [i, j] : g.edges) mapped.emplace_back(s - 1 - j, s - 1 - i);
      std::sort(mapped.begin(), mapped.end());
      c.expect(mapped == h.edges, "block graph not preserved under dualizing");
      ++iso_checked;
    }
  }
  c.expect(iso_checked > 100, "too few threshold pairs landed in range");

  Catalog cat;
  c.expect(cat.load_warnings().empty(), "witness store produced load warnings");
  for (const auto& w : cat.witnesses()) {
    const DesignFamily fam = load_design(w.file);
    const VerifyReport rep = verify_family(fam);
    c.expect(rep.covers && (!w.connected || rep.connected),
             w.file.filename().string() + " fails re-verification");
  }

  solver::SearchConfig cfg;
  cfg.seed = 99;
  cfg.budget = 300'000;
  cfg.require_connected = true;
  cfg.parallelism = 2;
  const auto first = solver::local_search(CoverParams{6, 3, 2}, cfg);
  const auto second = solver::local_search(CoverParams{6, 3, 2}, cfg);
  c.expect(first.witness.has_value() && second.witness.has_value(),
           "deterministic search found no witness");
  if (first.witness && second.witness) {
    c.expect(serialize_design(*first.witness) == serialize_design(*second.witness),
             "search output differs between identical runs");
  }
  return c.ok;
}

struct Criterion {
  const char* name;
  bool (*run)(Check&);
  double limit_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"triangle chains, n <= 60", triangle_chains, 10.0},
      {"layered coverings, r <= 12, n <= 16", layered_coverings, 60.0},
      {"stored minimum witnesses at block size 4", stored_triple_witnesses, 300.0},
      {"two-clique row, n <= 60", two_clique_row, 5.0},
      {"triple systems, n <= 30", thick_systems, 30.0},
      {"bound identities and dominance thresholds", bound_identities, 10.0},
      {"reference table reproduction, n <= 14", table_reproduction, 60.0},
      {"exhaustive minima on small instances", exhaustive_minima, 120.0},
      {"duality, store integrity, determinism", duality_and_determinism, 120.0},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& crit = criteria[i];
    Check check;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = crit.run(check);
    } catch (const std::exception& ex) {
      check.log << "    exception: " << ex.what() << "\n";
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = crit.limit_seconds <= 0 || seconds <= crit.limit_seconds;
    if (!in_time) {
      check.log << "    time limit exceeded: " << seconds << "s > " << crit.limit_seconds
                << "s\n";
    }
    const bool pass = ok && in_time;
    std::printf("[%s] %zu. %s (%.2fs)\n", pass ? "PASS" : "FAIL", i + 1, crit.name, seconds);
    const std::string detail = check.log.str();
    if (!pass && !detail.empty()) std::fputs(detail.c_str(), stdout);
    if (!pass) ++failures;
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures;
}

#pragma once

#include <string>
#include <vector>

#include "concov/catalog.hpp"

namespace concov::table {

// One published value of the connected covering number, either pinned exactly
// (lo == hi) or enclosed in an interval. Tags carry the annotation letters
// used by the reference survey's key.
struct ReferenceCell {
  int n = 0;
  int r = 0;
  long lo = 0;
  long hi = 0;
  std::string lo_tag;
  std::string hi_tag;

  bool exact() const { return lo == hi; }
};

// Reference values for every pair 0 <= r < n <= 14, ordered by r then n.
const std::vector<ReferenceCell>& reference_table();

// Cell lookup; nullptr when (n, r) lies outside the embedded range.
const ReferenceCell* reference_cell(int n, int r);

enum class Match {
  agree,     // both sides exact and equal
  within,    // reference is an interval and our enclosure sits inside it
  mismatch,  // anything else
  none,      // no reference value for this cell
};

const char* match_name(Match m);

Match classify(const CatalogEntry& entry, const ReferenceCell* ref);

struct TableCell {
  int n = 0;
  int r = 0;
  CatalogEntry entry;
  const ReferenceCell* reference = nullptr;
  Match match = Match::none;
};

struct TableReport {
  int n_max = 0;
  std::vector<TableCell> cells;  // r ascending, then n
  int agree = 0;
  int within = 0;
  int mismatch = 0;
  int unmatched = 0;

  bool clean() const { return mismatch == 0; }
};

// Evaluates the connected covering number through the catalog for all
// 0 <= r < n <= n_max and compares each cell against the reference table.
TableReport build_table(Catalog& cat, int n_max);

}  // namespace concov::table

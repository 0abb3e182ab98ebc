#include "concov/table.hpp"

#include <stdexcept>
#include <utility>

namespace concov::table {

namespace {

void exact_cell(std::vector<ReferenceCell>& out, int n, int r, long v,
                std::string tag = "") {
  out.push_back({n, r, v, v, tag, std::move(tag)});
}

void range_cell(std::vector<ReferenceCell>& out, int n, int r, long lo,
                std::string lo_tag, long hi, std::string hi_tag) {
  out.push_back({n, r, lo, hi, std::move(lo_tag), std::move(hi_tag)});
}

std::vector<ReferenceCell> make_reference_table() {
  std::vector<ReferenceCell> t;
  t.reserve(105);

  for (int n = 1; n <= 14; ++n) exact_cell(t, n, 0, 1);
  for (int n = 2; n <= 14; ++n) exact_cell(t, n, 1, n - 1);

  exact_cell(t, 3, 2, 1);
  exact_cell(t, 4, 2, 3);
  exact_cell(t, 5, 2, 5, "et");
  exact_cell(t, 6, 2, 7, "e");
  exact_cell(t, 7, 2, 10, "e");
  exact_cell(t, 8, 2, 14, "e");
  exact_cell(t, 9, 2, 18, "e");
  exact_cell(t, 10, 2, 22, "e");
  exact_cell(t, 11, 2, 27, "e");
  exact_cell(t, 12, 2, 33, "e");
  exact_cell(t, 13, 2, 39, "e");
  exact_cell(t, 14, 2, 45, "e");

  exact_cell(t, 4, 3, 1);
  exact_cell(t, 5, 3, 4);
  exact_cell(t, 6, 3, 7, "pt");
  exact_cell(t, 7, 3, 12, "pu");
  exact_cell(t, 8, 3, 19, "p");
  exact_cell(t, 9, 3, 28, "p");
  exact_cell(t, 10, 3, 40, "p");
  exact_cell(t, 11, 3, 55, "p");
  exact_cell(t, 12, 3, 73, "p");
  range_cell(t, 13, 3, 95, "l", 97, "r");
  range_cell(t, 14, 3, 121, "l", 123, "r");

  exact_cell(t, 5, 4, 1);
  exact_cell(t, 6, 4, 5);
  exact_cell(t, 7, 4, 10, "t");
  range_cell(t, 8, 4, 20, "", 21, "u");
  range_cell(t, 9, 4, 32, "l", 35, "r");
  range_cell(t, 10, 4, 53, "l", 59, "r");
  range_cell(t, 11, 4, 83, "l", 89, "r");
  range_cell(t, 12, 4, 124, "l", 136, "r");
  range_cell(t, 13, 4, 179, "l", 193, "r");
  range_cell(t, 14, 4, 250, "l", 271, "r");

  exact_cell(t, 6, 5, 1);
  exact_cell(t, 7, 5, 6);
  exact_cell(t, 8, 5, 13, "t");
  exact_cell(t, 9, 5, 31, "u");
  range_cell(t, 10, 5, 51, "l", 61, "r");
  range_cell(t, 11, 5, 96, "a", 111, "r");
  range_cell(t, 12, 5, 159, "l", 177, "r");
  range_cell(t, 13, 5, 258, "l", 290, "r");
  range_cell(t, 14, 5, 401, "l", 447, "r");

  exact_cell(t, 7, 6, 1);
  exact_cell(t, 8, 6, 7);
  exact_cell(t, 9, 6, 17, "t");
  exact_cell(t, 10, 6, 45, "u");
  range_cell(t, 11, 6, 84, "a", 95, "r");
  range_cell(t, 12, 6, 165, "a", 195, "r");
  range_cell(t, 13, 6, 286, "l", 327, "r");
  range_cell(t, 14, 6, 501, "l", 572, "r");

  exact_cell(t, 8, 7, 1);
  exact_cell(t, 9, 7, 8);
  exact_cell(t, 10, 7, 21, "t");
  exact_cell(t, 11, 7, 63, "u");
  range_cell(t, 12, 7, 126, "a", 147, "r");
  range_cell(t, 13, 7, 269, "a", 323, "r");
  range_cell(t, 14, 7, 491, "l", 587, "r");

  exact_cell(t, 9, 8, 1);
  exact_cell(t, 10, 8, 9);
  exact_cell(t, 11, 8, 26, "t");
  exact_cell(t, 12, 8, 84, "u");
  range_cell(t, 13, 8, 185, "a", 210, "r");
  range_cell(t, 14, 8, 419, "a", 505, "r");

  exact_cell(t, 10, 9, 1);
  exact_cell(t, 11, 9, 10);
  exact_cell(t, 12, 9, 31, "t");
  exact_cell(t, 13, 9, 112, "u");
  range_cell(t, 14, 9, 259, "s", 297, "r");

  exact_cell(t, 11, 10, 1);
  exact_cell(t, 12, 10, 11);
  exact_cell(t, 13, 10, 37, "t");
  range_cell(t, 14, 10, 143, "s", 144, "u");

  exact_cell(t, 12, 11, 1);
  exact_cell(t, 13, 11, 12);
  exact_cell(t, 14, 11, 43, "t");

  exact_cell(t, 13, 12, 1);
  exact_cell(t, 14, 12, 13);

  exact_cell(t, 14, 13, 1);

  return t;
}

}  // namespace

const std::vector<ReferenceCell>& reference_table() {
  static const std::vector<ReferenceCell> table = make_reference_table();
  return table;
}

const ReferenceCell* reference_cell(int n, int r) {
  for (const auto& cell : reference_table()) {
    if (cell.n == n && cell.r == r) return &cell;
  }
  return nullptr;
}

const char* match_name(Match m) {
  switch (m) {
    case Match::agree: return "agree";
    case Match::within: return "within";
    case Match::mismatch: return "mismatch";
    case Match::none: return "none";
  }
  return "none";
}

Match classify(const CatalogEntry& entry, const ReferenceCell* ref) {
  if (ref == nullptr) return Match::none;
  if (ref->exact()) {
    return entry.exact() && entry.lower == ref->lo ? Match::agree
                                                   : Match::mismatch;
  }
  return entry.lower >= ref->lo && entry.upper <= ref->hi ? Match::within
                                                          : Match::mismatch;
}

TableReport build_table(Catalog& cat, int n_max) {
  if (n_max < 1) throw std::domain_error("table: need n_max >= 1");
  TableReport rep;
  rep.n_max = n_max;
  for (int r = 0; r < n_max; ++r) {
    for (int n = r + 1; n <= n_max; ++n) {
      TableCell cell;
      cell.n = n;
      cell.r = r;
      cell.entry = cat.connected_covering_number(n, r);
      cell.reference = reference_cell(n, r);
      cell.match = classify(cell.entry, cell.reference);
      switch (cell.match) {
        case Match::agree: ++rep.agree; break;
        case Match::within: ++rep.within; break;
        case Match::mismatch: ++rep.mismatch; break;
        case Match::none: ++rep.unmatched; break;
      }
      rep.cells.push_back(std::move(cell));
    }
  }
  return rep;
}

}  // namespace concov::table

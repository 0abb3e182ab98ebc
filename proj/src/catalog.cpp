#include "concov/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "concov/bounds.hpp"
#include "concov/design_io.hpp"
#include "concov/verify.hpp"

namespace concov {

namespace {

// Mutating view of an entry under construction.
struct EntryBuilder {
  CatalogEntry e;

  void raise_lower(const BigInt& v, const std::string& source) {
    if (v > e.lower) {
      e.lower = v;
      e.lower_source = source;
    }
  }

  void cut_upper(const BigInt& v, const std::string& source) {
    if (v < e.upper) {
      e.upper = v;
      e.upper_source = source;
    }
  }

  void set_exact(const BigInt& v, const std::string& source) {
    if (v < e.lower || v > e.upper) {
      throw std::logic_error("catalog: exact value contradicts existing bounds (" +
                             source + ")");
    }
    e.lower = v;
    e.upper = v;
    e.lower_source = source;
    e.upper_source = source;
  }

  CatalogEntry finish() const {
    if (e.lower > e.upper) {
      throw std::logic_error("catalog: lower bound exceeds upper bound");
    }
    return e;
  }
};

std::string witness_source(const WitnessRecord& w) {
  return "witness:" + w.file.filename().string();
}

}  // namespace

const std::vector<EmbeddedCoveringLower>& Catalog::embedded_lower_table() {
  static const std::vector<EmbeddedCoveringLower> table = {
      {11, 6, 5, 96},  {11, 7, 6, 84},  {12, 7, 6, 165}, {12, 8, 7, 126},
      {13, 8, 7, 269}, {13, 9, 8, 185}, {14, 9, 8, 419},
  };
  return table;
}

std::filesystem::path Catalog::default_witness_dir() {
  if (const char* env = std::getenv("CONCOV_WITNESS_DIR")) {
    return std::filesystem::path(env);
  }
  return std::filesystem::path("witnesses");
}

Catalog::Catalog(std::filesystem::path witness_dir) : witness_dir_(std::move(witness_dir)) {
  if (!std::filesystem::is_directory(witness_dir_)) return;

  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(witness_dir_)) {
    if (entry.is_regular_file() && entry.path().extension() == ".design") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  for (const auto& path : files) {
    const bool claims_connected = path.filename().string().rfind("cc_", 0) == 0;
    try {
      DesignFamily fam = load_design(path);
      if (!fam.is_covering_kind()) {
        load_warnings_.push_back(path.filename().string() + ": not a covering file");
        continue;
      }
      const VerifyReport report = verify_family(fam);
      if (!report.covers) {
        load_warnings_.push_back(path.filename().string() + ": fails the covering check");
        continue;
      }
      if (claims_connected && !report.connected) {
        load_warnings_.push_back(path.filename().string() +
                                 ": claims connectivity but is disconnected");
        continue;
      }
      witnesses_.push_back(
          {fam.cover_params(), claims_connected && report.connected, fam.size(), path});
    } catch (const std::exception& ex) {
      load_warnings_.push_back(path.filename().string() + ": " + ex.what());
    }
  }
}

CatalogEntry Catalog::covering_number(int n, int k, int r) {
  validate(CoverParams{n, k, r});
  const auto key = std::make_tuple(n, k, r);
  if (auto it = covering_memo_.find(key); it != covering_memo_.end()) return it->second;
  // Chains below recurse through this function; every reduction strictly
  // shrinks n, so the recursion bottoms out without revisiting this key.
  const CatalogEntry entry = compute_covering(n, k, r);
  covering_memo_[key] = entry;
  return entry;
}

CatalogEntry Catalog::compute_covering(int n, int k, int r) {
  EntryBuilder b;
  b.e.lower = 1;
  b.e.lower_source = "any covering is nonempty";
  b.e.upper = binom(n, k);
  b.e.upper_source = "all blocks";

  b.raise_lower(bounds::covering_lower_schoenheim(n, k, r), "element-average recursion");
  if (r >= 1 && k >= 1 && k < n) {
    // Same averaging step, but seeded with the best lower this catalog knows
    // for the smaller instance instead of the bare recursion.
    const CatalogEntry sub = covering_number(n - 1, k - 1, r - 1);
    b.raise_lower(ceil_div(BigInt(n) * sub.lower, BigInt(k)), "element-average step");
  }
  if (k == r + 1 && r >= 1 && n >= r + 2) {
    b.raise_lower(bounds::density_lower(n, r).rounded_up, "density bound");
  }
  for (const auto& row : embedded_lower_table()) {
    if (row.n == n && row.k == k && row.r == r) {
      b.raise_lower(BigInt(row.value), "published lower bound");
    }
  }

  // Settled parameter families.
  if (r == 0) b.set_exact(1, "single block");
  if (k == n) b.set_exact(1, "whole ground set");
  if (k == r && r >= 1) b.set_exact(binom(n, r), "every r-set needed");
  if (k == 2 && r == 1) b.set_exact(bounds::pair_cover_exact(n), "matching formula");
  if (k == 3 && r == 2) b.set_exact(bounds::triple_cover_exact(n), "triple covering formula");
  if (k == n - 1 && r == n - 2 && n >= 2) b.set_exact(n - 1, "point complements");
  if (k == n - 2 && r == n - 3 && n >= 3) {
    b.set_exact(binom((n + 1) / 2, 2) + binom(n / 2, 2), "two-clique dual");
  }
  if (k == n - 3 && r == n - 4 && n >= 5 && n <= 13) {
    b.set_exact(bounds::kostochka_formula(n), "settled triple-system optimum");
  }

  if (k == r + 1 && r >= 1) {
    b.cut_upper(bounds::deletion_upper(n, r), "two-point deletion");
    b.cut_upper(bounds::star_chain_size(n, r), "nested stars");
    if (r >= 2 && n >= r + 2) {
      const CatalogEntry sub = covering_number(n - 2, r - 1, r - 2);
      b.cut_upper(bounds::layered_size(n, r, sub.upper), "layered construction");
    }
  }
  if (k < n && r >= 1) {
    // Split on the top point: blocks through it come from an
    // (n-1, k-1, r-1)-covering widened by n, the rest from an
    // (n-1, k, r)-covering.
    const CatalogEntry shrunk = covering_number(n - 1, k, r);
    const CatalogEntry widened = covering_number(n - 1, k - 1, r - 1);
    b.cut_upper(shrunk.upper + widened.upper, "one-point split");
  }

  for (const auto& w : witnesses_) {
    if (w.params == CoverParams{n, k, r}) {
      b.cut_upper(BigInt(static_cast<long>(w.size)), witness_source(w));
    }
  }
  return b.finish();
}

CatalogEntry Catalog::turan_number(int n, int m, int p) {
  validate(TuranParams{n, m, p});
  return covering_number(n, n - p, n - m);
}

CatalogEntry Catalog::connected_covering_number(int n, int r) {
  validate(CoverParams{n, r + 1, r});
  const auto key = std::make_pair(n, r);
  if (auto it = connected_memo_.find(key); it != connected_memo_.end()) return it->second;
  const CatalogEntry entry = compute_connected(n, r);
  connected_memo_[key] = entry;
  return entry;
}

CatalogEntry Catalog::compute_connected(int n, int r) {
  EntryBuilder b;
  b.e.lower = 1;
  b.e.lower_source = "any covering is nonempty";
  b.e.upper = binom(n, r + 1);
  b.e.upper_source = "all blocks";

  const CatalogEntry plain = covering_number(n, r + 1, r);
  b.raise_lower(plain.lower, "plain covering bound (" + plain.lower_source + ")");
  if (r >= 1) b.raise_lower(bounds::counting_lower(n, r).rounded_up, "counting bound");
  if (r >= 1 && n >= r + 2) {
    b.raise_lower(bounds::density_lower(n, r).rounded_up, "density bound");
  }

  if (r == 0) b.set_exact(1, "single block");
  if (r == n - 1) b.set_exact(1, "whole ground set");
  if (r == 1 && n >= 2) b.set_exact(n - 1, "spanning path");
  if (r == n - 2 && n >= 2) b.set_exact(n - 1, "point complements");
  if (r == 2 && n >= 3) {
    b.set_exact(ceil_div(binom(n, 2) - 1, 2), "triangle chain");
  }
  if (r == n - 3 && n >= 4) b.set_exact(bounds::mantel_exact(n), "two-clique dual plus bridge");
  if (r == n - 4 && n >= 5 && n <= 13) {
    const bounds::IntRange range = bounds::kostochka_range(n);
    if (range.lo == range.hi) {
      b.set_exact(range.lo, "triple-system construction");
    } else {
      b.raise_lower(range.lo, "unconnected triple-system optimum");
      b.cut_upper(range.hi, "triple-system construction");
    }
  }
  if (r == 3 && n >= 6 && n <= 12) {
    b.set_exact(bounds::counting_lower(n, r).rounded_up, "counting bound met by witness");
  }

  if (r >= 1) b.cut_upper(bounds::star_chain_size(n, r), "nested stars");
  if (r >= 2 && n >= r + 2) {
    const CatalogEntry sub = covering_number(n - 2, r - 1, r - 2);
    b.cut_upper(bounds::layered_size(n, r, sub.upper), "layered construction");
  }
  b.cut_upper(bounds::doubling_upper(plain.upper), "chained duplicates");
  if (r == n - 4 && n >= 14) {
    // Below n = 14 the enclosure above already carries the construction.
    b.cut_upper(bounds::kostochka_formula(n), "triple-system construction");
  }
  if (r >= 1 && n >= r + 2) {
    const CatalogEntry prev = connected_covering_number(n - 1, r);
    const CatalogEntry widened = covering_number(n - 1, r, r - 1);
    b.cut_upper(prev.upper + widened.upper, "one-point extension");
  }

  for (const auto& w : witnesses_) {
    if (w.connected && w.params == CoverParams{n, r + 1, r}) {
      b.cut_upper(BigInt(static_cast<long>(w.size)), witness_source(w));
    }
  }
  return b.finish();
}

CatalogEntry Catalog::register_witness(const DesignFamily& fam, bool connected_required) {
  if (!fam.is_covering_kind()) {
    throw std::domain_error("register_witness: only covering families are stored");
  }
  const VerifyReport report = verify_family(fam);
  if (!report.covers) {
    throw std::domain_error("register_witness: family fails the covering check");
  }
  if (connected_required && !report.connected) {
    throw std::domain_error("register_witness: family is disconnected");
  }

  const CoverParams p = fam.cover_params();
  const std::string name = std::string(connected_required ? "cc" : "c") + "_n" +
                           std::to_string(p.n) + "_k" + std::to_string(p.k) + "_r" +
                           std::to_string(p.r) + ".design";
  const std::filesystem::path path = witness_dir_ / name;

  // Keep the best witness per (params, connectivity) slot, on disk and in
  // memory.
  bool improves_disk = true;
  for (const auto& w : witnesses_) {
    if (w.params == p && w.connected == connected_required && w.file == path &&
        w.size <= fam.size()) {
      improves_disk = false;
    }
  }
  if (improves_disk) {
    std::filesystem::create_directories(witness_dir_);
    save_design(path, fam);
  }

  bool replaced = false;
  for (auto& w : witnesses_) {
    if (w.params == p && w.connected == connected_required && w.file == path) {
      if (fam.size() < w.size) w.size = fam.size();
      replaced = true;
    }
  }
  if (!replaced) {
    witnesses_.push_back({p, connected_required, fam.size(), path});
  }

  // Entries derived before this witness existed may now be stale.
  covering_memo_.clear();
  connected_memo_.clear();
  return connected_required && p.k == p.r + 1 ? connected_covering_number(p.n, p.r)
                                              : covering_number(p.n, p.k, p.r);
}

}  // namespace concov

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "concov/design.hpp"

namespace concov {

// Best-known enclosure of a covering number, with a word on where each side
// comes from.  lower == upper means the value is settled.
struct CatalogEntry {
  BigInt lower;
  BigInt upper;
  std::string lower_source;
  std::string upper_source;

  bool exact() const { return lower == upper; }
};

// Published lower bounds on plain covering numbers that no formula here
// reproduces.
struct EmbeddedCoveringLower {
  int n;
  int k;
  int r;
  long value;
};

// A design file accepted into the store.  `connected` records whether the
// file claimed (and verification confirmed) block-graph connectivity.
struct WitnessRecord {
  CoverParams params;
  bool connected = false;
  std::size_t size = 0;
  std::filesystem::path file;
};

// Answers "what is known about C(n, k, r) / CC(n, r)?" by combining closed
// forms, bound formulas, chain constructions, and stored witness files.
// Witness files are re-verified when loaded; files that fail stay out of the
// store and leave a note in load_warnings().
class Catalog {
 public:
  // Reads every *.design file under witness_dir (if it exists).  Files named
  // cc_* claim connectivity and are verified for it; all others count as
  // plain covering evidence.
  explicit Catalog(std::filesystem::path witness_dir = default_witness_dir());

  // $CONCOV_WITNESS_DIR when set, otherwise ./witnesses.
  static std::filesystem::path default_witness_dir();

  CatalogEntry covering_number(int n, int k, int r);
  CatalogEntry turan_number(int n, int m, int p);
  // Connected covering numbers always refer to block size r + 1.
  CatalogEntry connected_covering_number(int n, int r);

  // Verifies the family (connectivity included when connected_required),
  // adds it to the store, persists it under witness_dir when it beats the
  // file already there, and returns the refreshed entry.  Throws
  // std::domain_error on verification failure, leaving all state unchanged.
  CatalogEntry register_witness(const DesignFamily& fam, bool connected_required);

  const std::vector<WitnessRecord>& witnesses() const { return witnesses_; }
  const std::vector<std::string>& load_warnings() const { return load_warnings_; }
  const std::filesystem::path& witness_dir() const { return witness_dir_; }

  static const std::vector<EmbeddedCoveringLower>& embedded_lower_table();

 private:
  CatalogEntry compute_covering(int n, int k, int r);
  CatalogEntry compute_connected(int n, int r);

  std::filesystem::path witness_dir_;
  std::vector<WitnessRecord> witnesses_;
  std::vector<std::string> load_warnings_;
  std::map<std::tuple<int, int, int>, CatalogEntry> covering_memo_;
  std::map<std::pair<int, int>, CatalogEntry> connected_memo_;
};

}  // namespace concov

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "concov/combinatorics.hpp"

namespace concov {

// A block over the ground set [1, n], n <= 64, stored as a bit mask with
// element e at bit e-1.
struct Block {
  std::uint64_t bits = 0;

  static Block of(const std::vector<int>& elements) { return Block{mask_of(elements)}; }
  static Block full(int n) {
    return Block{n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  int size() const { return __builtin_popcountll(bits); }
  bool contains(int e) const { return (bits >> (e - 1)) & 1u; }
  bool subset_of(const Block& other) const { return (bits & other.bits) == bits; }
  int intersect_size(const Block& other) const {
    return __builtin_popcountll(bits & other.bits);
  }
  Block complement(int n) const { return Block{full(n).bits & ~bits}; }
  std::vector<int> elements() const { return elements_of(bits); }

  friend bool operator==(const Block&, const Block&) = default;
};

// Lexicographic order on the ascending element sequences.  For equal-size
// blocks this sorts {1,2,5} before {1,3,4}; numeric mask order would not,
// since the mask of {1,3,4} is smaller.  The lowest differing element decides.
bool lex_less(const Block& a, const Block& b);

// Size-then-lex order used for canonical family serialization.
bool size_lex_less(const Block& a, const Block& b);

std::string to_string(const Block& b);

// Parameters of an (n, k, r)-covering: every r-subset of [1, n] lies in some
// block, all blocks have k elements.
struct CoverParams {
  int n = 0;
  int k = 0;
  int r = 0;

  friend bool operator==(const CoverParams&, const CoverParams&) = default;
};

// Parameters of an (n, m, p)-system in the complementary sense: every
// m-subset of [1, n] contains some block, all blocks have p elements.
struct TuranParams {
  int n = 0;
  int m = 0;
  int p = 0;

  friend bool operator==(const TuranParams&, const TuranParams&) = default;
};

// Throws std::domain_error when the parameters are outside the supported
// range (1 <= n <= 64, 0 <= r <= k <= n, respectively 1 <= p <= m <= n).
void validate(const CoverParams& p);
void validate(const TuranParams& p);

// A finite family of same-size blocks with fixed parameters.  Blocks are
// deduplicated and kept sorted by lex_less, so two families with equal block
// sets compare equal and serialize identically.
class DesignFamily {
 public:
  using Params = std::variant<CoverParams, TuranParams>;

  DesignFamily(CoverParams params, std::vector<Block> blocks);
  DesignFamily(TuranParams params, std::vector<Block> blocks);

  const Params& params() const { return params_; }
  bool is_covering_kind() const { return std::holds_alternative<CoverParams>(params_); }
  const CoverParams& cover_params() const { return std::get<CoverParams>(params_); }
  const TuranParams& turan_params() const { return std::get<TuranParams>(params_); }

  int ground_size() const;
  int block_size() const;  // k for coverings, p for the complementary kind
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }

  friend bool operator==(const DesignFamily&, const DesignFamily&) = default;

 private:
  void normalize();

  Params params_;
  std::vector<Block> blocks_;
};

// The complementary family: each block is replaced by its complement in
// [1, n].  Parameters map (n, k, r) <-> (n, n-r, n-k): applied twice this is
// the identity.
DesignFamily dualize(const DesignFamily& fam);

}  // namespace concov

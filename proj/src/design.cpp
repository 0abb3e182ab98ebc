#include "concov/design.hpp"

#include <algorithm>
#include <stdexcept>

namespace concov {

bool lex_less(const Block& a, const Block& b) {
  const std::uint64_t diff = a.bits ^ b.bits;
  if (diff == 0) return false;
  const std::uint64_t low = diff & (~diff + 1);
  // The smallest element present in exactly one block decides: if it belongs
  // to a, then a's sequence is lexicographically smaller at that position
  // (when sizes are equal) or a is a strict prefix continuation; for the
  // same-size blocks this library sorts, the rule is exactly sequence order.
  if (low & a.bits) return true;
  // Element belongs to b only; handle the proper-prefix case a subset of b.
  return false;
}

bool size_lex_less(const Block& a, const Block& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

std::string to_string(const Block& b) {
  std::string out = "{";
  bool first = true;
  for (int e : b.elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  out += "}";
  return out;
}

void validate(const CoverParams& p) {
  if (p.n < 1 || p.n > 64) throw std::domain_error("covering: n must be in [1, 64]");
  if (p.r < 0 || p.r > p.k || p.k > p.n) {
    throw std::domain_error("covering: need 0 <= r <= k <= n");
  }
}

void validate(const TuranParams& p) {
  if (p.n < 1 || p.n > 64) throw std::domain_error("turan: n must be in [1, 64]");
  if (p.p < 1 || p.p > p.m || p.m > p.n) {
    throw std::domain_error("turan: need 1 <= p <= m <= n");
  }
}

DesignFamily::DesignFamily(CoverParams params, std::vector<Block> blocks)
    : params_(params), blocks_(std::move(blocks)) {
  validate(params);
  for (const Block& b : blocks_) {
    if (b.size() != params.k) {
      throw std::domain_error("covering: block size differs from k");
    }
    if (!b.subset_of(Block::full(params.n))) {
      throw std::domain_error("covering: block leaves the ground set");
    }
  }
  normalize();
}

DesignFamily::DesignFamily(TuranParams params, std::vector<Block> blocks)
    : params_(params), blocks_(std::move(blocks)) {
  validate(params);
  for (const Block& b : blocks_) {
    if (b.size() != params.p) {
      throw std::domain_error("turan: block size differs from p");
    }
    if (!b.subset_of(Block::full(params.n))) {
      throw std::domain_error("turan: block leaves the ground set");
    }
  }
  normalize();
}

void DesignFamily::normalize() {
  std::sort(blocks_.begin(), blocks_.end(), lex_less);
  blocks_.erase(std::unique(blocks_.begin(), blocks_.end()), blocks_.end());
}

int DesignFamily::ground_size() const {
  return is_covering_kind() ? cover_params().n : turan_params().n;
}

int DesignFamily::block_size() const {
  return is_covering_kind() ? cover_params().k : turan_params().p;
}

DesignFamily dualize(const DesignFamily& fam) {
  const int n = fam.ground_size();
  std::vector<Block> comp;
  comp.reserve(fam.size());
  for (const Block& b : fam.blocks()) comp.push_back(b.complement(n));
  if (fam.is_covering_kind()) {
    const CoverParams& c = fam.cover_params();
    return DesignFamily(TuranParams{c.n, c.n - c.r, c.n - c.k}, std::move(comp));
  }
  const TuranParams& t = fam.turan_params();
  return DesignFamily(CoverParams{t.n, t.n - t.p, t.n - t.m}, std::move(comp));
}

}  // namespace concov

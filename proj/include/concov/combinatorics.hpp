#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace concov {

using BigInt = mpz_class;
using Rational = mpq_class;

// binom(n, k) with the extended convention binom(n, k) = 0 whenever k < 0,
// n < 0, or k > n.  Exact at every size; no overflow regime exists.
BigInt binom(long n, long k);

// binom for small arguments where the result is known to fit in 64 bits.
// Throws std::overflow_error otherwise, so callers cannot silently truncate.
std::uint64_t binom_u64(int n, int k);

// ceil(a / b) for exact integers, b > 0.
BigInt ceil_div(const BigInt& a, const BigInt& b);
long long ceil_div_ll(long long a, long long b);

// ceil(q) for an exact rational.
BigInt ceil_rat(const Rational& q);

// Cached Pascal triangle over rows 0..cap.  Immutable after construction and
// safe to share across threads.  Row width is validated on access, never
// silently clamped.
class BinomialTable {
 public:
  explicit BinomialTable(int cap);

  const BigInt& at(int n, int k) const;  // requires 0 <= k <= n <= cap()
  int cap() const { return cap_; }

 private:
  int cap_;
  std::vector<std::vector<BigInt>> rows_;
};

// ---- subset utilities ----------------------------------------------------
//
// Combinations are ascending element vectors over the ground set [1, n].
// Iteration order is lexicographic on those vectors, which is the order every
// "first violation" witness in this library refers to.

// Advances c to the next r-combination of [1, n] in lexicographic order.
// c must currently hold a valid combination; returns false and leaves c
// unchanged when c was already the last one.  The empty combination (r = 0)
// has no successor.
bool next_combination(std::vector<int>& c, int n);

// First r-combination {1, 2, ..., r}.
std::vector<int> first_combination(int r);

std::uint64_t mask_of(const std::vector<int>& elements);
std::vector<int> elements_of(std::uint64_t mask);

// Colexicographic rank of an ascending combination, bijective onto
// [0, binom(n, |c|)) for combinations over [1, n].  Used to index bitmaps
// over all r-subsets.
std::size_t colex_rank(const std::vector<int>& c, const BinomialTable& tab);

}  // namespace concov

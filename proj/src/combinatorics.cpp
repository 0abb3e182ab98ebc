#include "concov/combinatorics.hpp"

#include <limits>
#include <stdexcept>

namespace concov {

BigInt binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

std::uint64_t binom_u64(int n, int k) {
  BigInt b = binom(n, k);
  if (!b.fits_ulong_p() && sizeof(unsigned long) >= 8) {
    throw std::overflow_error("binom_u64: value exceeds 64 bits");
  }
  // On LP64 targets unsigned long is 64-bit, so fits_ulong_p is the whole
  // check.  Guard the exotic case anyway.
  if (mpz_sizeinbase(b.get_mpz_t(), 2) > 64) {
    throw std::overflow_error("binom_u64: value exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(b.get_ui());
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  if (b <= 0) throw std::domain_error("ceil_div: divisor must be positive");
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

long long ceil_div_ll(long long a, long long b) {
  if (b <= 0) throw std::domain_error("ceil_div_ll: divisor must be positive");
  long long q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

BigInt ceil_rat(const Rational& q) {
  return ceil_div(BigInt(q.get_num()), BigInt(q.get_den()));
}

BinomialTable::BinomialTable(int cap) : cap_(cap) {
  if (cap < 0) throw std::domain_error("BinomialTable: cap must be >= 0");
  rows_.resize(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    auto& row = rows_[static_cast<std::size_t>(n)];
    row.resize(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    row[static_cast<std::size_t>(n)] = 1;
    for (int k = 1; k < n; ++k) {
      const auto& prev = rows_[static_cast<std::size_t>(n) - 1];
      row[static_cast<std::size_t>(k)] = prev[static_cast<std::size_t>(k) - 1] +
                                         prev[static_cast<std::size_t>(k)];
    }
  }
}

const BigInt& BinomialTable::at(int n, int k) const {
  if (n < 0 || n > cap_ || k < 0 || k > n) {
    throw std::out_of_range("BinomialTable::at: (n, k) outside triangle");
  }
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

bool next_combination(std::vector<int>& c, int n) {
  const int r = static_cast<int>(c.size());
  if (r == 0) return false;
  int i = r - 1;
  // c[i] may rise to n - (r - 1 - i); find the rightmost slot not yet maxed.
  while (i >= 0 && c[static_cast<std::size_t>(i)] == n - (r - 1 - i)) --i;
  if (i < 0) return false;
  ++c[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < r; ++j) {
    c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return true;
}

std::vector<int> first_combination(int r) {
  std::vector<int> c(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) c[static_cast<std::size_t>(i)] = i + 1;
  return c;
}

std::uint64_t mask_of(const std::vector<int>& elements) {
  std::uint64_t m = 0;
  for (int e : elements) {
    if (e < 1 || e > 64) throw std::domain_error("mask_of: element outside [1, 64]");
    m |= std::uint64_t{1} << (e - 1);
  }
  return m;
}

std::vector<int> elements_of(std::uint64_t mask) {
  std::vector<int> out;
  while (mask != 0) {
    const int bit = __builtin_ctzll(mask);
    out.push_back(bit + 1);
    mask &= mask - 1;
  }
  return out;
}

std::size_t colex_rank(const std::vector<int>& c, const BinomialTable& tab) {
  // rank = sum_i binom(c[i] - 1, i + 1) over ascending c (1-based elements).
  BigInt rank = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int e = c[i] - 1;
    const int k = static_cast<int>(i) + 1;
    if (e >= k) rank += tab.at(e, k);
  }
  if (!rank.fits_ulong_p()) {
    throw std::overflow_error("colex_rank: rank exceeds machine word");
  }
  return static_cast<std::size_t>(rank.get_ui());
}

}  // namespace concov

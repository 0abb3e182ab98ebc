#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "concov/combinatorics.hpp"

using namespace concov;

namespace {

// Independent Pascal triangle, additive only.
std::vector<std::vector<BigInt>> pascal(int rows) {
  std::vector<std::vector<BigInt>> t(rows + 1);
  for (int n = 0; n <= rows; ++n) {
    t[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

}  // namespace

TEST_CASE("binom matches an additive Pascal triangle") {
  const auto t = pascal(40);
  for (int n = 0; n <= 40; ++n) {
    for (int k = 0; k <= n; ++k) {
      CAPTURE(n, k);
      REQUIRE(binom(n, k) == t[n][k]);
    }
  }
}

TEST_CASE("binom edge conventions") {
  REQUIRE(binom(7, 3) == 35);
  REQUIRE(binom(14, 7) == 3432);
  REQUIRE(binom(4, -1) == 0);
  REQUIRE(binom(-2, 0) == 0);
  REQUIRE(binom(3, 5) == 0);
  REQUIRE(binom(0, 0) == 1);
}

TEST_CASE("binom_u64 agrees where it fits and refuses where it does not") {
  REQUIRE(binom_u64(30, 15) == 155117520u);
  REQUIRE(binom_u64(64, 32) == 1832624140942590534ull);
  REQUIRE_THROWS_AS(binom_u64(70, 35), std::overflow_error);
}

TEST_CASE("ceiling division") {
  REQUIRE(ceil_div(BigInt(7), BigInt(3)) == 3);
  REQUIRE(ceil_div(BigInt(6), BigInt(3)) == 2);
  REQUIRE_THROWS_AS(ceil_div(BigInt(1), BigInt(0)), std::domain_error);
  REQUIRE(ceil_div_ll(34, 3) == 12);
  REQUIRE(ceil_div_ll(9, 3) == 3);
  REQUIRE(ceil_rat(Rational(35, 4)) == 9);
  REQUIRE(ceil_rat(Rational(36, 4)) == 9);
}

TEST_CASE("BinomialTable mirrors binom and validates its range") {
  const BinomialTable tab(20);
  for (int n = 0; n <= 20; ++n) {
    for (int k = 0; k <= n; ++k) REQUIRE(tab.at(n, k) == binom(n, k));
  }
  REQUIRE_THROWS_AS(tab.at(21, 1), std::out_of_range);
  REQUIRE_THROWS_AS(tab.at(5, 6), std::out_of_range);
}

TEST_CASE("next_combination walks all combinations in lexicographic order") {
  std::vector<int> c = first_combination(3);
  REQUIRE(c == std::vector<int>{1, 2, 3});
  std::vector<std::vector<int>> seen{c};
  while (next_combination(c, 5)) seen.push_back(c);
  REQUIRE(seen.size() == 10);
  REQUIRE(std::is_sorted(seen.begin(), seen.end()));  // vector lex order
  REQUIRE(seen.back() == std::vector<int>{3, 4, 5});
  // Exhausted position is left untouched.
  REQUIRE(c == std::vector<int>{3, 4, 5});
}

TEST_CASE("colex_rank is the inverse of colex enumeration") {
  const BinomialTable tab(12);
  // Ranks over all 3-subsets of [6] form exactly 0..19, and sorting by rank
  // equals sorting by the reversed-tuple comparison that defines colex.
  std::vector<std::vector<int>> combos;
  std::vector<int> c = first_combination(3);
  do {
    combos.push_back(c);
  } while (next_combination(c, 6));

  std::vector<std::size_t> ranks;
  for (const auto& combo : combos) ranks.push_back(colex_rank(combo, tab));
  std::vector<std::size_t> sorted_ranks = ranks;
  std::sort(sorted_ranks.begin(), sorted_ranks.end());
  for (std::size_t i = 0; i < sorted_ranks.size(); ++i) REQUIRE(sorted_ranks[i] == i);

  auto colex_less = [](const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  };
  for (std::size_t i = 0; i < combos.size(); ++i) {
    for (std::size_t j = 0; j < combos.size(); ++j) {
      if (colex_less(combos[i], combos[j])) REQUIRE(ranks[i] < ranks[j]);
    }
  }

  REQUIRE(colex_rank({1, 2, 3}, tab) == 0);
  REQUIRE(colex_rank({2, 3, 4}, tab) == 3);
}

TEST_CASE("mask round trip") {
  const std::vector<int> elems{1, 5, 9, 64};
  REQUIRE(elements_of(mask_of(elems)) == elems);
  REQUIRE(mask_of({}) == 0u);
  REQUIRE(elements_of(0u).empty());
}

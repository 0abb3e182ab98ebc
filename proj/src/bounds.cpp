#include "concov/bounds.hpp"

#include <stdexcept>

namespace concov {
namespace bounds {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

}  // namespace

RationalBound counting_lower(int n, int r) {
  require(r >= 1 && n >= r + 1, "counting_lower: need 1 <= r < n");
  Rational exact(binom(n, r) - 1, r);
  exact.canonicalize();
  return {exact, ceil_rat(exact)};
}

RationalBound density_lower(int n, int r) {
  require(r >= 1 && n >= r + 2, "density_lower: need 1 <= r <= n - 2");
  Rational exact(BigInt(r + 1) * binom(n, r + 1),
                 BigInt(r + 2) * BigInt(n - r - 1));
  exact.canonicalize();
  return {exact, ceil_rat(exact)};
}

BigInt connected_lower(int n, int r) {
  require(r >= 1 && n >= r + 1, "connected_lower: need 1 <= r < n");
  BigInt best = counting_lower(n, r).rounded_up;
  if (n >= r + 2) {
    BigInt d = density_lower(n, r).rounded_up;
    if (d > best) best = d;
  }
  return best;
}

bool density_beats_counting(int n, int r) {
  return density_lower(n, r).exact > counting_lower(n, r).exact;
}

bool density_dominance_criterion(int n, int r) {
  require(r >= 1 && n >= r + 2, "density_dominance_criterion: need 1 <= r <= n - 2");
  return 3 * r >= 2 * (n - 1);
}

BigInt schoenheim_step(int n, int r, const BigInt& smaller) {
  return ceil_div(BigInt(n) * smaller, BigInt(r + 1));
}

BigInt schoenheim_lower(int n, int r) {
  require(r >= 1 && n >= r + 1, "schoenheim_lower: need 1 <= r < n");
  // Climb from pair coverings on n - r + 1 points, adding one point and one
  // block element per step.
  BigInt acc = ceil_div(BigInt(n - r + 1), BigInt(2));
  for (int i = 2; i <= r; ++i) {
    acc = ceil_div(BigInt(n - r + i) * acc, BigInt(i + 1));
  }
  return acc;
}

BigInt covering_lower_schoenheim(int n, int k, int r) {
  require(0 <= r && r <= k && k <= n, "covering_lower_schoenheim: need 0 <= r <= k <= n");
  if (r == 0) return 1;
  return ceil_div(BigInt(n) * covering_lower_schoenheim(n - 1, k - 1, r - 1), BigInt(k));
}

BigInt star_chain_size(int n, int r) {
  require(r >= 1 && n >= r + 1, "star_chain_size: need 1 <= r < n");
  BigInt total = (n - r) / 2;  // connector blocks
  const int layers = (n - r + 1) / 2;
  for (int i = 1; i <= layers; ++i) {
    total += binom(n - 2 * i, r - 1);
  }
  return total;
}

BigInt layered_size(int n, int r, const BigInt& sub_size) {
  require(r >= 2 && n >= r + 1, "layered_size: need 2 <= r < n");
  const int gap = n - r;
  const int layers = (gap + 1) / 2;  // ceil(gap / 2)
  BigInt total = layers - 1;         // connector blocks
  for (int i = 0; i < layers; ++i) {
    total += BigInt(gap - 2 * i) * binom(r - 2 + 2 * i, r - 2);
  }
  if (gap % 2 == 0) total += sub_size;
  return total;
}

BigInt star_layer_gap(int n, int r) {
  require(r >= 2 && n >= r + 1, "star_layer_gap: need 2 <= r < n");
  const int half = (n - r) / 2;
  BigInt total = 0;
  for (int i = 0; i < half; ++i) {
    total += BigInt(half - i) * binom(r - 2 + 2 * i, r - 3);
  }
  return total;
}

bool star_layer_identity(int n, int r, const BigInt& sub_size) {
  BigInt rhs = layered_size(n, r, sub_size) + star_layer_gap(n, r);
  if ((n - r) % 2 == 0) rhs += 1 - sub_size;
  return star_chain_size(n, r) == rhs;
}

DominanceCheck star_vs_layered(int n, int r, const BigInt& sub_size) {
  require(r >= 2 && n >= r + 2 && (n - r) % 2 == 0,
          "star_vs_layered: need 2 <= r, n - r even and positive");
  const int half = (n - r) / 2;
  DominanceCheck out;
  out.margin = 0;
  for (int i = 0; i + 1 < half; ++i) {
    out.margin += BigInt(half - 1 - i) * binom(r - 2 + 2 * i, r - 3);
  }
  out.sub_limit = 1;
  for (int i = 0; i < half; ++i) {
    out.sub_limit += binom(r - 2 + 2 * i, r - 3);
  }
  out.holds = star_chain_size(n, r) >= layered_size(n, r, sub_size) + out.margin;
  out.criterion = sub_size <= out.sub_limit;
  return out;
}

BigInt doubling_upper(const BigInt& covering_number) {
  return 2 * covering_number - 1;
}

BigInt mantel_exact(int n) {
  require(n >= 4, "mantel_exact: need n >= 4");
  return binom((n + 1) / 2, 2) + binom(n / 2, 2) + 1;
}

BigInt kostochka_formula(int n) {
  require(n >= 5, "kostochka_formula: need n >= 5");
  const BigInt m = n / 3;
  switch (n % 3) {
    case 0:
      return m * (m - 1) * (2 * m - 1);
    case 1:
      return m * m * (2 * m - 1);
    default:
      return m * m * (2 * m + 1);
  }
}

IntRange kostochka_range(int n) {
  require(n >= 5 && n <= 13, "kostochka_range: enclosure known only for 5 <= n <= 13");
  const BigInt base = kostochka_formula(n);
  if (n == 5 || n == 6 || n == 9) return {base + 1, base + 1};
  if (n == 8) return {base, base + 1};
  return {base, base};
}

BigInt triple_cover_exact(int n) {
  require(n >= 3, "triple_cover_exact: need n >= 3");
  const BigInt inner = ceil_div(BigInt(n - 1), BigInt(2));
  return ceil_div(BigInt(n) * inner, BigInt(3));
}

BigInt pair_cover_exact(int n) {
  require(n >= 2, "pair_cover_exact: need n >= 2");
  return ceil_div(BigInt(n), BigInt(2));
}

BigInt deletion_step_upper(int n, int r, const BigInt& smaller) {
  return binom(n - 2, r - 1) + smaller;
}

BigInt deletion_upper(int n, int r) {
  require(r >= 1 && n >= r + 1, "deletion_upper: need 1 <= r < n");
  if (n == r + 1) return 1;
  if (n == r + 2) return r + 1;
  return deletion_step_upper(n, r, deletion_upper(n - 2, r));
}

BigInt stacked_upper(int n, int r, const std::vector<BigInt>& plain_costs) {
  require(r >= 1 && n >= r + 1, "stacked_upper: need 1 <= r < n");
  if (plain_costs.size() != static_cast<std::size_t>(n - r - 1)) {
    throw std::domain_error("stacked_upper: expected n - r - 1 cost values");
  }
  BigInt total = 1;
  for (const BigInt& c : plain_costs) {
    require(c >= 1, "stacked_upper: covering sizes are positive");
    total += c;
  }
  return total;
}

CoverageRatios coverage_ratios(int n, int r, const BigInt& lower, const BigInt& upper) {
  require(r >= 1 && n >= r + 1, "coverage_ratios: need 1 <= r < n");
  const Rational total(binom(n, r));
  CoverageRatios out;
  out.lower_over_total = Rational(lower) / total;
  out.upper_over_total = Rational(upper) / total;
  out.star_over_total = Rational(star_chain_size(n, r)) / total;
  out.lower_over_total.canonicalize();
  out.upper_over_total.canonicalize();
  out.star_over_total.canonicalize();
  return out;
}

}  // namespace bounds
}  // namespace concov

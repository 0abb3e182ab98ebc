#pragma once

#include <vector>

#include "concov/combinatorics.hpp"

namespace concov {
namespace bounds {

// Lower bounds on the minimum size of a connected covering with block size
// r+1, ground set [1, n].  Both keep the exact rational alongside the
// integer ceiling so callers can compare the unrounded quantities.
struct RationalBound {
  Rational exact;
  BigInt rounded_up;
};

// Counting bound: the first block covers r+1 of the binom(n, r) r-subsets and
// each later block, overlapping an earlier one in r elements, covers at most
// r new ones.  Requires r >= 1.
RationalBound counting_lower(int n, int r);

// Density bound from the average number of blocks an r-subset must meet,
// (r+1) * binom(n, r+1) / ((r+2) * (n-r-1)).  Requires r + 2 <= n.
RationalBound density_lower(int n, int r);

// max(counting, density) where each applies; requires r >= 1, n >= r + 1.
BigInt connected_lower(int n, int r);

// Exact-rational comparison density > counting.
bool density_beats_counting(int n, int r);

// Closed-form criterion equivalent to density_beats_counting on the domain
// 1 <= r, r + 2 <= n.
bool density_dominance_criterion(int n, int r);

// One step of the element-averaging recursion for coverings with block size
// r+1: a covering on n points contains one on n-1 points after deleting a
// point, giving C(n) >= ceil(n * C(n-1, block size r) / (r+1)).
BigInt schoenheim_step(int n, int r, const BigInt& smaller);

// The recursion iterated down to pair coverings: starts at
// ceil((n-r+1) / 2) and climbs back up to block size r+1.  Requires r >= 1.
BigInt schoenheim_lower(int n, int r);

// General form for (n, k, r)-coverings, recursing on r down to the trivial
// base of one block.
BigInt covering_lower_schoenheim(int n, int k, int r);

// ---- sizes of the two chain constructions --------------------------------

// Size of the nested-star chain covering: sum of binom(n-2i, r-1) over
// i = 1 .. floor((n-r+1)/2), plus floor((n-r)/2) connector blocks.
BigInt star_chain_size(int n, int r);

// Size of the layered covering.  sub_size is the size of the
// (n-2, r-1, r-2)-covering pasted into the final layer; it only contributes
// when n - r is even.
BigInt layered_size(int n, int r, const BigInt& sub_size);

// Difference star_chain_size - layered_size(sub = 0) - (1 if n - r even),
// expressed as the closed double sum; the identity below asserts it.
BigInt star_layer_gap(int n, int r);

// star == layered + gap + (n - r even ? 1 - sub_size : 0) for every
// sub_size; the sub_size contributions cancel.
bool star_layer_identity(int n, int r, const BigInt& sub_size);

// Comparison star >= layered + margin for even n - r, where margin drops the
// final-layer terms of the gap.  Holds exactly when sub_size stays within
// sub_limit, the value the two-point-deletion recursion gives the pasted
// covering.
struct DominanceCheck {
  bool holds = false;      // star >= layered + margin at this sub_size
  bool criterion = false;  // sub_size <= sub_limit
  BigInt sub_limit;
  BigInt margin;
};
DominanceCheck star_vs_layered(int n, int r, const BigInt& sub_size);

// ---- assorted exact values and upper bounds -------------------------------

// Connected covering from an unconnected one: string the blocks of an
// optimal covering together, at worst doubling all but one.
BigInt doubling_upper(const BigInt& covering_number);

// Exact minimum connected covering size at block size n-2 (complement side:
// triangle-free graphs): binom(ceil(n/2), 2) + binom(floor(n/2), 2) + 1.
// Requires n >= 4.
BigInt mantel_exact(int n);

struct IntRange {
  BigInt lo;
  BigInt hi;
};

// Enclosure of the minimum connected covering size at block size n-3.  The
// unconnected optima are only settled up to n = 13, so the range requires
// 5 <= n <= 13; it is tight except at n = 8, where lo = 20, hi = 21 is the
// best known.  Past n = 13 use kostochka_formula as an upper bound.
IntRange kostochka_range(int n);

// Piecewise base value behind kostochka_range, before the small-n
// adjustments: m(m-1)(2m-1), m^2(2m-1), m^2(2m+1) at n = 3m, 3m+1, 3m+2.
BigInt kostochka_formula(int n);

// Exact minimum size of an (n, 3, 2)-covering: ceil(n/3 * ceil((n-1)/2)).
BigInt triple_cover_exact(int n);

// Exact minimum size of an (n, 2, 1)-covering: ceil(n/2).
BigInt pair_cover_exact(int n);

// Two-point-deletion upper step for coverings with block size r+1:
// C(n) <= binom(n-2, r-1) + C(n-2).
BigInt deletion_step_upper(int n, int r, const BigInt& smaller);

// The step iterated down to a trivial base.  Requires 1 <= r < n.
BigInt deletion_upper(int n, int r);

// Upper bound from growing the ground set one point at a time: a connected
// covering on n points costs at most a connected covering on r+1 points (one
// block) plus, for each intermediate ground size i = r+1, ..., n-1, a
// covering with block size r on i points.  plain_costs[j] must hold that
// covering size for i = r+1+j; exactly n-r-1 values are expected.
BigInt stacked_upper(int n, int r, const std::vector<BigInt>& plain_costs);

// How bound values compare against the total number of r-subsets, as exact
// rationals.  Useful for eyeballing how tight a [lower, upper] pair is.
struct CoverageRatios {
  Rational lower_over_total;
  Rational upper_over_total;
  Rational star_over_total;  // star_chain_size(n, r) / binom(n, r)
};

CoverageRatios coverage_ratios(int n, int r, const BigInt& lower, const BigInt& upper);

}  // namespace bounds
}  // namespace concov

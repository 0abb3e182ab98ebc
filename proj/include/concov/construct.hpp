#pragma once

#include <array>
#include <optional>
#include <vector>

#include "concov/design.hpp"

namespace concov {
namespace construct {

// Connected coverings for the parameter corners where one family is forced:
// r = 0 (a single block), r = 1 (path edges), r = n-2 (all but one of the
// (n-1)-sets), r = n-1 (the full ground set).  Throws std::domain_error for
// any other r.
DesignFamily trivial_cases(int n, int r);

// Connected (n, 3, 2)-covering of size ceil((binom(n, 2) - 1) / 2), which is
// the exact minimum.  Needs n >= 3.  Every block after the first covers at
// most two new pairs, so the size matches the counting bound; the builder
// asserts this as it goes.
DesignFamily triangle_chain(int n);

// Connected (n, r+1, r)-covering built from layers of blocks that agree on a
// sliding pair, glued by one connector block per adjacent layer pair.  When
// n - r is even the last layer is an (n-2, r-1, r-2)-covering with the two
// top points appended; `sub` supplies it, or a default is built recursively.
// When n - r is odd `sub` is ignored.  Needs 2 <= r < n - 1.
DesignFamily layered_covering(int n, int r, const std::optional<DesignFamily>& sub = {});

// Smallest sub-covering the layered construction reaches on its own for the
// even-gap case; exposed so callers can compare against a better one.
DesignFamily layered_default_sub(int n, int r);

// Optimal connected covering at block size n-2: dual of the two-clique
// system whose blocks are the edges inside {1..ceil(n/2)}, the edges inside
// the rest, and the bridge {ceil(n/2), ceil(n/2)+1}.  Needs n >= 4.
DesignFamily two_clique_covering(int n);

// Minimum-or-best-known connected covering at block size n-3, built on the
// complementary side from triples and dualized.  For n >= 9 the size is
// m(m-1)(2m-1) / m^2(2m-1) / m^2(2m+1) at n = 3m / 3m+1 / 3m+2; for n = 8
// the best this construction gives is 21 blocks while the unconnected
// optimum is 20, so whether 21 is optimal stays open.
struct ThickSystem {
  DesignFamily triples;      // the (n, 4, 3)-system on the complementary side
  DesignFamily covering;     // its dual, a connected (n, n-3, n-4)-covering
  bool optimality_open = false;  // true only for n = 8
};

ThickSystem thick_triple_system(int n);

// The classical disconnected 30-block (9, 4, 3)-system (three element groups,
// triples inside each group plus group-to-next-group stars).  Kept as a
// counterpoint to the connected 31-block system; it is a valid system whose
// block graph has three components.
DesignFamily nine_point_loose_system();

// Ground-set extension: given a connected (n, r+1, r)-covering and any
// (n, r, r-1)-covering on the same ground set, appending n+1 to every block
// of the latter and taking the union is a connected (n+1, r+1, r)-covering.
// Both inputs are verified; the result is verified before it is returned.
DesignFamily extend_ground(const DesignFamily& connected_cover,
                           const DesignFamily& plain_smaller_cover);

// The fixed 19-triple pair covering of [1, 11] used by
// assemble_apex_extension.
const std::vector<std::array<int, 3>>& apex_triple_cover();

// Builds a connected (12, 4, 3)-covering with 73 blocks from a 55-block
// connected (11, 4, 3)-covering: drop one redundant block, then append the 19
// triples above with the new point 12 added to each.  Tries every block as
// the dropped one and returns the first variant that verifies; empty when
// none does (callers then fall back to search).
std::optional<DesignFamily> assemble_apex_extension(const DesignFamily& base);

}  // namespace construct
}  // namespace concov

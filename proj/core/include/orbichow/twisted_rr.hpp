#pragma once

// Riemann-Roch bookkeeping on a 3-pointed genus-0 twisted curve, modeled
// purely as data: an orbifold line-bundle degree plus the monodromy pair
// (k_i, r_i) at each of the three markings. This is exactly the case the
// integral product consumes; no general twisted-curve structure exists
// here.

#include "orbichow/action.hpp"
#include "orbichow/numeric.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace orbichow {

struct TwistedLineBundle {
  Rational orb_degree = 0;
  std::array<EigenPair, 3> monodromies{};
};

/// Degree of the coarse pushforward: orb_degree - sum k_i/r_i. Throws
/// NonIntegralDegree when that difference is not an integer (the
/// monodromy data is inconsistent), and InputError when a monodromy pair
/// violates 0 <= k < r.
Int pushforward_degree(const TwistedLineBundle& bundle);

struct CoarseCohomology {
  Int h0;
  Int h1;
};

/// h^0, h^1 of O(d) on the coarse genus-0 curve: (max(0,d+1), max(0,-d-1)).
CoarseCohomology p1_cohomology(const Int& degree);

/// Per-coordinate pushforward degrees for the constant-map obstruction
/// data of (g1, g2) with g3 = (g1 g2)^-1; each value lies in {0,-1,-2}.
/// Requires an abelian diagonal action.
std::vector<int> obstruction_degrees(const LinearAction& action, GroupElement g1, GroupElement g2);

/// Rank of the obstruction bundle for constant maps: the number of
/// coordinates whose pushforward degree is -2 (equivalently h^1 = 1).
std::size_t obstruction_rank(const LinearAction& action, GroupElement g1, GroupElement g2);

}  // namespace orbichow

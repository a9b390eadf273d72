#pragma once

// Components of the space of 3-pointed genus-0 degree-0 twisted maps to
// BG: conjugation orbits of triples (g1, g2, g3) with g1 g2 g3 = e
// (equivalently, principal G-bundles on the thrice-marked sphere with
// constant coarse map). Each component records its automorphism order
// |Z(g1) n Z(g2)|, its evaluation sectors (the third twisted by the
// involution iota), and the marking indices r_i used by gluing.

#include "orbichow/group.hpp"
#include "orbichow/numeric.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace orbichow {

struct ModuliComponent {
  /// Lexicographically least triple in the orbit; g1*g2*g3 = identity.
  std::array<GroupElement, 3> triple{};
  /// |Z(g1) n Z(g2)|; orbit_size * aut_order = |G|.
  std::uint64_t aut_order = 1;
  std::uint64_t orbit_size = 1;
  /// Class indices of (g1, g2, iota(g3)); the third entry is the class
  /// of g3^-1 = g1 g2, i.e. the sector the twisted third evaluation
  /// lands in.
  std::array<std::size_t, 3> eval_sectors{};
  /// Element orders of (g1, g2, g3): the indices of the three markings.
  std::array<std::uint64_t, 3> node_indices{};
};

/// All components, canonically ordered by their representative triple.
/// Throws BoundError when |G| exceeds max_order (the enumeration walks
/// |G|^2 seed pairs).
std::vector<ModuliComponent> enumerate_components(const FiniteGroup& group,
                                                  std::uint64_t max_order = 512);

struct MassCheck {
  Int lhs;  // sum over components of |G| / aut_order
  Int rhs;  // |G|^2
  bool ok = false;
};

/// Groupoid-cardinality consistency: the component masses must add up to
/// the number of (g1, g2) pairs.
MassCheck mass_check(const FiniteGroup& group, const std::vector<ModuliComponent>& components);

/// Index r of the node obtained by gluing marking 3 of c1 to marking 1
/// of c2 with balanced monodromies; nullopt when the sectors do not
/// match (the fibered product over the inertia stack is empty).
std::optional<std::uint64_t> gluing_index(const ModuliComponent& c1, const ModuliComponent& c2);

/// Re-derives the BG structure constants by grouping components on their
/// first two evaluation sectors and summing [C(h) : aut] into the
/// iota-twisted third sector. Must agree with bg_product exactly.
std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Int>>
bg_constants_from_components(const FiniteGroup& group,
                             const std::vector<ModuliComponent>& components);

}  // namespace orbichow

#pragma once

// The stringy product engine.
//
// For X = BG with any finite group G, sector products are integer
// combinations of conjugacy classes: {C1} u {C2} is the sum over orbits
// of G acting by simultaneous conjugation on C1 x C2 of
// [C(h) : Z(a) n Z(b)] * {class of h = ab}. These equal the class-sum
// structure constants of the center of Z[G].
//
// For X = [V/G] with G abelian acting diagonally, the basis product is
//   1_{g1} u 1_{g2} = (prod_j c1(chi_j)^{m_j}) * 1_{g1 g2},
// with m_j = a_j(g1) + a_j(g2) - a_j(g1 g2) in {0,1}, computed from the
// per-coordinate obstruction degrees plus the excess normal direction
// and cross-checked against the age identity. Coefficients live in
// BgRing.
//
// Products for non-abelian G with dim V > 0 are rejected: they would
// need A*(BC(g)) coefficients and non-abelian obstruction data.

#include "orbichow/bg_ring.hpp"
#include "orbichow/inertia.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace orbichow {

/// Element of the stringy Chow group: finitely many sectors, each with an
/// EquivariantClass coefficient (a plain integer constant when dim V = 0
/// over a non-abelian group). No zero coefficients are stored.
struct StringyClass {
  std::map<std::size_t, EquivariantClass> terms;  // sector index -> coefficient

  bool operator==(const StringyClass&) const = default;
  bool empty() const { return terms.empty(); }
};

/// BG structure constants for two conjugacy classes (indices into
/// G.conjugacy_classes()): map from output class index to its
/// nonnegative integer coefficient. Asserts the orbit-weight sums
/// against a direct pair count for each output class.
std::map<std::size_t, Int> bg_product(const FiniteGroup& group, std::size_t class1,
                                      std::size_t class2);

/// Basis product 1_{s1} u 1_{s2} of two sectors.
StringyClass sector_product(const InertiaDecomposition& inertia, const BgRing& ring,
                            std::size_t s1, std::size_t s2);

/// Bilinear extension of sector_product to arbitrary classes.
StringyClass stringy_product(const InertiaDecomposition& inertia, const BgRing& ring,
                             const StringyClass& x, const StringyClass& y);

/// All pairwise basis products, cached; metadata hash keys the instance.
struct RingTable {
  std::shared_ptr<const InertiaDecomposition> inertia;
  BgRing coeff_ring{std::vector<std::uint64_t>{}};
  std::vector<StringyClass> entries;  // row-major size x size
  std::string instance_hash;

  std::size_t size() const { return inertia ? inertia->size() : 0; }
  const StringyClass& product(std::size_t i, std::size_t j) const {
    return entries[i * size() + j];
  }
};

/// The coefficient ring the products of this action live in: BgRing over
/// the group's invariant factors for abelian diagonal actions, Z
/// otherwise.
BgRing coefficient_ring(const LinearAction& action);

/// Deterministic plain-text serialization of group + action; its FNV
/// hash keys tables and caches.
std::string instance_signature(const LinearAction& action);

RingTable ring_table(std::shared_ptr<const InertiaDecomposition> inertia,
                     std::size_t max_basis = 1024);

/// x u y evaluated through a cached table (bilinear in the entries).
StringyClass table_product(const RingTable& table, const StringyClass& x, const StringyClass& y);

struct AssociativityReport {
  bool ok = true;
  std::uint64_t triples_checked = 0;
  std::optional<std::array<std::size_t, 3>> counterexample;
};

/// Exhaustive (x u y) u z = x u (y u z) over all basis triples; reports
/// the lexicographically first counterexample if any.
AssociativityReport verify_associativity(const RingTable& table);

/// Same check on `count` pseudorandom triples of classes with random
/// equivariant (torsion) coefficients, products evaluated through the
/// direct formula rather than the table.
AssociativityReport verify_associativity_random(const RingTable& table, std::size_t count,
                                                std::uint64_t seed);

/// Untwisted sector class is a two-sided unit.
bool check_identity(const RingTable& table);
/// product(i,j) == product(j,i) for all pairs.
bool check_commutativity(const RingTable& table);
/// Every nonzero basis product is homogeneous of degree age_i + age_j.
bool check_graded_products(const RingTable& table);

/// Common total degree (sector age + coefficient degree) of a class, or
/// nullopt when inhomogeneous. The zero class reports degree 0.
std::optional<Rational> grade(const InertiaDecomposition& inertia, const StringyClass& x);

/// Sector count by age.
std::map<Rational, std::uint64_t> poincare_polynomial(const InertiaDecomposition& inertia);

/// Pseudorandom class over the given ring (for property sampling).
StringyClass random_stringy_class(const InertiaDecomposition& inertia, const BgRing& ring,
                                  std::mt19937_64& rng);

}  // namespace orbichow

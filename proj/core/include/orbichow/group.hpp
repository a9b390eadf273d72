#pragma once

// Finite group arithmetic on dense element handles. A group is immutable
// after construction and safe to share read-only across threads.
//
// Canonical element order (fixes all downstream labels):
//   - abelian invariant factors [n1..nm]: lexicographic on exponent
//     vectors, so the identity (0,..,0) is element 0;
//   - permutation generators: lexicographic on image vectors, so the
//     identity permutation is element 0;
//   - explicit multiplication table: the table's own order.

#include "orbichow/errors.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace orbichow {

using GroupElement = std::uint32_t;

/// A permutation of {0, .., points-1} stored as its image vector.
struct Permutation {
  std::vector<std::uint32_t> images;

  bool operator==(const Permutation&) const = default;
};

/// One conjugacy class. The representative is the minimal element handle
/// in the class; centralizer_order is |G| / |members| (orbit-stabilizer).
struct ConjugacyClass {
  GroupElement representative = 0;
  std::vector<GroupElement> members;
  std::uint64_t centralizer_order = 0;

  std::uint64_t size() const { return members.size(); }
};

class FiniteGroup {
 public:
  enum class Kind { Abelian, Permutation, Table };

  static constexpr std::uint64_t kDefaultOrderBound = 100000;

  /// Direct product of cyclic groups Z/n1 x .. x Z/nm. Factors must be
  /// >= 1; an empty list gives the trivial group.
  static FiniteGroup abelian(std::vector<std::uint64_t> invariant_factors,
                             std::uint64_t order_bound = kDefaultOrderBound);

  /// Closure of the given permutations of {0, .., points-1}. Throws
  /// BoundError if the closure exceeds order_bound.
  static FiniteGroup from_permutations(const std::vector<Permutation>& generators,
                                       std::uint32_t points,
                                       std::uint64_t order_bound = kDefaultOrderBound);

  /// Explicit multiplication table, table[a][b] = a*b as element indices.
  /// Validates unit, inverses and associativity (associativity is checked
  /// on all triples up to order 200, on a deterministic pseudorandom
  /// sample of triples above that).
  static FiniteGroup from_table(const std::vector<std::vector<std::uint32_t>>& table,
                                std::uint64_t order_bound = kDefaultOrderBound);

  static FiniteGroup trivial() { return abelian({}); }

  Kind kind() const { return kind_; }
  std::uint64_t order() const { return order_; }
  GroupElement identity() const { return identity_; }
  bool is_abelian() const { return abelian_flag_; }

  GroupElement mul(GroupElement a, GroupElement b) const;
  GroupElement inverse(GroupElement a) const { return inverse_[a]; }
  /// g x g^-1.
  GroupElement conjugate(GroupElement x, GroupElement g) const {
    return mul(mul(g, x), inverse(g));
  }

  /// Least r >= 1 with g^r = identity.
  std::uint64_t element_order(GroupElement g) const;

  /// #{h : hg = gh}, by direct count.
  std::uint64_t centralizer_order(GroupElement g) const;

  /// Classes partition the elements, sorted by (class size,
  /// representative order, representative handle).
  const std::vector<ConjugacyClass>& conjugacy_classes() const { return classes_; }
  std::size_t class_index_of(GroupElement g) const { return class_of_[g]; }
  const ConjugacyClass& class_of(GroupElement g) const { return classes_[class_of_[g]]; }

  /// A generating set: the defining generators for permutation groups,
  /// one unit vector per nontrivial factor for abelian groups, a greedy
  /// small set for table groups. May be empty only for the trivial group.
  const std::vector<GroupElement>& generators() const { return generators_; }

  /// "e" for the identity; exponent tuple "(a1,..,am)" for abelian
  /// elements, cycle notation "(1 2 3)" for permutations, "g<i>" for
  /// table elements.
  std::string element_name(GroupElement g) const;

  /// Finds an element by its name (inverse of element_name).
  std::optional<GroupElement> find_element(const std::string& name) const;

  // Representation-specific accessors, used for canonical serialization.
  const std::vector<std::uint64_t>& invariant_factors() const;
  std::vector<std::uint32_t> exponents(GroupElement g) const;  // abelian only
  std::uint32_t points() const;                                // permutation only
  const std::vector<Permutation>& permutation_generators() const;
  const Permutation& permutation_of(GroupElement g) const;
  const std::vector<std::uint32_t>& flat_table() const;  // table only

 private:
  FiniteGroup() = default;

  void finish_construction();  // inverses, generators (table), classes

  Kind kind_ = Kind::Abelian;
  std::uint64_t order_ = 1;
  GroupElement identity_ = 0;
  bool abelian_flag_ = true;

  // Abelian data.
  std::vector<std::uint64_t> factors_;
  std::vector<std::uint64_t> radix_;  // radix_[i] = product of factors after i

  // Permutation data.
  std::uint32_t points_ = 0;
  std::vector<Permutation> perms_;       // element handle -> permutation
  std::vector<Permutation> input_gens_;  // as supplied, identity dropped
  std::unordered_map<std::uint64_t, std::vector<GroupElement>> perm_buckets_;

  // Table data.
  std::vector<std::uint32_t> table_;  // row-major order x order

  std::vector<GroupElement> inverse_;
  std::vector<GroupElement> generators_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::uint32_t> class_of_;
};

/// Writes a permutation in 1-based cycle notation; "e" for the identity.
std::string cycle_notation(const Permutation& p);

/// Parses one permutation given as a list of 1-based cycles.
Permutation permutation_from_cycles(const std::vector<std::vector<std::uint32_t>>& cycles,
                                    std::uint32_t points);

}  // namespace orbichow

#pragma once

// The inertia decomposition of [V/G]: one sector per conjugacy class,
// labeled by the class of the group element g identified with the
// cyclotomic datum (H = <g>, chi) via the standard primitive-root
// identification over C. Carries automorphism orders for both the
// inertia stack (centralizer C(g)) and its rigidification (C(g)/<g>).
//
// Also: the r-th root criterion for a section of a marking gerbe, stated
// on explicit Picard data.

#include "orbichow/action.hpp"
#include "orbichow/group.hpp"
#include "orbichow/numeric.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace orbichow {

struct Sector {
  std::size_t class_index = 0;  // into group().conjugacy_classes()
  GroupElement representative = 0;
  std::string label;
  std::uint64_t index_r = 1;    // order of the representative
  std::size_t fixed_dim = 0;    // dim V^g
  Rational age = 0;
  std::uint64_t aut_order_x1 = 1;     // |C(g)|
  std::uint64_t aut_order_x1bar = 1;  // |C(g)| / r
  std::uint64_t class_size = 1;
  bool untwisted = false;
};

class InertiaDecomposition {
 public:
  /// One sector per conjugacy class; deterministic order: untwisted
  /// first, then by (age, index_r, representative).
  explicit InertiaDecomposition(std::shared_ptr<const LinearAction> action);

  const LinearAction& action() const { return *action_; }
  const std::shared_ptr<const LinearAction>& action_ptr() const { return action_; }
  const FiniteGroup& group() const { return action_->group(); }

  const std::vector<Sector>& sectors() const { return sectors_; }
  std::size_t size() const { return sectors_.size(); }
  const Sector& sector(std::size_t i) const { return sectors_[i]; }

  std::size_t sector_of_class(std::size_t class_index) const { return by_class_[class_index]; }
  std::size_t sector_of_element(GroupElement g) const {
    return by_class_[group().class_index_of(g)];
  }
  std::size_t untwisted_index() const { return untwisted_; }

  /// The involution swapping a sector with the sector of the inverse
  /// class (chi -> chi^-1); an involution fixing the untwisted sector.
  std::size_t iota(std::size_t sector_index) const { return iota_[sector_index]; }

 private:
  std::shared_ptr<const LinearAction> action_;
  std::vector<Sector> sectors_;
  std::vector<std::size_t> by_class_;  // class index -> sector index
  std::vector<std::size_t> iota_;
  std::size_t untwisted_ = 0;
};

/// Convenience wrapper returning just the sector list.
std::vector<Sector> inertia_components(const std::shared_ptr<const LinearAction>& action);

/// An element of Z^free_rank + sum Z/t_i with its ambient group shape.
struct PicardGroupData {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;  // factors t_i >= 1
  std::vector<Int> element;  // free coords first, then torsion coords reduced mod t_i

  /// Validates shapes and reduces torsion coordinates.
  static PicardGroupData make(std::size_t free_rank, std::vector<Int> torsion,
                              std::vector<Int> element);
};

/// Whether the element is divisible by r in Z^k + sum Z/t_i, i.e. whether
/// r*x = element has a solution: every free coordinate is 0 mod r and
/// every torsion coordinate c satisfies c = 0 mod gcd(r, t). Throws
/// InputError for r < 1.
bool root_section_exists(const PicardGroupData& picard, const Int& r);

}  // namespace orbichow

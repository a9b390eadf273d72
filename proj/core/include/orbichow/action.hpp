#pragma once

// Linear actions of a finite group on C^n recorded as exact eigenvalue
// exponents, plus the age (degree-shifting) bookkeeping derived from them.
//
// Two storage forms:
//   - AbelianDiagonal: the group is presented by invariant factors
//     [n1..nm] and acts diagonally; characters[j][i] is the exponent of
//     coordinate j on the i-th generator (taken mod n_i). Every
//     eigenvalue exponent is derived exactly from these.
//   - ClassEigen: an arbitrary group with explicitly supplied eigenvalue
//     exponents per conjugacy class. Ages and fixed spaces work; ring
//     products do not (see stringy_ring.hpp).

#include "orbichow/group.hpp"
#include "orbichow/numeric.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace orbichow {

/// One eigenvalue exp(2*pi*i*k/r) of g acting on an eigenline, 0 <= k < r,
/// r the order of g.
struct EigenPair {
  std::int64_t k = 0;
  std::int64_t r = 1;

  bool operator==(const EigenPair&) const = default;
  Rational fraction() const { return Rational(k, r); }
};

/// Per-coordinate ages k_j/r in [0,1) and their sum.
struct AgeVector {
  std::vector<Rational> per_coordinate;
  Rational total = 0;
};

class LinearAction {
 public:
  enum class Kind { AbelianDiagonal, ClassEigen };

  /// Diagonal action on C^dim; group must be presented by invariant
  /// factors. `characters` has dim rows of length m, reduced mod n_i.
  static LinearAction abelian_diagonal(std::shared_ptr<const FiniteGroup> group,
                                       std::size_t dim,
                                       std::vector<std::vector<std::int64_t>> characters);

  /// Eigen data per conjugacy class, keyed by class index. Each supplied
  /// list must have dim entries with r = order of the class
  /// representative. Classes may be omitted; querying one then throws.
  static LinearAction class_eigen(std::shared_ptr<const FiniteGroup> group,
                                  std::size_t dim,
                                  std::map<std::size_t, std::vector<EigenPair>> data);

  /// The dim = 0 action (the BG case), valid for any group.
  static LinearAction point(std::shared_ptr<const FiniteGroup> group);

  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
  std::size_t dim() const { return dim_; }
  Kind kind() const { return kind_; }

  /// True when the action carries character data usable by the product
  /// formulas (AbelianDiagonal form).
  bool has_characters() const { return kind_ == Kind::AbelianDiagonal; }
  const std::vector<std::vector<std::int64_t>>& characters() const { return characters_; }
  const std::map<std::size_t, std::vector<EigenPair>>& class_eigen_data() const { return class_eigen_; }

  /// The dim pairs (k_j, r) for g, r = element order of g.
  std::vector<EigenPair> eigen_exponents(GroupElement g) const;

  /// Fractional exponents a_j(g) = k_j / r in [0,1).
  std::vector<Rational> fractional_exponents(GroupElement g) const;

  AgeVector age(GroupElement g) const;
  Rational age_total(GroupElement g) const;

  /// #{j : k_j(g) = 0} = dim of the fixed subspace V^g.
  std::size_t fixed_subspace_dim(GroupElement g) const;

 private:
  LinearAction() = default;

  Kind kind_ = Kind::AbelianDiagonal;
  std::shared_ptr<const FiniteGroup> group_;
  std::size_t dim_ = 0;
  std::vector<std::vector<std::int64_t>> characters_;       // AbelianDiagonal
  std::map<std::size_t, std::vector<EigenPair>> class_eigen_;  // ClassEigen
};

}  // namespace orbichow

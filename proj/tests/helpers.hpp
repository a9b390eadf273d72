#pragma once

// Shared builders for the groups and quotient instances used across the
// test suites.

#include "orbichow/action.hpp"
#include "orbichow/group.hpp"
#include "orbichow/inertia.hpp"
#include "orbichow/stringy_ring.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace orbichow::testing {

inline std::shared_ptr<const FiniteGroup> shared_group(FiniteGroup g) {
  return std::make_shared<FiniteGroup>(std::move(g));
}

inline std::shared_ptr<const FiniteGroup> make_zn(std::uint64_t n) {
  return shared_group(FiniteGroup::abelian({n}));
}

inline std::shared_ptr<const FiniteGroup> make_trivial() {
  return shared_group(FiniteGroup::trivial());
}

inline Permutation perm(std::vector<std::vector<std::uint32_t>> cycles, std::uint32_t points) {
  return permutation_from_cycles(cycles, points);
}

inline std::shared_ptr<const FiniteGroup> make_s3() {
  return shared_group(
      FiniteGroup::from_permutations({perm({{1, 2}}, 3), perm({{1, 2, 3}}, 3)}, 3));
}

inline std::shared_ptr<const FiniteGroup> make_s4() {
  return shared_group(
      FiniteGroup::from_permutations({perm({{1, 2}}, 4), perm({{1, 2, 3, 4}}, 4)}, 4));
}

inline std::shared_ptr<const FiniteGroup> make_a4() {
  return shared_group(
      FiniteGroup::from_permutations({perm({{1, 2, 3}}, 4), perm({{1, 2}, {3, 4}}, 4)}, 4));
}

inline std::shared_ptr<const FiniteGroup> make_d4() {
  return shared_group(
      FiniteGroup::from_permutations({perm({{1, 2, 3, 4}}, 4), perm({{1, 3}}, 4)}, 4));
}

inline std::vector<std::vector<std::uint32_t>> quaternion_table() {
  return {{0, 1, 2, 3, 4, 5, 6, 7}, {1, 0, 3, 2, 5, 4, 7, 6}, {2, 3, 1, 0, 6, 7, 5, 4},
          {3, 2, 0, 1, 7, 6, 4, 5}, {4, 5, 7, 6, 1, 0, 2, 3}, {5, 4, 6, 7, 0, 1, 3, 2},
          {6, 7, 4, 5, 3, 2, 1, 0}, {7, 6, 5, 4, 2, 3, 0, 1}};
}

inline std::shared_ptr<const FiniteGroup> make_q8() {
  return shared_group(FiniteGroup::from_table(quaternion_table()));
}

/// Diagonal action of Z/n1 x .. on C^dim given by character rows.
inline std::shared_ptr<const LinearAction> make_action(
    std::vector<std::uint64_t> factors, std::vector<std::vector<std::int64_t>> characters) {
  auto group = shared_group(FiniteGroup::abelian(std::move(factors)));
  const std::size_t dim = characters.size();
  return std::make_shared<LinearAction>(
      LinearAction::abelian_diagonal(std::move(group), dim, std::move(characters)));
}

inline std::shared_ptr<const LinearAction> make_point(std::shared_ptr<const FiniteGroup> group) {
  return std::make_shared<LinearAction>(LinearAction::point(std::move(group)));
}

inline std::shared_ptr<const InertiaDecomposition> make_inertia(
    std::shared_ptr<const LinearAction> action) {
  return std::make_shared<InertiaDecomposition>(std::move(action));
}

struct NamedInstance {
  std::string name;
  std::shared_ptr<const LinearAction> action;
};

/// BG roster used by the acceptance gate: Z/1..Z/12, S3, S4, D4, Q8, A4.
inline std::vector<NamedInstance> bg_roster() {
  std::vector<NamedInstance> out;
  for (std::uint64_t n = 1; n <= 12; ++n)
    out.push_back({"BZ/" + std::to_string(n), make_point(make_zn(n))});
  out.push_back({"BS3", make_point(make_s3())});
  out.push_back({"BS4", make_point(make_s4())});
  out.push_back({"BD4", make_point(make_d4())});
  out.push_back({"BQ8", make_point(make_q8())});
  out.push_back({"BA4", make_point(make_a4())});
  return out;
}

/// Abelian quotient roster: [C^2/Z/n] (n <= 8) with exponents (1, n-1)
/// and (1,1), [C^3/Z/3] with (1,1,1), and diagonal Z/2 x Z/2 actions on
/// C^2.
inline std::vector<NamedInstance> abelian_roster() {
  std::vector<NamedInstance> out;
  for (std::int64_t n = 2; n <= 8; ++n) {
    out.push_back({"C2/Z" + std::to_string(n) + "(1," + std::to_string(n - 1) + ")",
                   make_action({static_cast<std::uint64_t>(n)}, {{1}, {n - 1}})});
    out.push_back({"C2/Z" + std::to_string(n) + "(1,1)",
                   make_action({static_cast<std::uint64_t>(n)}, {{1}, {1}})});
  }
  out.push_back({"C3/Z3(1,1,1)", make_action({3}, {{1}, {1}, {1}})});
  out.push_back({"C2/Z2xZ2[(1,0),(0,1)]", make_action({2, 2}, {{1, 0}, {0, 1}})});
  out.push_back({"C2/Z2xZ2[(1,1),(0,1)]", make_action({2, 2}, {{1, 1}, {0, 1}})});
  out.push_back({"C2/Z2xZ2[(1,1),(1,0)]", make_action({2, 2}, {{1, 1}, {1, 0}})});
  return out;
}

}  // namespace orbichow::testing
